// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "hardy_c.h"

TEST_CASE("status names and last error")
{
    CHECK(std::string(hc_status_name(HC_INFEASIBLE)) == "infeasible");
    CHECK(std::string(hc_status_name(HC_OK)) == "ok");
    hc_series* s = nullptr;
    CHECK(hc_series_new(0, 1, 4, &s) == HC_INVALID_ARGUMENT);
    CHECK(s == nullptr);
    CHECK(std::strlen(hc_last_error()) > 0);
    CHECK(std::string(hc_version()).size() > 0);
}

TEST_CASE("series handle")
{
    hc_series* s = nullptr;
    REQUIRE(hc_series_new(1, 1, 3, &s) == HC_OK);
    CHECK(hc_series_rows(s) == 1);
    CHECK(hc_series_size(s) == 3);
    const double one[2] = {1.0, 0.0};
    const double two[2] = {0.0, 2.0};
    REQUIRE(hc_series_set_coeff(s, 0, one) == HC_OK);
    REQUIRE(hc_series_set_coeff(s, 2, two) == HC_OK);
    CHECK(hc_series_set_coeff(s, 3, one) == HC_INVALID_ARGUMENT);

    double v[2];
    REQUIRE(hc_series_eval(s, 0.5, 0.0, v) == HC_OK);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(0.5));
    double n2 = 0.0;
    REQUIRE(hc_series_norm2(s, &n2) == HC_OK);
    CHECK(n2 == doctest::Approx(5.0));

    char* text = nullptr;
    REQUIRE(hc_series_to_json(s, &text) == HC_OK);
    hc_series* back = nullptr;
    REQUIRE(hc_series_from_json(text, &back) == HC_OK);
    double c[2];
    REQUIRE(hc_series_get_coeff(back, 2, c) == HC_OK);
    CHECK(c[1] == 2.0);
    hc_string_free(text);
    hc_series_free(back);
    hc_series_free(s);

    CHECK(hc_series_from_json("{\"coeffs\": []}", &s) == HC_INVALID_ARGUMENT);
}

TEST_CASE("analysis and synthesis through handles")
{
    hc_basis* b = nullptr;
    const double zeros[4] = {0.3, 0.1, -0.4, 0.2};
    REQUIRE(hc_basis_new(zeros, 2, &b) == HC_OK);
    REQUIRE(hc_basis_dimension(b) == 2);
    double bz[2];
    REQUIRE(hc_basis_blaschke_eval(b, 0.3, 0.1, bz) == HC_OK);
    CHECK(std::hypot(bz[0], bz[1]) < 1e-15);

    hc_series* f = nullptr;
    REQUIRE(hc_series_from_json("{\"coeffs\": [1, 0.5, -0.25, [0, 0.125]]}", &f) == HC_OK);
    hc_series* parts[2] = {nullptr, nullptr};
    REQUIRE(hc_analyze(f, b, parts) == HC_OK);
    double total = 0.0;
    for (auto* p : parts) {
        double n = 0.0;
        REQUIRE(hc_series_norm2(p, &n) == HC_OK);
        total += n;
    }
    double nf = 0.0;
    REQUIRE(hc_series_norm2(f, &nf) == HC_OK);
    CHECK(total == doctest::Approx(nf).epsilon(1e-10));

    hc_series* g = nullptr;
    REQUIRE(hc_synthesize(b, parts, hc_series_size(f), &g) == HC_OK);
    for (std::size_t k = 0; k < hc_series_size(f); ++k) {
        double a[2], c[2];
        hc_series_get_coeff(f, k, a);
        hc_series_get_coeff(g, k, c);
        CHECK(std::hypot(a[0] - c[0], a[1] - c[1]) < 1e-10);
    }

    double worst = 1.0;
    REQUIRE(hc_verify_cuntz(b, 128, 8, &worst) == HC_OK);
    CHECK(worst < 1e-9);

    hc_series_free(g);
    hc_series_free(parts[0]);
    hc_series_free(parts[1]);
    hc_series_free(f);
    hc_basis_free(b);
}

TEST_CASE("commands report exit codes and JSON")
{
    const hc_config cfg = hc_config_default();
    CHECK(cfg.truncation == 256);

    hc_result* r = nullptr;
    REQUIRE(hc_cmd_interpolate(R"({"kind": "linear_functional", "points": [0, 0.5], "u": [1, 1], "gamma": 1})",
                               nullptr, nullptr, 0, &cfg, &r)
            == HC_OK);
    CHECK(hc_result_exit_code(r) == 0);
    CHECK(std::string(hc_result_json(r)).find("\"minimal_norm2\": 0.230769230769230") != std::string::npos);
    hc_result_free(r);

    REQUIRE(hc_cmd_interpolate(R"({"kind": "linear_functional", "points": [0], "u": [1], "gamma": 1.2})", nullptr,
                               "schur", 0, &cfg, &r)
            == HC_OK);
    CHECK(hc_result_exit_code(r) == 3);
    CHECK(std::string(hc_result_message(r)).find("infeasible") != std::string::npos);
    hc_result_free(r);

    REQUIRE(hc_cmd_decompose("not json", "{}", &cfg, &r) == HC_OK);
    CHECK(hc_result_exit_code(r) == 2);
    hc_result_free(r);

    hc_config tight = cfg;
    tight.tol = 1e-20;
    REQUIRE(hc_cmd_verify("cuntz", &tight, &r) == HC_OK);
    CHECK(hc_result_exit_code(r) == 1);
    hc_result_free(r);

    CHECK(hc_cmd_verify("cuntz", &cfg, nullptr) == HC_INVALID_ARGUMENT);
    REQUIRE(hc_cmd_decompose(nullptr, "{}", &cfg, &r) == HC_INVALID_ARGUMENT);
    CHECK(r == nullptr);
}
