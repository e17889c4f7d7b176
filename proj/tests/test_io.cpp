#include <doctest.h>

#include "hardy/io.hpp"
#include "support.hpp"

using namespace hardy;
using support::code_of;

TEST_CASE("numbers are printed with 17 significant digits and round-trip exactly")
{
    io::Json j;
    j["x"] = 0.1;
    j["third"] = 1.0 / 3.0;
    j["list"] = io::Json::array({1.0, 2.5});
    const std::string text = io::dump(j);
    CHECK(text.find("0.10000000000000001") != std::string::npos);
    CHECK(text.find("[1, 2.5]") != std::string::npos);
    const auto back = io::parse(text, "test");
    CHECK(back["third"].get<double>() == 1.0 / 3.0);
    CHECK(text.back() == '\n');
}

TEST_CASE("non-finite numbers become null")
{
    io::Json j;
    j["v"] = std::numeric_limits<double>::infinity();
    CHECK(io::dump(j).find("null") != std::string::npos);
}

TEST_CASE("malformed JSON is an input error")
{
    CHECK(code_of([] { io::parse("{\"a\": ", "x"); }) == ErrorCode::invalid_argument);
}

TEST_CASE("complex numbers and matrices")
{
    CHECK(io::complex_from(io::parse("[1, -2]", "z")) == cplx(1, -2));
    CHECK(io::complex_from(io::parse("3", "z")) == cplx(3, 0));
    CHECK(code_of([] { io::complex_from(io::parse("[1, 2, 3]", "z")); }) == ErrorCode::invalid_argument);
    const Matrix m = io::matrix_from(io::parse("[[1, [0, 1]], [2, 3]]", "m"));
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 1) == cplx(0, 1));
    CHECK(io::matrix_from(io::to_json(m)) == m);
}

TEST_CASE("series schema")
{
    const auto f = io::series_from(io::parse(R"({"coeffs": [1, [0, 2], 3]})", "f"));
    CHECK(f.rows() == 1);
    CHECK(f.size() == 3);
    CHECK(f.at(1) == cplx(0, 2));

    const auto g = io::series_from(io::parse(R"({"p": 2, "q": 1, "coeffs": [[1, 2], [3, 4]]})", "g"));
    CHECK(g.rows() == 2);
    CHECK(g[1](1, 0) == cplx(4, 0));
    CHECK(max_abs_diff(io::series_from(io::to_json(g)), g) == 0.0);

    CHECK(code_of([] { io::series_from(io::parse(R"({"coeffs": []})", "f")); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { io::series_from(io::parse(R"({"p": 2, "coeffs": [[1]]})", "f")); })
          == ErrorCode::invalid_argument);
    CHECK(code_of([] { io::series_from(io::parse(R"({"coeffs": "x"})", "f")); }) == ErrorCode::invalid_argument);
}

TEST_CASE("Blaschke schema")
{
    const auto b = io::blaschke_from(io::parse(R"({"zeros": [{"a": [0.1, 0.2], "m": 2}, 0.5], "c": [0, 1]})", "b"));
    CHECK(b.degree() == 3);
    CHECK(b.unimodular() == cplx(0, 1));
    const auto back = io::blaschke_from(io::to_json(b));
    CHECK(back.degree() == 3);
    CHECK(std::abs(back(0.3) - b(0.3)) == 0.0);
    CHECK(code_of([] { io::blaschke_from(io::parse(R"({"zeros": [1.5]})", "b")); })
          == ErrorCode::invalid_argument);
}

TEST_CASE("problem schemas")
{
    const auto pj = io::parse(R"({"kind": "linear_functional", "points": [0, 0.5], "u": [1, 1], "gamma": 1})", "p");
    CHECK(io::problem_kind(pj) == "linear_functional");
    const auto lf = io::linear_functional_from(pj);
    CHECK(lf.points.size() == 2);
    CHECK(lf.gamma.rows() == 1);

    const auto dj = io::parse(R"({"kind": "derivative", "a": 0.2, "M": 2, "xi": [0, 1], "gamma": 0.5})", "p");
    const auto d = io::derivative_from(dj);
    CHECK(d.order() == 2);
    CHECK(d.xi[1](0, 0) == cplx(1, 0));

    CHECK(code_of([] { io::problem_kind(io::parse(R"({"kind": "other"})", "p")); })
          == ErrorCode::invalid_argument);
}

TEST_CASE("NP data schema")
{
    const auto d = io::np_data_from(io::parse(R"({"nodes": [0, 0.5], "xi": [[1, 0], [0, 1]], "eta": [0.2, 0.1]})", "d"));
    CHECK(d.xi.rows() == 2);
    CHECK(d.eta.rows() == 1);
    CHECK(d.nodes.size() == 2);
    CHECK(d.xi(1, 1) == cplx(1, 0));

    const auto c = io::np_data_from(io::parse(R"({"nodes": [0.1], "xi": [1], "eta": [[[0.2, 0.1]]]})", "d"));
    CHECK(c.eta.rows() == 1);
    CHECK(c.eta(0, 0) == cplx(0.2, 0.1));
    CHECK(code_of([] { io::np_data_from(io::parse(R"({"nodes": [0], "xi": [[]], "eta": [1]})", "d")); })
          == ErrorCode::invalid_argument);
    CHECK(code_of([] { io::np_data_from(io::parse(R"({"nodes": [0], "xi": [], "eta": []})", "d")); })
          == ErrorCode::invalid_argument);
}
