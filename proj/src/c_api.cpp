#include "hardy_c.h"

#include <cstring>
#include <new>
#include <string>

#include "hardy/commands.hpp"
#include "hardy/cuntz.hpp"

struct hc_result {
    int exit_code = 0;
    std::string json;
    std::string message;
};

struct hc_series {
    hardy::TaylorSeries f;
};

struct hc_basis {
    hardy::ModelBasis basis;
};

namespace {

using hardy::cplx;
using hardy::ErrorCode;

thread_local std::string last_error;

hc_status status_of(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_argument: return HC_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return HC_DIMENSION_MISMATCH;
    case ErrorCode::infeasible: return HC_INFEASIBLE;
    case ErrorCode::degenerate: return HC_DEGENERATE;
    case ErrorCode::unconstrained: return HC_UNCONSTRAINED;
    case ErrorCode::not_convergent: return HC_NOT_CONVERGENT;
    case ErrorCode::singular: return HC_SINGULAR;
    case ErrorCode::truncation_too_small: return HC_TRUNCATION_TOO_SMALL;
    }
    return HC_INTERNAL_ERROR;
}

hc_status set_error(hc_status status, const char* what)
{
    try {
        last_error = what;
    } catch (...) {
        // Keep whatever message was there; the status still reports the failure.
    }
    return status;
}

/// Runs fn, translating exceptions into statuses.
template <class Fn>
hc_status guard(Fn&& fn) noexcept
{
    try {
        fn();
        return HC_OK;
    } catch (const hardy::Error& e) {
        return set_error(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(HC_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return set_error(HC_INTERNAL_ERROR, e.what());
    } catch (...) {
        return set_error(HC_INTERNAL_ERROR, "unknown error");
    }
}

void need(const void* p, const char* name)
{
    if (p == nullptr) {
        hardy::fail(ErrorCode::invalid_argument, std::string(name) + " must not be NULL");
    }
}

hardy::RunConfig run_config(const hc_config* c)
{
    hardy::RunConfig cfg;
    if (c != nullptr) {
        cfg.truncation = c->truncation;
        cfg.tol = c->tol;
        cfg.samples = c->samples;
        cfg.radius = c->radius;
        cfg.seed = c->seed;
    }
    return cfg;
}

std::optional<std::string> opt(const char* s)
{
    return s == nullptr ? std::nullopt : std::optional<std::string>(s);
}

hc_status emit(hardy::cmd::Result&& r, hc_result** out)
{
    auto* res = new hc_result;
    res->exit_code = r.exit_code;
    try {
        res->json = hardy::io::dump(r.output);
        res->message = std::move(r.message);
    } catch (...) {
        delete res;
        throw;
    }
    *out = res;
    return HC_OK;
}

template <class Fn>
hc_status run_command(hc_result** out, Fn&& fn) noexcept
{
    if (out == nullptr) {
        return set_error(HC_INVALID_ARGUMENT, "out must not be NULL");
    }
    *out = nullptr;
    return guard([&] { emit(fn(), out); });
}

cplx pair(const double* v, std::size_t k)
{
    return {v[2 * k], v[2 * k + 1]};
}

void write_matrix(const hardy::Matrix& m, double* values)
{
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        values[2 * k] = m.data()[k].real();
        values[2 * k + 1] = m.data()[k].imag();
    }
}

void check_index(const hc_series* s, std::size_t k)
{
    need(s, "series");
    if (k >= s->f.size()) {
        hardy::fail(ErrorCode::invalid_argument, "coefficient index " + std::to_string(k) + " out of range");
    }
}

} // namespace

extern "C" {

const char* hc_status_name(hc_status status)
{
    switch (status) {
    case HC_OK: return "ok";
    case HC_INVALID_ARGUMENT: return "invalid_argument";
    case HC_DIMENSION_MISMATCH: return "dimension_mismatch";
    case HC_INFEASIBLE: return "infeasible";
    case HC_DEGENERATE: return "degenerate";
    case HC_UNCONSTRAINED: return "unconstrained";
    case HC_NOT_CONVERGENT: return "not_convergent";
    case HC_SINGULAR: return "singular";
    case HC_TRUNCATION_TOO_SMALL: return "truncation_too_small";
    case HC_OUT_OF_MEMORY: return "out_of_memory";
    case HC_INTERNAL_ERROR: return "internal_error";
    }
    return "unknown";
}

const char* hc_last_error(void)
{
    return last_error.c_str();
}

const char* hc_version(void)
{
    return HARDY_VERSION;
}

hc_config hc_config_default(void)
{
    const hardy::RunConfig d;
    return hc_config{d.truncation, d.tol, d.samples, d.radius, d.seed};
}

int hc_result_exit_code(const hc_result* result)
{
    return result == nullptr ? hardy::cmd::exit_input_error : result->exit_code;
}

const char* hc_result_json(const hc_result* result)
{
    return result == nullptr ? "" : result->json.c_str();
}

const char* hc_result_message(const hc_result* result)
{
    return result == nullptr ? "" : result->message.c_str();
}

void hc_result_free(hc_result* result)
{
    delete result;
}

hc_status hc_cmd_decompose(const char* series_json, const char* blaschke_json, const hc_config* config,
                           hc_result** out)
{
    return run_command(out, [&] {
        need(series_json, "series_json");
        need(blaschke_json, "blaschke_json");
        return hardy::cmd::decompose(series_json, blaschke_json, run_config(config));
    });
}

hc_status hc_cmd_interpolate(const char* problem_json, const char* parameter_json, const char* route,
                             int cauchy_rows, const hc_config* config, hc_result** out)
{
    return run_command(out, [&] {
        need(problem_json, "problem_json");
        hardy::cmd::InterpolateOptions o;
        if (route != nullptr) {
            o.route = route;
        }
        o.row = cauchy_rows ? hardy::RowKind::cauchy : hardy::RowKind::orthonormal;
        return hardy::cmd::interpolate(problem_json, opt(parameter_json), o, run_config(config));
    });
}

hc_status hc_cmd_np(const char* data_json, const char* parameter_json, const hc_config* config, hc_result** out)
{
    return run_command(out, [&] {
        need(data_json, "data_json");
        return hardy::cmd::np(data_json, opt(parameter_json), run_config(config));
    });
}

hc_status hc_cmd_leech(const char* series_json, const char* blaschke_json, const hc_config* config,
                       hc_result** out)
{
    return run_command(out, [&] {
        need(series_json, "series_json");
        return hardy::cmd::leech(series_json, opt(blaschke_json), run_config(config));
    });
}

hc_status hc_cmd_verify(const char* suite, const hc_config* config, hc_result** out)
{
    return run_command(out, [&] { return hardy::cmd::verify(suite == nullptr ? "all" : suite, run_config(config)); });
}

hc_status hc_cmd_dbr_check(const char* blaschke_json, const char* schur_json, int grid_points, double grid_radius,
                           const hc_config* config, hc_result** out)
{
    return run_command(out, [&] {
        need(blaschke_json, "blaschke_json");
        hardy::cmd::DbrOptions o;
        if (grid_points > 0) {
            o.grid_points = grid_points;
        }
        if (grid_radius > 0.0) {
            o.grid_radius = grid_radius;
        }
        return hardy::cmd::dbr_check(blaschke_json, opt(schur_json), o, run_config(config));
    });
}

hc_status hc_series_new(size_t rows, size_t cols, size_t n, hc_series** out)
{
    return guard([&] {
        need(out, "out");
        hardy::require(rows > 0 && cols > 0 && n > 0, ErrorCode::invalid_argument,
                       "series dimensions and length must be positive");
        *out = new hc_series{
            hardy::TaylorSeries(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols), n)};
    });
}

hc_status hc_series_from_json(const char* json, hc_series** out)
{
    return guard([&] {
        need(json, "json");
        need(out, "out");
        *out = new hc_series{hardy::io::series_from(hardy::io::parse(json, "series"))};
    });
}

hc_status hc_series_to_json(const hc_series* series, char** out)
{
    return guard([&] {
        need(series, "series");
        need(out, "out");
        const std::string text = hardy::io::dump(hardy::io::to_json(series->f));
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

void hc_series_free(hc_series* series)
{
    delete series;
}

size_t hc_series_rows(const hc_series* series)
{
    return series == nullptr ? 0 : static_cast<size_t>(series->f.rows());
}

size_t hc_series_cols(const hc_series* series)
{
    return series == nullptr ? 0 : static_cast<size_t>(series->f.cols());
}

size_t hc_series_size(const hc_series* series)
{
    return series == nullptr ? 0 : series->f.size();
}

hc_status hc_series_get_coeff(const hc_series* series, size_t k, double* values)
{
    return guard([&] {
        check_index(series, k);
        need(values, "values");
        write_matrix(series->f[k], values);
    });
}

hc_status hc_series_set_coeff(hc_series* series, size_t k, const double* values)
{
    return guard([&] {
        check_index(series, k);
        need(values, "values");
        hardy::Matrix& m = series->f[k];
        for (Eigen::Index i = 0; i < m.size(); ++i) {
            m.data()[i] = pair(values, static_cast<std::size_t>(i));
        }
    });
}

hc_status hc_series_eval(const hc_series* series, double re, double im, double* values)
{
    return guard([&] {
        need(series, "series");
        need(values, "values");
        write_matrix(hardy::eval(series->f, cplx(re, im)), values);
    });
}

hc_status hc_series_norm2(const hc_series* series, double* out)
{
    return guard([&] {
        need(series, "series");
        need(out, "out");
        *out = hardy::norm2(series->f);
    });
}

hc_status hc_basis_new(const double* zeros, size_t count, hc_basis** out)
{
    return guard([&] {
        need(out, "out");
        hardy::require(count > 0, ErrorCode::invalid_argument, "a Blaschke product needs at least one zero");
        need(zeros, "zeros");
        std::vector<cplx> pts(count);
        for (std::size_t k = 0; k < count; ++k) {
            pts[k] = pair(zeros, k);
        }
        *out = new hc_basis{hardy::orthonormal_basis(hardy::BlaschkeProduct::from_points(pts))};
    });
}

hc_status hc_basis_from_json(const char* blaschke_json, hc_basis** out)
{
    return guard([&] {
        need(blaschke_json, "blaschke_json");
        need(out, "out");
        const auto b = hardy::io::blaschke_from(hardy::io::parse(blaschke_json, "blaschke"));
        *out = new hc_basis{hardy::orthonormal_basis(b)};
    });
}

void hc_basis_free(hc_basis* basis)
{
    delete basis;
}

size_t hc_basis_dimension(const hc_basis* basis)
{
    return basis == nullptr ? 0 : static_cast<size_t>(basis->basis.dimension());
}

hc_status hc_basis_blaschke_eval(const hc_basis* basis, double re, double im, double* value)
{
    return guard([&] {
        need(basis, "basis");
        need(value, "value");
        const cplx v = basis->basis.blaschke()(cplx(re, im));
        value[0] = v.real();
        value[1] = v.imag();
    });
}

hc_status hc_basis_row(const hc_basis* basis, double re, double im, double* values)
{
    return guard([&] {
        need(basis, "basis");
        need(values, "values");
        write_matrix(basis->basis.row(cplx(re, im)), values);
    });
}

hc_status hc_analyze(const hc_series* f, const hc_basis* basis, hc_series** parts)
{
    return guard([&] {
        need(f, "f");
        need(basis, "basis");
        need(parts, "parts");
        auto d = hardy::analyze(f->f, basis->basis);
        std::vector<hc_series*> made;
        try {
            for (auto& p : d.parts) {
                made.push_back(new hc_series{std::move(p)});
            }
        } catch (...) {
            for (auto* m : made) {
                delete m;
            }
            throw;
        }
        for (std::size_t j = 0; j < made.size(); ++j) {
            parts[j] = made[j];
        }
    });
}

hc_status hc_synthesize(const hc_basis* basis, hc_series* const* parts, size_t n, hc_series** out)
{
    return guard([&] {
        need(basis, "basis");
        need(parts, "parts");
        need(out, "out");
        std::vector<hardy::TaylorSeries> ps;
        for (int j = 0; j < basis->basis.dimension(); ++j) {
            need(parts[j], "parts[j]");
            ps.push_back(parts[j]->f);
        }
        *out = new hc_series{hardy::synthesize(basis->basis, ps, n)};
    });
}

hc_status hc_verify_cuntz(const hc_basis* basis, size_t n, int deg, double* worst)
{
    return guard([&] {
        need(basis, "basis");
        need(worst, "worst");
        *worst = hardy::verify_cuntz(basis->basis, n, deg).worst();
    });
}

void hc_string_free(char* str)
{
    delete[] str;
}

} // extern "C"
