#include "hardy/commands.hpp"

#include <cmath>
#include <sstream>

#include "hardy/dbr.hpp"
#include "hardy/error.hpp"
#include "hardy/leech.hpp"
#include "hardy/linalg.hpp"

namespace hardy::cmd {

namespace {

using io::Json;
using io::to_json;

template <class Fn>
Result guarded(Fn fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        Result r;
        r.exit_code = exit_code_for(e.code());
        r.message = std::string(code_name(e.code())) + ": " + e.what();
        r.output["error"] = {{"code", code_name(e.code())}, {"message", e.what()}};
        return r;
    } catch (const std::exception& e) {
        Result r;
        r.exit_code = exit_input_error;
        r.message = std::string("error: ") + e.what();
        r.output["error"] = {{"code", "internal"}, {"message", e.what()}};
        return r;
    }
}

Json series_list(const std::vector<TaylorSeries>& parts)
{
    Json out = Json::array();
    for (const auto& p : parts) {
        out.push_back(to_json(p));
    }
    return out;
}

Json certificate_json(const SchurCertificate& c)
{
    Json j;
    j["max_singular_value"] = c.max_singular_value;
    j["min_kernel_eigenvalue"] = c.min_kernel_eigenvalue;
    j["passed"] = c.passed;
    return j;
}

CertifyOptions certify_options(const RunConfig& cfg)
{
    CertifyOptions o;
    o.boundary_samples = cfg.samples;
    o.radius = cfg.radius;
    o.seed = cfg.seed;
    o.sup_tol = cfg.tol;
    o.kernel_tol = cfg.tol;
    return o;
}

std::string format(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Json solution_json(const InterpSolution& sol, const std::string& kind, const std::string& route)
{
    Json out;
    out["kind"] = kind;
    out["route"] = route;
    out["solution"] = to_json(sol.f);
    if (!sol.parts.empty()) {
        out["parts"] = series_list(sol.parts);
    }
    out["data"] = to_json(sol.data);
    out["minimal_norm2"] = sol.minimal_norm2;
    out["norm2"] = sol.norm2;
    out["parametrized"] = sol.parametrized;
    out["residual"] = {{"constraint", sol.constraint_residual},
                       {"norm_identity", sol.norm_identity_residual}};
    return out;
}

Result finish_interp(const InterpSolution& sol, const Matrix& gamma, const std::string& kind,
                     const std::string& route, const RunConfig& cfg)
{
    Result r;
    r.output = solution_json(sol, kind, route);
    const double bound = cfg.tol * std::max(1.0, linalg::max_abs(gamma));
    if (sol.constraint_residual > bound || sol.norm_identity_residual > cfg.tol * std::max(1.0, sol.norm2)) {
        r.exit_code = exit_verification_failed;
        r.message = "solution residuals exceed the tolerance (constraint " + format(sol.constraint_residual)
                    + ", norm identity " + format(sol.norm_identity_residual) + ")";
    } else {
        r.message = "solved; norm^2 = " + format(sol.norm2) + ", minimal norm^2 = " + format(sol.minimal_norm2);
    }
    return r;
}

/// True when every point equals the first one.
bool coincident(const std::vector<cplx>& pts)
{
    for (cplx z : pts) {
        if (z != pts.front()) {
            return false;
        }
    }
    return true;
}

bool has_repeats(const std::vector<cplx>& pts)
{
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (pts[i] == pts[j]) {
                return true;
            }
        }
    }
    return false;
}

Result interpolate_derivative(const DerivativeProblem& pr, const std::optional<std::string>& parameter_json,
                              const InterpolateOptions& opts, const RunConfig& cfg)
{
    require(opts.route == "direct", ErrorCode::invalid_argument,
            "the Schur route applies to linear-functional problems only");
    std::optional<TaylorSeries> g;
    if (parameter_json) {
        const Json pj = io::parse(*parameter_json, "parameter");
        g = pj.is_array() || pj.contains("parts") ? vstack(io::series_list_from(pj)) : io::series_from(pj);
    }
    const auto sol = solve_derivative_constraint(pr, g, cfg.truncation, opts.row, cfg.tol);
    return finish_interp(sol, pr.gamma, "derivative", "direct", cfg);
}

} // namespace

int exit_code_for(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::infeasible:
    case ErrorCode::degenerate:
        return exit_infeasible;
    case ErrorCode::unconstrained:
        return exit_ok;
    default:
        return exit_input_error;
    }
}

Result decompose(const std::string& series_json, const std::string& blaschke_json, const RunConfig& cfg)
{
    return guarded([&] {
        cfg.validate();
        const TaylorSeries f = io::series_from(io::parse(series_json, "series"));
        const BlaschkeProduct b = io::blaschke_from(io::parse(blaschke_json, "blaschke"));
        const auto d = analyze(f, orthonormal_basis(b));
        const double nf = norm2(f);
        double np = 0.0;
        for (const auto& p : d.parts) {
            np += norm2(p);
        }
        const double rel = nf > 0.0 ? std::abs(nf - np) / nf : std::abs(np);
        const double recon = max_abs_diff(synthesize(d), f);

        Result r;
        r.output["blaschke"] = to_json(b);
        r.output["truncation"] = f.size();
        r.output["parts"] = series_list(d.parts);
        r.output["parseval"] = {{"norm2_f", nf}, {"norm2_parts", np}, {"relative_error", rel}};
        r.output["reconstruction_residual"] = recon;
        r.output["tail_estimate"] = d.tail_estimate;
        const bool ok = rel <= cfg.tol && recon <= cfg.tol;
        r.output["passed"] = ok;
        r.exit_code = ok ? exit_ok : exit_verification_failed;
        r.message = (ok ? "decomposed" : "residuals exceed the tolerance") + std::string(": Parseval ")
                    + format(rel) + ", reconstruction " + format(recon);
        return r;
    });
}

Result interpolate(const std::string& problem_json, const std::optional<std::string>& parameter_json,
                   const InterpolateOptions& opts, const RunConfig& cfg)
{
    return guarded([&]() -> Result {
        cfg.validate();
        require(opts.route == "direct" || opts.route == "schur", ErrorCode::invalid_argument,
                "route must be \"direct\" or \"schur\"");
        const Json pj = io::parse(problem_json, "problem");
        const std::string kind = io::problem_kind(pj);
        if (kind == "derivative") {
            return interpolate_derivative(io::derivative_from(pj), parameter_json, opts, cfg);
        }
        const auto pr = io::linear_functional_from(pj);
        if (pr.points.size() > 1 && coincident(pr.points)) {
            DerivativeProblem d;
            d.a = pr.points.front();
            d.xi = {pr.u.sum() * Matrix::Identity(pr.gamma.rows(), pr.gamma.rows())};
            d.gamma = pr.gamma;
            return interpolate_derivative(d, parameter_json, opts, cfg);
        }
        require(!has_repeats(pr.points), ErrorCode::invalid_argument,
                "problems mixing repeated and distinct points are not supported");
        const auto basis = orthonormal_basis(BlaschkeProduct::from_points(pr.points));
        try {
            if (opts.route == "schur") {
                std::optional<SchurFunction> e;
                if (parameter_json) {
                    e = SchurFunction::from_series(io::series_from(io::parse(*parameter_json, "parameter")));
                }
                SchurRouteOptions so;
                so.truncation = cfg.truncation;
                so.tol = cfg.tol;
                const auto sol = solve_via_schur(pr, basis, e, so);
                Result r = finish_interp(sol, pr.gamma, kind, "schur", cfg);
                r.output["certificate"] = certificate_json(certify_schur(*sol.sigma, certify_options(cfg)));
                return r;
            }
            std::optional<std::vector<TaylorSeries>> g;
            if (parameter_json) {
                g = io::series_list_from(io::parse(*parameter_json, "parameter"));
            }
            return finish_interp(solve_linear_functional(pr, basis, g, cfg.truncation), pr.gamma, kind, "direct",
                                 cfg);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::unconstrained) {
                throw;
            }
            Result r;
            r.output["kind"] = kind;
            r.output["route"] = opts.route;
            r.output["unconstrained"] = true;
            r.output["solution"] = to_json(TaylorSeries(pr.gamma.rows(), pr.gamma.cols(), cfg.truncation));
            r.output["minimal_norm2"] = 0.0;
            r.output["norm2"] = 0.0;
            r.message = "unconstrained: u = 0 and gamma = 0, every function solves; the zero solution is reported";
            return r;
        }
    });
}

Result np(const std::string& data_json, const std::optional<std::string>& parameter_json, const RunConfig& cfg)
{
    return guarded([&] {
        cfg.validate();
        const NPData d = io::np_data_from(io::parse(data_json, "np data"));
        std::optional<SchurFunction> e;
        if (parameter_json) {
            e = SchurFunction::from_series(io::series_from(io::parse(*parameter_json, "parameter")));
        }
        NPOptions o;
        o.tol = cfg.tol;
        const auto s = np_solve(d, e, o);
        const double res = interpolation_residual(s, d);
        const auto cert = certify_schur(s, certify_options(cfg));

        Result r;
        r.output["solution"] = to_json(s.series(cfg.truncation));
        r.output["pick_min_eigenvalue"] = linalg::min_eigenvalue(pick_matrix(d));
        r.output["interpolation_residual"] = res;
        r.output["certificate"] = certificate_json(cert);
        const bool ok = res <= cfg.tol && cert.passed;
        r.output["passed"] = ok;
        r.exit_code = ok ? exit_ok : exit_verification_failed;
        r.message = std::string(ok ? "solved" : "verification failed") + ": residual " + format(res)
                    + ", sup norm " + format(cert.max_singular_value);
        return r;
    });
}

Result leech(const std::string& series_json, const std::optional<std::string>& blaschke_json,
             const RunConfig& cfg)
{
    return guarded([&] {
        cfg.validate();
        const TaylorSeries h = io::series_from(io::parse(series_json, "series")).resized(cfg.truncation);
        LeechOptions lo;
        lo.seed = cfg.seed;
        lo.norm_tol = cfg.tol;
        lo.np.tol = cfg.tol;
        std::vector<cplx> at;
        TaylorSeries back(h.rows(), h.cols(), 1);
        Result r;
        std::optional<SchurFunction> s;
        if (blaschke_json) {
            const auto b = io::blaschke_from(io::parse(*blaschke_json, "blaschke"));
            const auto basis = orthonormal_basis(b);
            s = generalized_h2_to_schur(h, basis, lo);
            back = generalized_schur_to_h2(*s, basis, cfg.truncation);
            for (cplx w : ring_samples(lo.samples, lo.seed)) {
                for (cplx z : preimages(b, w)) {
                    at.push_back(z);
                }
            }
            r.output["blaschke"] = to_json(b);
        } else {
            s = h2_to_schur(h, lo);
            back = schur_to_h2(*s, cfg.truncation);
            at = ring_samples(lo.samples, lo.seed);
        }
        double worst = 0.0;
        for (cplx z : at) {
            worst = std::max(worst, linalg::max_abs(eval(back, z) - eval(h, z)));
        }
        Json partition = Json::array();
        for (auto k : s->partition()) {
            partition.push_back(k);
        }
        r.output["partition"] = std::move(partition);
        r.output["sigma"] = to_json(s->series(cfg.truncation));
        r.output["sample_count"] = at.size();
        r.output["round_trip_residual"] = worst;
        const double bound = 1e-6 * cfg.scale();
        r.output["passed"] = worst <= bound;
        r.exit_code = worst <= bound ? exit_ok : exit_verification_failed;
        r.message = std::string(worst <= bound ? "represented" : "round trip failed") + ": residual "
                    + format(worst) + " at " + std::to_string(at.size()) + " points";
        return r;
    });
}

Result verify(const std::string& suite, const RunConfig& cfg)
{
    return guarded([&] {
        const auto reports = run_verify(suite, cfg);
        Result r;
        Json suites = Json::array();
        bool all = true;
        std::string failures;
        for (const auto& rep : reports) {
            Json checks = Json::array();
            for (const auto& c : rep.checks) {
                Json cj;
                cj["name"] = c.name;
                cj["value"] = c.value;
                cj["threshold"] = c.threshold;
                cj["passed"] = c.passed;
                if (!c.error.empty()) {
                    cj["error"] = c.error;
                }
                checks.push_back(std::move(cj));
                if (!c.passed) {
                    failures += "\n  " + rep.suite + " / " + c.name + ": " + format(c.value) + " > "
                                + format(c.threshold) + (c.error.empty() ? "" : " (" + c.error + ")");
                }
            }
            Json sj;
            sj["suite"] = rep.suite;
            sj["passed"] = rep.passed();
            sj["checks"] = std::move(checks);
            suites.push_back(std::move(sj));
            all = all && rep.passed();
        }
        r.output["suites"] = std::move(suites);
        r.output["passed"] = all;
        r.exit_code = all ? exit_ok : exit_verification_failed;
        r.message = all ? "all checks passed" : "verification failed:" + failures;
        return r;
    });
}

Result dbr_check(const std::string& blaschke_json, const std::optional<std::string>& schur_json,
                 const DbrOptions& opts, const RunConfig& cfg)
{
    return guarded([&] {
        cfg.validate();
        const auto b = io::blaschke_from(io::parse(blaschke_json, "blaschke"));
        std::optional<BlaschkeProduct> inner;
        SchurFunction s = SchurFunction::constant(Matrix::Zero(1, 1));
        if (schur_json) {
            const Json sj = io::parse(*schur_json, "schur function");
            if (sj.is_object() && sj.contains("zeros")) {
                inner = io::blaschke_from(sj);
                s = SchurFunction::from_blaschke(*inner);
            } else {
                s = SchurFunction::from_series(io::series_from(sj));
                const auto cert = certify_schur(s, certify_options(cfg));
                require(cert.passed, ErrorCode::invalid_argument,
                        "s is not contractive (sup norm " + format(cert.max_singular_value) + ")");
            }
        }
        const KernelGrid grid{kernel_grid_points(opts.grid_points, opts.grid_radius, cfg.seed), s,
                              orthonormal_basis(b)};
        const auto dec = verify_dbr_decomposition(grid);
        const auto cz = verify_dbr_cuntz(grid);
        const double tol = 1e-10 * cfg.scale();
        const auto report = [](const DbrReport& d) {
            Json j;
            j["residual"] = d.residual;
            j["kb_residual"] = d.kb_residual;
            j["symmetry_residual"] = d.symmetry_residual;
            j["lhs_min_eigenvalue"] = d.lhs_min_eigenvalue;
            j["rhs_min_eigenvalue"] = d.rhs_min_eigenvalue;
            return j;
        };
        Result r;
        r.output["grid_points"] = opts.grid_points;
        r.output["decomposition"] = report(dec);
        r.output["cuntz"] = report(cz);
        bool ok = dec.passed(tol, tol) && cz.passed(tol, tol);
        if (inner) {
            const double proj = inner_projection_residual(*inner, grid.points);
            r.output["inner_projection_residual"] = proj;
            ok = ok && proj <= tol;
        }
        r.output["passed"] = ok;
        r.exit_code = ok ? exit_ok : exit_verification_failed;
        r.message = std::string(ok ? "kernel identities hold" : "kernel identities fail") + ": decomposition "
                    + format(dec.residual) + ", Cuntz " + format(cz.residual);
        return r;
    });
}

} // namespace hardy::cmd
