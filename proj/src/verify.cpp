#include "hardy/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "hardy/cuntz.hpp"
#include "hardy/dbr.hpp"
#include "hardy/error.hpp"
#include "hardy/interp.hpp"
#include "hardy/leech.hpp"
#include "hardy/linalg.hpp"
#include "hardy/random.hpp"

namespace hardy {

namespace {

class Recorder {
public:
    Recorder(std::string suite, const RunConfig& cfg) : cfg_(cfg) { report_.suite = std::move(suite); }

    /// Records value <= base * cfg.scale(); errors count as failures.
    void check(const std::string& name, double base, const std::function<double()>& fn)
    {
        Check c;
        c.name = name;
        c.threshold = base * cfg_.scale();
        try {
            c.value = fn();
            c.passed = std::isfinite(c.value) && c.value <= c.threshold;
        } catch (const std::exception& e) {
            c.value = std::numeric_limits<double>::infinity();
            c.error = e.what();
        }
        report_.checks.push_back(std::move(c));
    }

    /// A yes/no property, recorded as 0 (holds) or 1 (fails).
    void expect(const std::string& name, const std::function<bool()>& fn)
    {
        check(name, 0.0, [&] { return fn() ? 0.0 : 1.0; });
    }

    BatteryReport take() { return std::move(report_); }

private:
    const RunConfig& cfg_;
    BatteryReport report_;
};

SchurFunction random_schur(Random& rng, Eigen::Index p, Eigen::Index q, Eigen::Index deg, double rho)
{
    const Matrix col = rho * rng.unitary(deg + std::max(p, q));
    return SchurFunction::from_realization(col.topLeftCorner(deg, deg), col.block(0, deg, deg, q),
                                           col.block(deg, 0, p, deg), col.block(deg, deg, p, q));
}

CertifyOptions certify_options(const RunConfig& cfg)
{
    CertifyOptions o;
    o.boundary_samples = cfg.samples;
    o.radius = cfg.radius;
    o.seed = cfg.seed;
    o.sup_tol = 1e-8 * cfg.scale();
    o.kernel_tol = 1e-8 * cfg.scale();
    return o;
}

/// How far a certificate is from passing: 0 when contractive and positive.
double certificate_excess(const SchurCertificate& c)
{
    return std::max({0.0, c.max_singular_value - 1.0, -c.min_kernel_eigenvalue});
}

std::string label(const char* base, int k)
{
    return std::string(base) + std::to_string(k);
}

BatteryReport cuntz_battery(const RunConfig& cfg)
{
    Recorder r("cuntz", cfg);
    Random rng(cfg.seed + 1);
    const std::size_t n = cfg.truncation;

    for (int m = 1; m <= 4; ++m) {
        const auto basis = orthonormal_basis(BlaschkeProduct::from_points(rng.separated_points(m, 0.8, 0.1)));
        CuntzReport rep;
        r.check(label("relations, degree ", m) + ": sum S_j S_j^* = I", 1e-9, [&] {
            rep = verify_cuntz(basis, n, 16);
            return rep.sum_residual;
        });
        r.check(label("relations, degree ", m) + ": S_j^* S_j = I", 1e-9,
                [&] { return rep.truncation == 0 ? INFINITY : rep.isometry_residual; });
        r.check(label("relations, degree ", m) + ": orthogonal ranges", 1e-9,
                [&] { return rep.truncation == 0 ? INFINITY : rep.cross_residual; });
    }
    r.check("relations for b = z^2", 1e-9, [&] {
        return verify_cuntz(orthonormal_basis(BlaschkeProduct::single(0.0, 2)), n, 16).worst();
    });

    const auto basis3 = orthonormal_basis(BlaschkeProduct::from_points(rng.separated_points(3, 0.8, 0.1)));
    double recon = 0.0;
    double parseval = 0.0;
    r.check("decomposition: reconstruction", 1e-9, [&] {
        for (int t = 0; t < 20; ++t) {
            const TaylorSeries f = rng.polynomial(1 + t % 2, 1 + (t / 2) % 2, std::min<std::size_t>(31, n - 1), n);
            const auto d = analyze(f, basis3);
            recon = std::max(recon, max_abs_diff(synthesize(d), f));
            double parts = 0.0;
            for (const auto& p : d.parts) {
                parts += norm2(p);
            }
            parseval = std::max(parseval, std::abs(norm2(f) - parts) / norm2(f));
        }
        return recon;
    });
    r.check("decomposition: Parseval (relative)", 1e-8, [&] { return parseval; });

    const std::vector<std::pair<cplx, const char*>> centers{
        {0.0, "0"}, {0.3, "0.3"}, {cplx(0.6, 0.2), "0.6+0.2i"}};
    for (const auto& [a, name] : centers) {
        r.check(std::string("T_a preserves the norm, a = ") + name, 1e-10, [&] {
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
                const TaylorSeries f = rng.polynomial(1, 1, std::min<std::size_t>(15, n - 1), n);
                worst = std::max(worst, std::abs(norm2(t_a(f, a, n)) - norm2(f)));
            }
            return worst;
        });
    }
    r.expect("T_0 is the identity", [&] {
        const TaylorSeries f = rng.polynomial(2, 1, 10, n);
        return max_abs_diff(t_a(f, 0.0, n), f) == 0.0;
    });

    r.check("Gramian equals the Cauchy matrix", 1e-12, [&] {
        const auto pts = rng.separated_points(4, 0.8, 0.1);
        const Matrix p = gramian(state_space(BlaschkeProduct::from_points(pts)));
        double worst = 0.0;
        for (int l = 0; l < 4; ++l) {
            for (int j = 0; j < 4; ++j) {
                worst = std::max(worst, std::abs(p(l, j) - 1.0 / (1.0 - pts[static_cast<std::size_t>(l)]
                                                                        * std::conj(pts[static_cast<std::size_t>(j)]))));
            }
        }
        return worst;
    });
    return r.take();
}

std::vector<cplx> ring_preimages(const BlaschkeProduct& b, const LeechOptions& opts)
{
    std::vector<cplx> out;
    for (cplx w : ring_samples(opts.samples, opts.seed)) {
        for (cplx z : preimages(b, w)) {
            out.push_back(z);
        }
    }
    return out;
}

double worst_at(const TaylorSeries& a, const TaylorSeries& b, const std::vector<cplx>& pts)
{
    double w = 0.0;
    for (cplx z : pts) {
        w = std::max(w, linalg::max_abs(eval(a, z) - eval(b, z)));
    }
    return w;
}

BatteryReport leech_battery(const RunConfig& cfg)
{
    Recorder r("leech", cfg);
    Random rng(cfg.seed + 2);
    const std::size_t n = cfg.truncation;
    const auto copts = certify_options(cfg);

    double np_residual = 0.0;
    double np_cert = 0.0;
    r.check("tangential interpolation residual", 1e-8, [&] {
        for (int t = 0; t < 20; ++t) {
            const Eigen::Index p = 1 + t % 2;
            const Eigen::Index q = 1 + (t / 2) % 2;
            const int k = 1 + t % 4;
            const auto target = random_schur(rng, p, q, 2, 0.9);
            NPData d;
            d.nodes = rng.separated_points(k, 0.8, 0.1);
            d.xi = rng.matrix(p, k);
            d.eta.resize(q, k);
            for (int j = 0; j < k; ++j) {
                d.eta.col(j) = target(d.nodes[static_cast<std::size_t>(j)]).adjoint() * d.xi.col(j);
            }
            const auto s = np_solve(d);
            np_residual = std::max(np_residual, interpolation_residual(s, d));
            np_cert = std::max(np_cert, certificate_excess(certify_schur(s, copts)));
        }
        return np_residual;
    });
    r.check("tangential interpolants are contractive", 1e-8, [&] { return np_cert; });
    r.expect("infeasible single node is rejected", [&] {
        NPData d{{cplx(0.2, 0.1)}, Matrix::Constant(1, 1, 1.0), Matrix::Constant(1, 1, 1.0 + 1e-6)};
        try {
            np_solve(d);
        } catch (const Error& e) {
            return e.code() == ErrorCode::infeasible;
        }
        return false;
    });

    r.check("Schur to H2 keeps [H, H] <= I", 1e-8, [&] {
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            const Eigen::Index q = 1 + t % 2;
            const auto h = schur_to_h2(random_schur(rng, 2 + q, q, 2, 0.999), n);
            worst = std::max(worst, linalg::max_eigenvalue(h2_form(h, h)) - 1.0);
        }
        return std::max(worst, 0.0);
    });
    r.check("geometric series case has norm one", 1e-8, [&] {
        const auto h = schur_to_h2(SchurFunction::constant(Matrix::Constant(2, 1, 1.0 / std::sqrt(2.0))), n);
        return std::abs(norm2(h) - 1.0);
    });

    LeechOptions lopts;
    lopts.seed = cfg.seed;
    r.check("round trip H -> s -> H at the samples", 1e-6, [&] {
        const auto pts = ring_samples(lopts.samples, lopts.seed);
        double worst = 0.0;
        for (std::size_t deg : {2u, 5u}) {
            TaylorSeries h = rng.polynomial(1, 1, deg, n);
            h *= std::sqrt(0.9 / norm2(h));
            worst = std::max(worst, worst_at(schur_to_h2(h2_to_schur(h, lopts), n), h, pts));
        }
        return worst;
    });
    r.check("generalized representation for b = z", 1e-12, [&] {
        const auto basis = orthonormal_basis(BlaschkeProduct::single(0.0));
        const auto s = random_schur(rng, 2, 1, 2, 0.95);
        return max_abs_diff(schur_to_h2(s, n), generalized_schur_to_h2(s, basis, n));
    });
    for (int m : {2, 3}) {
        r.check(label("generalized round trip, degree ", m), 1e-6, [&] {
            const auto basis = orthonormal_basis(BlaschkeProduct::from_points(rng.separated_points(m, 0.7, 0.1)));
            TaylorSeries h = rng.polynomial(1, 1, 4, n);
            h *= std::sqrt(0.9 / norm2(h));
            const auto s = generalized_h2_to_schur(h, basis, lopts);
            return worst_at(generalized_schur_to_h2(s, basis, n), h, ring_preimages(basis.blaschke(), lopts));
        });
    }
    return r.take();
}

BatteryReport dbr_battery(const RunConfig& cfg)
{
    Recorder r("dbr", cfg);
    Random rng(cfg.seed + 3);
    const auto pts = kernel_grid_points(32, 0.95, cfg.seed);
    const auto zero = SchurFunction::constant(Matrix::Zero(1, 1));
    const auto ident = SchurFunction::from_blaschke(BlaschkeProduct::single(0.0));
    const auto b2 = orthonormal_basis(BlaschkeProduct::from_points({0.2, -0.5}));

    r.check("decomposition, s = 0", 1e-12, [&] {
        const auto rep = verify_dbr_decomposition({pts, zero, b2});
        return std::max(rep.residual, rep.kb_residual);
    });
    r.check("decomposition, s = z", 1e-12, [&] { return verify_dbr_decomposition({pts, ident, b2}).residual; });
    r.check("decomposition, s = b_0.3", 1e-10, [&] {
        const auto s = SchurFunction::from_blaschke(BlaschkeProduct::single(0.3));
        return verify_dbr_decomposition({pts, s, b2}).residual;
    });
    r.check("Cuntz kernel identity, s = 0", 1e-12, [&] { return verify_dbr_cuntz({pts, zero, b2}).residual; });
    r.check("Cuntz kernel identity, one channel", 1e-12, [&] {
        const auto s = SchurFunction::from_blaschke(BlaschkeProduct::single(0.3));
        return verify_dbr_cuntz({pts, s, orthonormal_basis(BlaschkeProduct::single(cplx(0.4, 0.2)))}).residual;
    });
    for (int m = 1; m <= 3; ++m) {
        const auto s = random_schur(rng, 1, 1, 2, 0.9);
        const auto basis = orthonormal_basis(BlaschkeProduct::from_points(rng.separated_points(m, 0.8, 0.1)));
        DbrReport dec;
        DbrReport cz;
        r.check(label("decomposition, rational s, degree ", m), 1e-10, [&] {
            dec = verify_dbr_decomposition({pts, s, basis});
            return std::max({dec.residual, dec.kb_residual, dec.symmetry_residual});
        });
        r.check(label("Cuntz kernel identity, rational s, degree ", m), 1e-10, [&] {
            cz = verify_dbr_cuntz({pts, s, basis});
            return std::max(cz.residual, cz.symmetry_residual);
        });
        r.check(label("positive Grams, degree ", m), 1e-10, [&] {
            return std::max({0.0, -dec.lhs_min_eigenvalue, -dec.rhs_min_eigenvalue, -cz.rhs_min_eigenvalue});
        });
    }
    r.check("inner s: projection kernel", 1e-10, [&] {
        return inner_projection_residual(BlaschkeProduct({{cplx(0.1, 0.5), 2}, {-0.6, 1}}),
                                         kernel_grid_points(12, 0.9, cfg.seed + 1));
    });
    return r.take();
}

BatteryReport interp_battery(const RunConfig& cfg)
{
    Recorder r("interp", cfg);
    Random rng(cfg.seed + 4);
    const std::size_t n = cfg.truncation;

    r.check("two-point minimal norm is 3/13", 1e-9, [&] {
        LinearFunctionalProblem pr{{0.0, 0.5}, RowVector::Ones(2), Matrix::Ones(1, 1)};
        const auto sol = solve_linear_functional(pr, orthonormal_basis(BlaschkeProduct::from_points(pr.points)),
                                                 std::nullopt, n);
        return std::abs(sol.norm2 - 3.0 / 13.0);
    });
    double identity = 0.0;
    r.check("linear functional constraint", 1e-9, [&] {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const int m = 1 + t % 4;
            LinearFunctionalProblem pr{rng.separated_points(m, 0.8, 0.1), rng.matrix(1, m), rng.matrix(1, 1)};
            std::vector<TaylorSeries> g;
            for (int j = 0; j < m; ++j) {
                g.push_back(0.5 * rng.polynomial(1, 1, 4, 5));
            }
            const auto sol = solve_linear_functional(pr, orthonormal_basis(BlaschkeProduct::from_points(pr.points)),
                                                     g, n);
            worst = std::max(worst, sol.constraint_residual);
            identity = std::max(identity, sol.norm_identity_residual);
        }
        return worst;
    });
    r.check("linear functional norm identity", 1e-8, [&] { return identity; });
    r.check("derivative: point evaluation minimal norm", 1e-9, [&] {
        const cplx a(0.3, -0.4);
        const DerivativeProblem pr{a, {Matrix::Ones(1, 1)}, Matrix::Constant(1, 1, cplx(0.5, 0.5))};
        return std::abs(solve_derivative_constraint(pr, std::nullopt, n).norm2 - 0.5 * (1.0 - std::norm(a)));
    });
    r.check("derivative: norm identity with a parameter", 1e-8, [&] {
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            const int m = 1 + t % 3;
            DerivativeProblem pr;
            pr.a = rng.in_disk(0.6);
            for (int i = 0; i < m; ++i) {
                pr.xi.push_back(rng.matrix(1, 1));
            }
            pr.gamma = rng.matrix(1, 1);
            const auto sol = solve_derivative_constraint(pr, 0.5 * rng.polynomial(m, 1, 3, 4), n);
            worst = std::max({worst, sol.norm_identity_residual, sol.constraint_residual});
        }
        return worst;
    });
    r.check("Schur route constraint and norm", 1e-8, [&] {
        LinearFunctionalProblem pr{{0.0, 0.5}, RowVector::Ones(2), Matrix::Ones(1, 1)};
        SchurRouteOptions o;
        o.truncation = n;
        o.tol = cfg.tol;
        const auto sol = solve_via_schur(pr, orthonormal_basis(BlaschkeProduct::from_points(pr.points)), std::nullopt, o);
        return std::max(sol.constraint_residual, std::max(0.0, norm2(sol.f) - 1.0));
    });
    return r.take();
}

} // namespace

void RunConfig::validate() const
{
    require(truncation >= 16, ErrorCode::invalid_argument, "truncation must be at least 16");
    require(tol > 0.0 && std::isfinite(tol), ErrorCode::invalid_argument, "tolerance must be positive");
    require(radius > 0.0 && radius < 1.0, ErrorCode::invalid_argument, "radius must lie in (0, 1)");
    require(samples >= 8, ErrorCode::invalid_argument, "need at least 8 boundary samples");
}

bool BatteryReport::passed() const
{
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

const Check* BatteryReport::worst() const
{
    const Check* best = nullptr;
    double ratio = -1.0;
    const bool ok = passed();
    for (const auto& c : checks) {
        if (!ok && c.passed) {
            continue;
        }
        const double q = c.threshold > 0.0 ? c.value / c.threshold : (c.value > 0.0 ? INFINITY : 0.0);
        if (best == nullptr || q > ratio) {
            best = &c;
            ratio = q;
        }
    }
    return best;
}

const std::vector<std::string>& battery_names()
{
    static const std::vector<std::string> names{"cuntz", "leech", "dbr", "interp"};
    return names;
}

BatteryReport run_battery(const std::string& suite, const RunConfig& cfg)
{
    cfg.validate();
    if (suite == "cuntz") {
        return cuntz_battery(cfg);
    }
    if (suite == "leech") {
        return leech_battery(cfg);
    }
    if (suite == "dbr") {
        return dbr_battery(cfg);
    }
    if (suite == "interp") {
        return interp_battery(cfg);
    }
    fail(ErrorCode::invalid_argument, "unknown verification suite \"" + suite + "\"");
}

std::vector<BatteryReport> run_verify(const std::string& selector, const RunConfig& cfg)
{
    std::vector<BatteryReport> out;
    if (selector == "all") {
        for (const auto& name : battery_names()) {
            out.push_back(run_battery(name, cfg));
        }
    } else {
        out.push_back(run_battery(selector, cfg));
    }
    return out;
}

} // namespace hardy
