#include "hardy/pick.hpp"

#include <cmath>
#include <sstream>

#include "hardy/error.hpp"
#include "hardy/linalg.hpp"

namespace hardy {

namespace {

class ResolventImpl final : public MatrixFunction::Impl {
public:
    ResolventImpl(Matrix u, std::vector<cplx> w, Matrix k)
        : u_(std::move(u)), w_(std::move(w)), k_(std::move(k))
    {
    }

    Matrix eval(cplx z) const override
    {
        const Eigen::Index m = u_.cols();
        Matrix g = u_.adjoint();
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g.col(j) /= 1.0 - z * std::conj(w_[static_cast<std::size_t>(j)]);
        }
        return Matrix::Identity(m, m) - (1.0 - z) * g * k_;
    }

    TaylorSeries series(std::size_t n) const override
    {
        const Eigen::Index m = u_.cols();
        const Eigen::Index count = u_.rows();
        TaylorSeries out(m, m, n);
        Vector wpow = Vector::Ones(count);
        Vector wconj(count);
        for (Eigen::Index j = 0; j < count; ++j) {
            wconj(j) = std::conj(w_[static_cast<std::size_t>(j)]);
        }
        const Matrix uh = u_.adjoint();
        Matrix prev = Matrix::Zero(m, m);
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix gk = uh * wpow.asDiagonal() * k_;
            out[k] = -(gk - prev);
            if (k == 0) {
                out[k] += Matrix::Identity(m, m);
            }
            prev = gk;
            wpow = wpow.cwiseProduct(wconj);
        }
        return out;
    }

private:
    Matrix u_;
    std::vector<cplx> w_;
    Matrix k_;
};

/// Halmos extension of a strict contraction k (q x p): a J-unitary constant
/// mapping the parameter 0 to k^*.
Matrix halmos(const Matrix& k)
{
    const Eigen::Index q = k.rows();
    const Eigen::Index p = k.cols();
    const Matrix left = linalg::inv_sqrt_pd(Matrix::Identity(p, p) - k.adjoint() * k);
    const Matrix right = linalg::inv_sqrt_pd(Matrix::Identity(q, q) - k * k.adjoint());
    Matrix v(p + q, p + q);
    v.topLeftCorner(p, p) = left;
    v.topRightCorner(p, q) = k.adjoint() * right;
    v.bottomLeftCorner(q, p) = k * left;
    v.bottomRightCorner(q, q) = right;
    return v;
}

std::string format_eig(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

void NPData::validate() const
{
    const auto n = static_cast<Eigen::Index>(nodes.size());
    require(n >= 1, ErrorCode::invalid_argument, "interpolation data needs at least one node");
    require(xi.cols() == n && eta.cols() == n && xi.rows() >= 1 && eta.rows() >= 1,
            ErrorCode::dimension_mismatch, "xi and eta need one column per node");
    for (Eigen::Index j = 0; j < n; ++j) {
        const cplx w = nodes[static_cast<std::size_t>(j)];
        require(std::isfinite(w.real()) && std::isfinite(w.imag()) && std::abs(w) < 1.0,
                ErrorCode::invalid_argument, "interpolation nodes must lie in the open disk");
        require(xi.col(j).norm() > 0.0, ErrorCode::invalid_argument,
                "direction vectors xi must be non-zero");
    }
    require(xi.allFinite() && eta.allFinite(), ErrorCode::invalid_argument,
            "interpolation data must be finite");
}

Matrix pick_matrix(const NPData& data)
{
    data.validate();
    const auto n = static_cast<Eigen::Index>(data.size());
    Matrix p = data.xi.adjoint() * data.xi - data.eta.adjoint() * data.eta;
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index j = 0; j < n; ++j) {
            p(l, j) /= 1.0 - data.nodes[static_cast<std::size_t>(l)]
                                 * std::conj(data.nodes[static_cast<std::size_t>(j)]);
        }
    }
    return linalg::hermitian_part(p);
}

Feasibility np_feasible(const NPData& data, double tol)
{
    const double lam = linalg::min_eigenvalue(pick_matrix(data));
    return {lam >= -tol, lam};
}

MatrixFunction resolvent_matrix(const NPData& data)
{
    const Matrix pick = pick_matrix(data);
    const auto n = static_cast<Eigen::Index>(data.size());
    const Eigen::Index p = data.p();
    const Eigen::Index q = data.q();
    const Eigen::Index m = p + q;

    Matrix u(n, m);
    u.leftCols(p) = data.xi.adjoint();
    u.rightCols(q) = data.eta.adjoint();
    Matrix uj = u;
    uj.rightCols(q) *= -1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        uj.row(j) /= 1.0 - data.nodes[static_cast<std::size_t>(j)];
    }
    Eigen::FullPivLU<Matrix> lu(pick);
    require(lu.isInvertible(), ErrorCode::degenerate, "Pick matrix is singular");
    Matrix k = lu.solve(uj);
    return {m, m, std::make_shared<ResolventImpl>(std::move(u), data.nodes, std::move(k))};
}

SchurFunction np_solve(const NPData& data, const std::optional<SchurFunction>& parameter,
                       const NPOptions& opts)
{
    const Matrix pick = pick_matrix(data);
    const Eigen::Index p = data.p();
    const Eigen::Index q = data.q();
    Eigen::SelfAdjointEigenSolver<Matrix> es(pick, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo < -opts.tol) {
        fail(ErrorCode::infeasible,
             "Pick matrix is not positive semidefinite (smallest eigenvalue " + format_eig(lo)
                 + ")");
    }

    // Size of the positive part of the Pick matrix, used to recognise a
    // Pick matrix that vanishes identically.
    double ref = 1.0;
    for (std::size_t j = 0; j < data.size(); ++j) {
        ref = std::max(ref, data.xi.col(static_cast<Eigen::Index>(j)).squaredNorm()
                                / (1.0 - std::norm(data.nodes[j])));
    }
    if (std::max(std::abs(lo), std::abs(hi)) <= opts.degeneracy * ref) {
        require(!parameter, ErrorCode::degenerate,
                "zero Pick matrix: the solution set has no parametrisation here");
        const Matrix x = data.xi.adjoint();
        const Matrix y = data.eta.adjoint();
        const Matrix s0 = linalg::pinv(x) * y;
        require(linalg::max_abs(x * s0 - y) <= 1e-10 * std::max(1.0, linalg::max_abs(y))
                    && linalg::max_singular_value(s0) <= 1.0 + opts.tol,
                ErrorCode::degenerate, "zero Pick matrix without a constant solution");
        return SchurFunction::constant(s0);
    }
    if (lo <= opts.degeneracy * std::max(hi, 1.0)) {
        fail(ErrorCode::degenerate, "Pick matrix is singular (smallest eigenvalue "
                                        + format_eig(lo) + "); degenerate problems are not solved");
    }

    const MatrixFunction theta = resolvent_matrix(data);
    const cplx omega = opts.entropy_point.value_or(data.nodes.back());
    require(std::abs(omega) < 1.0, ErrorCode::invalid_argument,
            "entropy point must lie in the open disk");
    const Matrix t = theta(omega);
    const Matrix k_omega = -t.bottomRightCorner(q, q).partialPivLu().solve(t.bottomLeftCorner(q, p));
    require(linalg::max_singular_value(k_omega) < 1.0, ErrorCode::degenerate,
            "resolvent normalisation is not strictly contractive");

    MatrixFunction inner = MatrixFunction::constant(k_omega.adjoint());
    if (parameter) {
        require(parameter->rows() == p && parameter->cols() == q, ErrorCode::dimension_mismatch,
                "Schur parameter must be p x q");
        inner = linear_fractional(MatrixFunction::constant(halmos(k_omega)), p,
                                  parameter->function());
    }
    return SchurFunction(linear_fractional(theta, p, inner));
}

double interpolation_residual(const SchurFunction& s, const NPData& data)
{
    double worst = 0.0;
    for (std::size_t j = 0; j < data.size(); ++j) {
        const auto col = static_cast<Eigen::Index>(j);
        const Vector r = s(data.nodes[j]).adjoint() * data.xi.col(col) - data.eta.col(col);
        worst = std::max(worst, r.norm());
    }
    return worst;
}

SchurFunction origin_tangential_solve(const Matrix& x, const Matrix& gamma,
                                      const std::optional<SchurFunction>& parameter, double tol)
{
    require(x.rows() >= 1 && x.cols() >= 1 && gamma.rows() == x.rows() && gamma.cols() >= 1,
            ErrorCode::dimension_mismatch, "origin problem: X is r x n and gamma is r x q");
    const Matrix s0 = linalg::pinv(x) * gamma;
    require(linalg::max_abs(x * s0 - gamma) <= 1e-10 * std::max(1.0, linalg::max_abs(gamma)),
            ErrorCode::infeasible, "origin problem: gamma is not in the range of X");
    const double norm = linalg::max_singular_value(s0);
    if (norm > 1.0 + tol) {
        fail(ErrorCode::infeasible, "origin problem: least-norm value has norm "
                                        + format_eig(norm) + " > 1");
    }
    if (!parameter) {
        return SchurFunction::constant(s0);
    }
    NPData data{std::vector<cplx>(static_cast<std::size_t>(x.rows()), 0.0), x.adjoint(),
                gamma.adjoint()};
    NPOptions opts;
    opts.tol = tol;
    opts.entropy_point = 0.0;
    return np_solve(data, parameter, opts);
}

} // namespace hardy
