#include "hardy/interp.hpp"

#include <cmath>
#include <sstream>

#include "hardy/error.hpp"
#include "hardy/leech.hpp"
#include "hardy/linalg.hpp"

namespace hardy {

namespace {

constexpr double point_separation = 1e-12;

void require_matching_basis(const ModelBasis& basis, const std::vector<cplx>& points)
{
    require(basis.dimension() == static_cast<int>(points.size()), ErrorCode::dimension_mismatch,
            "basis degree differs from the number of points");
    for (std::size_t l = 0; l < points.size(); ++l) {
        require(std::abs(points[l]) < 1.0, ErrorCode::invalid_argument,
                "interpolation points must lie in the open disk");
        for (std::size_t j = 0; j < l; ++j) {
            require(std::abs(points[l] - points[j]) > point_separation, ErrorCode::invalid_argument,
                    "interpolation points must be distinct; use the derivative solver for repeated points");
        }
        require(std::abs(basis.blaschke()(points[l])) <= 1e-10, ErrorCode::invalid_argument,
                "the points are not the zeros of the basis' Blaschke product");
    }
}

/// (v_1 I_p, ..., v_M I_p).
Matrix spread(const RowVector& v, Eigen::Index p)
{
    Matrix out = Matrix::Zero(p, v.size() * p);
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        out.middleCols(j * p, p).diagonal().setConstant(v(j));
    }
    return out;
}

/// Splits an (M p) x q series into M blocks of p rows.
std::vector<TaylorSeries> split_rows(const TaylorSeries& stacked, int m)
{
    const Eigen::Index p = stacked.rows() / m;
    std::vector<TaylorSeries> out;
    for (int j = 0; j < m; ++j) {
        out.push_back(stacked.block(j * p, 0, p, stacked.cols()));
    }
    return out;
}

/// c + (I + (w - 1) Q) g for a constant c and a projection Q acting on the
/// stacked rows; one extra coefficient holds the w-shift.
TaylorSeries elementary_update(const Matrix& c, const Matrix& q, const TaylorSeries* g)
{
    if (g == nullptr) {
        return TaylorSeries::constant(c, 1);
    }
    const std::size_t len = g->size() + 1;
    TaylorSeries out = TaylorSeries::constant(c, len);
    for (std::size_t k = 0; k < g->size(); ++k) {
        const Matrix qg = q * (*g)[k];
        out[k] += (*g)[k] - qg;
        out[k + 1] += qg;
    }
    return out;
}

double trace_norm2(const std::vector<TaylorSeries>& parts)
{
    double s = 0.0;
    for (const auto& p : parts) {
        s += norm2(p);
    }
    return s;
}

} // namespace

void LinearFunctionalProblem::validate() const
{
    require(!points.empty(), ErrorCode::invalid_argument, "need at least one point");
    require(u.size() == static_cast<Eigen::Index>(points.size()), ErrorCode::dimension_mismatch,
            "one weight per point is required");
    require(gamma.size() > 0, ErrorCode::invalid_argument, "gamma must be non-empty");
    require(u.allFinite() && gamma.allFinite(), ErrorCode::invalid_argument,
            "problem data must be finite");
}

void DerivativeProblem::validate() const
{
    require(std::abs(a) < 1.0, ErrorCode::invalid_argument, "center must lie in the open disk");
    require(!xi.empty(), ErrorCode::invalid_argument, "derivative order must be at least one");
    require(order() <= max_derivative_order + 1, ErrorCode::invalid_argument,
            "derivative order too large");
    require(gamma.size() > 0 && gamma.allFinite(), ErrorCode::invalid_argument,
            "gamma must be non-empty and finite");
    for (const auto& x : xi) {
        require(x.rows() == gamma.rows() && x.cols() == xi.front().cols() && x.cols() > 0,
                ErrorCode::dimension_mismatch, "coefficient matrices must be r x p with r = rows of gamma");
        require(x.allFinite(), ErrorCode::invalid_argument, "coefficients must be finite");
    }
}

Matrix multipoint_evaluation_map(const ModelBasis& basis, const std::vector<cplx>& points)
{
    require_matching_basis(basis, points);
    const Eigen::Index m = basis.dimension();
    Matrix e(m, m);
    for (Eigen::Index l = 0; l < m; ++l) {
        e.row(l) = basis.row(points[static_cast<std::size_t>(l)]);
    }
    return e;
}

RowVector tangential_data(const LinearFunctionalProblem& problem, const ModelBasis& basis)
{
    problem.validate();
    return problem.u * multipoint_evaluation_map(basis, problem.points);
}

double pick_form(const LinearFunctionalProblem& problem)
{
    problem.validate();
    const std::size_t m = problem.points.size();
    cplx s = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t j = 0; j < m; ++j) {
            s += problem.u(static_cast<Eigen::Index>(l)) * std::conj(problem.u(static_cast<Eigen::Index>(j)))
                 / (1.0 - problem.points[l] * std::conj(problem.points[j]));
        }
    }
    return s.real();
}

Matrix evaluate_parts(const ModelBasis& basis, const std::vector<TaylorSeries>& parts, cplx z)
{
    require(parts.size() == static_cast<std::size_t>(basis.dimension()), ErrorCode::dimension_mismatch,
            "one part per channel is required");
    const RowVector e = basis.row(z);
    const cplx w = basis.blaschke()(z);
    Matrix out = Matrix::Zero(parts.front().rows(), parts.front().cols());
    for (std::size_t j = 0; j < parts.size(); ++j) {
        out += e(static_cast<Eigen::Index>(j)) * eval(parts[j], w);
    }
    return out;
}

InterpSolution solve_linear_functional(const LinearFunctionalProblem& problem,
                                       const ModelBasis& basis,
                                       const std::optional<std::vector<TaylorSeries>>& g,
                                       std::size_t n)
{
    problem.validate();
    const int m = basis.dimension();
    const Eigen::Index p = problem.gamma.rows();
    const Eigen::Index q = problem.gamma.cols();
    if (problem.u.isZero(0.0)) {
        if (problem.gamma.isZero(0.0)) {
            fail(ErrorCode::unconstrained, "u = 0 and gamma = 0: every function is a solution");
        }
        fail(ErrorCode::infeasible, "u = 0 but gamma is non-zero");
    }
    const RowVector v = tangential_data(problem, basis);
    const double vv = v.squaredNorm();
    if (g) {
        require(g->size() == static_cast<std::size_t>(m), ErrorCode::dimension_mismatch,
                "the parameter needs one series per channel");
        for (const auto& gj : *g) {
            require(gj.rows() == p && gj.cols() == q, ErrorCode::dimension_mismatch,
                    "parameter series must have the shape of gamma");
        }
    }

    // Work on the stacked (Mp x q) parts so the channel mixing is one matrix.
    const Matrix vk = spread(v, p);
    const Matrix x = vk.adjoint() / vv;
    const Matrix c = x * problem.gamma;
    const Matrix proj = x * vk;
    std::optional<TaylorSeries> stacked_g;
    if (g) {
        std::size_t len = 0;
        for (const auto& gj : *g) {
            len = std::max(len, gj.size());
        }
        std::vector<TaylorSeries> padded;
        for (const auto& gj : *g) {
            padded.push_back(gj.resized(len));
        }
        stacked_g = vstack(padded);
    }
    const TaylorSeries stacked = elementary_update(c, proj, stacked_g ? &*stacked_g : nullptr);

    InterpSolution sol;
    sol.parts = split_rows(stacked, m);
    sol.f = synthesize(basis, sol.parts, n);
    sol.data = v;
    sol.parametrized = g.has_value();
    sol.minimal_norm2 = problem.gamma.squaredNorm() / vv;
    sol.norm2 = trace_norm2(sol.parts);
    const double param = g ? trace_norm2(*g) : 0.0;
    sol.norm_identity_residual = std::abs(sol.norm2 - sol.minimal_norm2 - param);
    Matrix lhs = Matrix::Zero(p, q);
    for (std::size_t l = 0; l < problem.points.size(); ++l) {
        lhs += problem.u(static_cast<Eigen::Index>(l)) * eval(sol.f, problem.points[l]);
    }
    sol.constraint_residual = linalg::max_abs(lhs - problem.gamma);
    return sol;
}

ModelBasis derivative_basis(const DerivativeProblem& problem, RowKind kind)
{
    problem.validate();
    const auto b = BlaschkeProduct::single(problem.a, problem.order());
    if (kind == RowKind::orthonormal) {
        return orthonormal_basis(b);
    }
    StateSpacePair pair = state_space(b);
    Matrix gram = gramian(pair);
    const Eigen::Index m = problem.order();
    return ModelBasis(b, std::move(pair), std::move(gram), Matrix::Identity(m, m));
}

Matrix derivative_constraint_row(const DerivativeProblem& problem, const ModelBasis& basis,
                                 RowKind kind)
{
    problem.validate();
    const int m = problem.order();
    require(basis.dimension() == m, ErrorCode::dimension_mismatch,
            "basis degree differs from the derivative order");
    const auto rows = basis_derivatives(basis, problem.a, m - 1, kind);
    const Eigen::Index r = problem.gamma.rows();
    const Eigen::Index p = problem.xi.front().cols();
    Matrix c = Matrix::Zero(r, m * p);
    for (int i = 0; i < m; ++i) {
        const auto& e = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < m; ++j) {
            c.middleCols(j * p, p) += e(j) * problem.xi[static_cast<std::size_t>(i)];
        }
    }
    return c;
}

InterpSolution solve_derivative_constraint(const DerivativeProblem& problem,
                                           const std::optional<TaylorSeries>& g, std::size_t n,
                                           RowKind kind, double tol)
{
    problem.validate();
    const int m = problem.order();
    const Eigen::Index p = problem.xi.front().cols();
    const Eigen::Index q = problem.gamma.cols();
    const ModelBasis basis = derivative_basis(problem, kind);
    const Matrix c = derivative_constraint_row(problem, basis, kind);
    const Matrix x = linalg::pinv(c);
    const double scale = std::max(1.0, linalg::max_abs(problem.gamma));
    const double miss = linalg::max_abs(c * x * problem.gamma - problem.gamma);
    if (miss > tol * scale) {
        std::ostringstream os;
        os << "gamma is outside the range of the constraint row (distance " << miss << ")";
        fail(ErrorCode::infeasible, os.str());
    }
    if (g) {
        require(g->rows() == m * p && g->cols() == q, ErrorCode::dimension_mismatch,
                "the parameter must be (M p) x q");
    }
    const TaylorSeries stacked = elementary_update(x * problem.gamma, x * c, g ? &*g : nullptr);

    InterpSolution sol;
    sol.parts = split_rows(stacked, m);
    sol.f = synthesize(basis, sol.parts, n);
    sol.data = c;
    sol.parametrized = g.has_value();
    sol.minimal_norm2 = (x * problem.gamma).squaredNorm();
    sol.norm2 = norm2(stacked);
    sol.norm_identity_residual =
        std::abs(sol.norm2 - sol.minimal_norm2 - (g ? norm2(*g) : 0.0));
    Matrix lhs = Matrix::Zero(problem.gamma.rows(), q);
    for (int i = 0; i < m; ++i) {
        lhs += problem.xi[static_cast<std::size_t>(i)]
               * eval(derivative(sol.f, static_cast<std::size_t>(i)), problem.a);
    }
    sol.constraint_residual = linalg::max_abs(lhs - problem.gamma);
    return sol;
}

InterpSolution solve_via_schur(const LinearFunctionalProblem& problem, const ModelBasis& basis,
                               const std::optional<SchurFunction>& parameter,
                               const SchurRouteOptions& opts)
{
    problem.validate();
    const Eigen::Index p = problem.gamma.rows();
    const Eigen::Index q = problem.gamma.cols();
    const int m = basis.dimension();
    if (problem.u.isZero(0.0)) {
        if (problem.gamma.isZero(0.0)) {
            fail(ErrorCode::unconstrained, "u = 0 and gamma = 0: every function is a solution");
        }
        fail(ErrorCode::infeasible, "u = 0 but gamma is non-zero");
    }
    const RowVector v = tangential_data(problem, basis);
    const double vv = v.squaredNorm();
    const double budget = std::pow(linalg::max_singular_value(problem.gamma), 2);
    if (budget > vv * (1.0 + opts.boundary_tol)) {
        std::ostringstream os;
        os.precision(17);
        os << "|gamma|^2 = " << budget << " exceeds u P u^* = " << vv;
        fail(ErrorCode::infeasible, os.str());
    }
    Matrix x = Matrix::Zero(p, m * p + q);
    x.leftCols(m * p) = spread(v, p);
    // The feasibility test above is the sharp one; the origin solver only
    // needs to confirm it.
    const double slack = std::max(opts.tol, 4.0 * opts.boundary_tol);
    std::vector<Eigen::Index> blocks(static_cast<std::size_t>(m), p);
    blocks.push_back(q);
    const SchurFunction sigma =
        origin_tangential_solve(x, problem.gamma, parameter, slack).with_partition(blocks);

    InterpSolution sol;
    sol.f = generalized_schur_to_h2(sigma, basis, opts.truncation);
    sol.data = x;
    sol.parametrized = parameter.has_value();
    sol.minimal_norm2 = problem.gamma.squaredNorm() / vv;
    sol.norm2 = norm2(sol.f);
    Matrix lhs = Matrix::Zero(p, q);
    for (std::size_t l = 0; l < problem.points.size(); ++l) {
        lhs += problem.u(static_cast<Eigen::Index>(l)) * eval(sol.f, problem.points[l]);
    }
    sol.constraint_residual = linalg::max_abs(lhs - problem.gamma);
    sol.sigma = sigma;
    return sol;
}

} // namespace hardy
