#ifndef HARDY_INTERP_HPP
#define HARDY_INTERP_HPP

#include <optional>
#include <vector>

#include "hardy/cuntz.hpp"
#include "hardy/pick.hpp"

namespace hardy {

/// Find f in H2^{p x q} with sum_l u_l f(a_l) = gamma. The points must be
/// distinct; gamma fixes p and q.
struct LinearFunctionalProblem {
    std::vector<cplx> points;
    RowVector u;
    Matrix gamma;

    void validate() const;
};

/// Find H in H2^{p x q} with sum_{i=0}^{M-1} xi[i] H^{(i)}(a) = gamma, where
/// every xi[i] is r x p and gamma is r x q.
struct DerivativeProblem {
    cplx a = 0.0;
    std::vector<Matrix> xi;
    Matrix gamma;

    int order() const noexcept { return static_cast<int>(xi.size()); }
    void validate() const;
};

struct InterpSolution {
    /// The solution, truncated.
    TaylorSeries f{1, 1, 1};
    /// Channel parts f = sum_j e_j (parts_j o b). Empty for the Schur route.
    std::vector<TaylorSeries> parts;
    /// v (1 x M) for linear functionals, the constraint row C (r x Mp) for
    /// derivative problems, X = (v (x) I_p, 0) for the Schur route.
    Matrix data;
    /// trace of the norm of the minimal-norm solution, in parts space.
    double minimal_norm2 = 0.0;
    /// trace of the solution norm: sum of the part norms when parts exist,
    /// otherwise the norm of the truncated series.
    double norm2 = 0.0;
    /// Constraint residual from pointwise (or exact-derivative) evaluation.
    double constraint_residual = 0.0;
    /// |norm2 - minimal_norm2 - parameter norm|; zero for the Schur route.
    double norm_identity_residual = 0.0;
    bool parametrized = false;
    /// Schur function behind the Schur-route solution.
    std::optional<SchurFunction> sigma;
};

/// [e_j(a_l)] with rows indexed by the points and columns by the channels.
/// The points must be the distinct zeros of the basis' Blaschke product.
Matrix multipoint_evaluation_map(const ModelBasis& basis, const std::vector<cplx>& points);

/// v = u [e_j(a_l)]; satisfies v v^* = u P u^* with P the Cauchy matrix of
/// the points.
RowVector tangential_data(const LinearFunctionalProblem& problem, const ModelBasis& basis);

/// u P u^* with P[l][j] = 1 / (1 - a_l conj(a_j)).
double pick_form(const LinearFunctionalProblem& problem);

/// Parts f_j = gamma conj(v_j) / vv^* + (B(b) g)_j with the elementary factor
/// B(w) = I + (w - 1) v^* v / vv^*. Without a parameter the result is the
/// minimal-norm solution. u = 0 raises infeasible (gamma != 0) or
/// unconstrained (gamma = 0).
InterpSolution solve_linear_functional(const LinearFunctionalProblem& problem,
                                       const ModelBasis& basis,
                                       const std::optional<std::vector<TaylorSeries>>& g = {},
                                       std::size_t n = 256);

/// The constraint row sum_i xi[i] (x) E^{(i)}(a), built from the orthonormal
/// or the Cauchy basis row of b = b_a^M.
Matrix derivative_constraint_row(const DerivativeProblem& problem, const ModelBasis& basis,
                                 RowKind kind);

/// Basis of b = ((z - a) / (1 - z conj(a)))^M used by the derivative solver.
ModelBasis derivative_basis(const DerivativeProblem& problem, RowKind kind);

/// Stacked parts script_H = X gamma + (I + (z - 1) X C) script_G with
/// X = pinv(C). With the Cauchy convention the synthesis uses the Cauchy
/// row, and the norm identity holds for script_H only. Infeasible when
/// gamma is outside the range of C.
InterpSolution solve_derivative_constraint(const DerivativeProblem& problem,
                                           const std::optional<TaylorSeries>& g = {},
                                           std::size_t n = 256,
                                           RowKind kind = RowKind::orthonormal,
                                           double tol = 1e-8);

struct SchurRouteOptions {
    std::size_t truncation = 256;
    /// Relative slack in the feasibility test |gamma|^2 <= u P u^*.
    double boundary_tol = 1e-12;
    double tol = 1e-8;
};

/// h = sum_j e_j sigma_1j(b) (1 - b sigma_2(b))^{-1} where sigma solves
/// X sigma(0) = gamma with X = (v (x) I_p, 0). The result has norm at most
/// one. A parameter selects sigma among the solutions of the origin problem.
InterpSolution solve_via_schur(const LinearFunctionalProblem& problem, const ModelBasis& basis,
                               const std::optional<SchurFunction>& parameter = {},
                               const SchurRouteOptions& opts = {});

/// sum_j e_j(z) parts_j(b(z)) evaluated directly.
Matrix evaluate_parts(const ModelBasis& basis, const std::vector<TaylorSeries>& parts, cplx z);

} // namespace hardy

#endif
