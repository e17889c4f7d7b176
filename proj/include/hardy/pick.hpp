#ifndef HARDY_PICK_HPP
#define HARDY_PICK_HPP

#include <optional>
#include <vector>

#include "hardy/schur_function.hpp"

namespace hardy {

/// Tangential Nevanlinna-Pick data: find a Schur function s (p x q) with
/// s(w_j)^* xi_j = eta_j. Column j of `xi` is xi_j and column j of `eta`
/// is eta_j. Nodes may repeat as long as the Pick matrix stays invertible.
struct NPData {
    std::vector<cplx> nodes;
    Matrix xi;  // p x n
    Matrix eta; // q x n

    Eigen::Index p() const noexcept { return xi.rows(); }
    Eigen::Index q() const noexcept { return eta.rows(); }
    std::size_t size() const noexcept { return nodes.size(); }

    void validate() const;
};

/// P[l][j] = (xi_l^* xi_j - eta_l^* eta_j) / (1 - w_l conj(w_j)).
Matrix pick_matrix(const NPData& data);

struct Feasibility {
    bool feasible = false;
    double min_eigenvalue = 0.0;
};

Feasibility np_feasible(const NPData& data, double tol = 1e-8);

/// J-inner resolvent matrix normalised at z = 1,
///   Theta(z) = I - (1 - z) U^* (I - z T^*)^{-1} P^{-1} (I - T)^{-1} U J,
/// with U = [xi^*, eta^*], T = diag(w) and J = diag(I_p, -I_q). Every
/// solution is (Theta11 E + Theta12)(Theta21 E + Theta22)^{-1}, E Schur.
/// Requires an invertible Pick matrix.
MatrixFunction resolvent_matrix(const NPData& data);

struct NPOptions {
    /// Feasibility tolerance on the smallest Pick eigenvalue.
    double tol = 1e-8;
    /// Pick matrices with smallest eigenvalue at or below this multiple of
    /// max(largest eigenvalue, 1) are treated as singular.
    double degeneracy = 1e-13;
    /// Point at which the central solution maximises entropy. Defaults to
    /// the last node.
    std::optional<cplx> entropy_point;
};

/// Solution of the tangential problem. With no parameter the central
/// (maximum-entropy) solution is returned; a Schur parameter E (p x q) gives
/// another solution through the resolvent matrix. A numerically zero Pick
/// matrix is solved by the constant pinv(xi^*) eta^* when that is
/// contractive and interpolates. Infeasible data raise ErrorCode::infeasible
/// and other singular Pick matrices ErrorCode::degenerate.
SchurFunction np_solve(const NPData& data, const std::optional<SchurFunction>& parameter = {},
                       const NPOptions& opts = {});

/// Largest residual max_j || s(w_j)^* xi_j - eta_j ||.
double interpolation_residual(const SchurFunction& s, const NPData& data);

/// Schur functions s (n x q) with X s(0) = gamma. The central solution is
/// the constant pinv(X) gamma; it exists iff that constant is contractive
/// (within tol) and actually solves X s(0) = gamma. A parameter E (n x q)
/// selects other solutions through np_solve with all nodes at the origin.
SchurFunction origin_tangential_solve(const Matrix& x, const Matrix& gamma,
                                      const std::optional<SchurFunction>& parameter = {},
                                      double tol = 1e-8);

} // namespace hardy

#endif
