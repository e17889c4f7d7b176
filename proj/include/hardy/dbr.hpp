#ifndef HARDY_DBR_HPP
#define HARDY_DBR_HPP

#include <cstdint>
#include <vector>

#include "hardy/schur_function.hpp"

namespace hardy {

/// Sample points, a scalar Schur function s and the basis of b. Kernels are
/// compared on all ordered pairs of points.
struct KernelGrid {
    std::vector<cplx> points;
    SchurFunction s;
    ModelBasis basis;

    void validate() const;
};

/// `count` seeded points drawn uniformly from the disk of the given radius.
std::vector<cplx> kernel_grid_points(int count, double radius = 0.95, std::uint64_t seed = 0);

/// (1 - s(z) conj(s(w))) / (1 - z conj(w)).
cplx ks_kernel(const SchurFunction& s, cplx z, cplx w);

struct DbrReport {
    /// Largest entrywise mismatch of the identity being checked.
    double residual = 0.0;
    /// Decomposition check only: sum_j e_j(z) conj(e_j(w)) against
    /// (1 - b(z) conj(b(w))) / (1 - z conj(w)).
    double kb_residual = 0.0;
    /// Largest |K(z, w) - conj(K(w, z))| over the kernels involved.
    double symmetry_residual = 0.0;
    /// Smallest eigenvalue of the Gram of k_{s o b} on the grid.
    double lhs_min_eigenvalue = 0.0;
    /// Smallest eigenvalue of the Gram of the other side (for the Cuntz
    /// check, the smallest over the single-channel Grams).
    double rhs_min_eigenvalue = 0.0;

    bool passed(double tol, double psd_tol = 1e-10) const;
};

/// k_{s o b}(z, w) against sum_j e_j(z) conj(e_j(w)) k_s(b(z), b(w)).
DbrReport verify_dbr_decomposition(const KernelGrid& grid);

/// Kernel form of sum_j S_j S_j^* = I on H(s o b): with
/// S_j^* k_{s o b}(., w) = conj(e_j(w)) k_s(., b(w)) and (S_j g)(z) = e_j(z) g(b(z)),
/// the sum of S_j S_j^* k_{s o b}(., w) is compared with k_{s o b}(., w) at
/// every grid point. Each S_j S_j^* term must also be a positive kernel.
DbrReport verify_dbr_cuntz(const KernelGrid& grid);

/// For inner s: the kernel of H2 minus s H2 computed by projecting truncated
/// Szego kernels onto an orthonormal basis of the model space, compared with
/// k_s on the points. Returns the largest mismatch.
double inner_projection_residual(const BlaschkeProduct& s, const std::vector<cplx>& points,
                                 std::size_t n = 1024);

} // namespace hardy

#endif
