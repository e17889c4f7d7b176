#include "hardy/dbr.hpp"

#include <cmath>

#include "hardy/error.hpp"
#include "hardy/linalg.hpp"
#include "hardy/random.hpp"

namespace hardy {

namespace {

cplx scalar_value(const SchurFunction& s, cplx z)
{
    return s(z)(0, 0);
}

/// Values at the grid points used by both checks.
struct GridValues {
    std::vector<cplx> b;   // b(z_i)
    std::vector<cplx> sb;  // s(b(z_i))
    std::vector<RowVector> e;
};

GridValues sample(const KernelGrid& grid)
{
    grid.validate();
    GridValues v;
    for (cplx z : grid.points) {
        const cplx bz = grid.basis.blaschke()(z);
        v.b.push_back(bz);
        v.sb.push_back(scalar_value(grid.s, bz));
        v.e.push_back(grid.basis.row(z));
    }
    return v;
}

double symmetry_of(const Matrix& k)
{
    return linalg::max_abs(k - k.adjoint());
}

} // namespace

void KernelGrid::validate() const
{
    require(!points.empty(), ErrorCode::invalid_argument, "kernel grid needs points");
    require(s.rows() == 1 && s.cols() == 1, ErrorCode::dimension_mismatch,
            "kernel checks need a scalar Schur function");
    for (cplx z : points) {
        require(std::abs(z) < 1.0, ErrorCode::invalid_argument, "grid points must lie in the open disk");
    }
}

std::vector<cplx> kernel_grid_points(int count, double radius, std::uint64_t seed)
{
    require(count >= 1, ErrorCode::invalid_argument, "grid needs at least one point");
    require(radius > 0.0 && radius < 1.0, ErrorCode::invalid_argument, "grid radius must lie in (0, 1)");
    Random rng(seed);
    std::vector<cplx> pts;
    for (int k = 0; k < count; ++k) {
        pts.push_back(rng.in_disk(radius));
    }
    return pts;
}

cplx ks_kernel(const SchurFunction& s, cplx z, cplx w)
{
    require(std::abs(z) < 1.0 && std::abs(w) < 1.0, ErrorCode::invalid_argument,
            "kernel arguments must lie in the open disk");
    require(s.rows() == 1 && s.cols() == 1, ErrorCode::dimension_mismatch,
            "ks_kernel needs a scalar Schur function");
    return (1.0 - scalar_value(s, z) * std::conj(scalar_value(s, w))) / (1.0 - z * std::conj(w));
}

bool DbrReport::passed(double tol, double psd_tol) const
{
    return residual <= tol && kb_residual <= tol && symmetry_residual <= tol
           && lhs_min_eigenvalue >= -psd_tol && rhs_min_eigenvalue >= -psd_tol;
}

DbrReport verify_dbr_decomposition(const KernelGrid& grid)
{
    const GridValues v = sample(grid);
    const auto g = static_cast<Eigen::Index>(grid.points.size());
    Matrix lhs(g, g);
    Matrix rhs(g, g);
    DbrReport rep;
    for (Eigen::Index i = 0; i < g; ++i) {
        for (Eigen::Index j = 0; j < g; ++j) {
            const cplx z = grid.points[static_cast<std::size_t>(i)];
            const cplx w = grid.points[static_cast<std::size_t>(j)];
            const auto& ez = v.e[static_cast<std::size_t>(i)];
            const auto& ew = v.e[static_cast<std::size_t>(j)];
            const cplx bz = v.b[static_cast<std::size_t>(i)];
            const cplx bw = v.b[static_cast<std::size_t>(j)];
            const cplx ee = ez.dot(ew);  // conjugates ez: sum conj(e_k(z)) e_k(w)
            const cplx kb = (1.0 - bz * std::conj(bw)) / (1.0 - z * std::conj(w));
            rep.kb_residual = std::max(rep.kb_residual, std::abs(std::conj(ee) - kb));
            lhs(i, j) = (1.0 - v.sb[static_cast<std::size_t>(i)] * std::conj(v.sb[static_cast<std::size_t>(j)]))
                        / (1.0 - z * std::conj(w));
            rhs(i, j) = std::conj(ee) * ks_kernel(grid.s, bz, bw);
        }
    }
    rep.residual = linalg::max_abs(lhs - rhs);
    rep.symmetry_residual = std::max(symmetry_of(lhs), symmetry_of(rhs));
    rep.lhs_min_eigenvalue = linalg::min_eigenvalue(linalg::hermitian_part(lhs));
    rep.rhs_min_eigenvalue = linalg::min_eigenvalue(linalg::hermitian_part(rhs));
    return rep;
}

DbrReport verify_dbr_cuntz(const KernelGrid& grid)
{
    const GridValues v = sample(grid);
    const auto g = static_cast<Eigen::Index>(grid.points.size());
    const int m = grid.basis.dimension();
    // channel[j](i, l) = (S_j S_j^* k_{s o b}(., z_l))(z_i).
    std::vector<Matrix> channel(static_cast<std::size_t>(m), Matrix(g, g));
    Matrix target(g, g);
    for (Eigen::Index l = 0; l < g; ++l) {
        const cplx w = grid.points[static_cast<std::size_t>(l)];
        const cplx bw = v.b[static_cast<std::size_t>(l)];
        for (int j = 0; j < m; ++j) {
            const cplx weight = std::conj(v.e[static_cast<std::size_t>(l)](j));
            for (Eigen::Index i = 0; i < g; ++i) {
                // S_j^* k(., w) = weight * k_s(., b(w)); then S_j evaluates at b(z_i).
                const cplx adj = weight * ks_kernel(grid.s, v.b[static_cast<std::size_t>(i)], bw);
                channel[static_cast<std::size_t>(j)](i, l) = v.e[static_cast<std::size_t>(i)](j) * adj;
            }
        }
        for (Eigen::Index i = 0; i < g; ++i) {
            const cplx z = grid.points[static_cast<std::size_t>(i)];
            target(i, l) = (1.0 - v.sb[static_cast<std::size_t>(i)] * std::conj(v.sb[static_cast<std::size_t>(l)]))
                           / (1.0 - z * std::conj(w));
        }
    }
    DbrReport rep;
    Matrix sum = Matrix::Zero(g, g);
    rep.rhs_min_eigenvalue = 0.0;
    bool first = true;
    for (const auto& c : channel) {
        sum += c;
        rep.symmetry_residual = std::max(rep.symmetry_residual, symmetry_of(c));
        const double e = linalg::min_eigenvalue(linalg::hermitian_part(c));
        rep.rhs_min_eigenvalue = first ? e : std::min(rep.rhs_min_eigenvalue, e);
        first = false;
    }
    rep.residual = linalg::max_abs(sum - target);
    rep.symmetry_residual = std::max(rep.symmetry_residual, symmetry_of(target));
    rep.lhs_min_eigenvalue = linalg::min_eigenvalue(linalg::hermitian_part(target));
    return rep;
}

double inner_projection_residual(const BlaschkeProduct& s, const std::vector<cplx>& points,
                                 std::size_t n)
{
    const ModelBasis basis = orthonormal_basis(s);
    const TaylorSeries e = basis.series(n);
    const SchurFunction sf = SchurFunction::from_blaschke(s);
    double worst = 0.0;
    for (cplx w : points) {
        require(std::abs(w) < 1.0, ErrorCode::invalid_argument, "points must lie in the open disk");
        // <k_w, e_j> from the truncated coefficient sequences.
        Vector coeffs = Vector::Zero(basis.dimension());
        cplx pw = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            coeffs += pw * e[k].row(0).adjoint();
            pw *= std::conj(w);
        }
        for (cplx z : points) {
            const cplx projected = (basis.row(z) * coeffs)(0, 0);
            worst = std::max(worst, std::abs(projected - ks_kernel(sf, z, w)));
        }
    }
    return worst;
}

} // namespace hardy
