#ifndef HARDY_CUNTZ_HPP
#define HARDY_CUNTZ_HPP

#include <vector>

#include "hardy/blaschke.hpp"

namespace hardy {

/// f = sum_j e_j (f_j o b). Channel indices are zero-based throughout the
/// C++ API.
struct SubbandDecomposition {
    ModelBasis basis;
    std::vector<TaylorSeries> parts;
    /// Truncation of the analysed series; synthesis is truncated here.
    std::size_t truncation = 0;
    /// Largest energy, on the support of the analysed series, of the first
    /// atom e_j b^L that was dropped (L = parts length).
    double tail_estimate = 0.0;
};

/// h o b truncated to n coefficients, with b^k built by exact polynomial
/// multiplication and division (no composition operator is formed).
TaylorSeries compose(const TaylorSeries& h, const BlaschkeProduct& b, std::size_t n);

/// (S_j h)(z) = e_j(z) h(b(z)) truncated to n coefficients.
TaylorSeries apply_S(int j, const TaylorSeries& h, const ModelBasis& basis, std::size_t n);

/// S_j^* f for every channel: (f_j)_n = [e_j b^n, f]. The parts length is
/// chosen so that the next atom restricted to the support of f carries
/// energy below 1e-30 (capped at 64 * f.size()).
SubbandDecomposition analyze(const TaylorSeries& f, const ModelBasis& basis);

TaylorSeries synthesize(const SubbandDecomposition& d);
TaylorSeries synthesize(const ModelBasis& basis, const std::vector<TaylorSeries>& parts,
                        std::size_t n);

/// T_a f = sqrt(1 - |a|^2) / (1 - z conj(a)) f(b_a(z)), truncated to n.
TaylorSeries t_a(const TaylorSeries& f, cplx a, std::size_t n);

struct CuntzReport {
    int degree = 0;
    std::size_t truncation = 0;
    /// Truncation used for the inner products between atoms. It grows past
    /// `truncation` until the atoms have negligible energy beyond it.
    std::size_t work_truncation = 0;
    /// max_k || sum_j S_j S_j^* z^k - z^k ||_2.
    double sum_residual = 0.0;
    /// max over j != k, m, n of |<S_j z^m, S_k z^n>|.
    double cross_residual = 0.0;
    /// max over j, m, n of |<S_j z^m, S_j z^n> - delta_mn|.
    double isometry_residual = 0.0;
    /// max_j (1 - ||P_N S_j z^deg||^2): energy lost when the atoms are cut
    /// at the nominal truncation.
    double tail_estimate = 0.0;

    double worst() const;
    bool passed(double tol) const { return worst() <= tol; }
};

/// Checks the Cuntz relations on the monomials z^0, ..., z^deg. Throws
/// truncation_too_small when deg * M >= n - 32.
CuntzReport verify_cuntz(const ModelBasis& basis, std::size_t n, int deg);

} // namespace hardy

#endif
