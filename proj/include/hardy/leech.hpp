#ifndef HARDY_LEECH_HPP
#define HARDY_LEECH_HPP

#include <cstdint>
#include <vector>

#include "hardy/cuntz.hpp"
#include "hardy/pick.hpp"

namespace hardy {

/// Samples of A (k x p) and B (k x q) at points of the disk; a Schur
/// function s with A(z_l) s(z_l) = B(z_l) is sought.
struct LeechData {
    std::vector<cplx> points;
    std::vector<Matrix> a_values;
    std::vector<Matrix> b_values;

    void validate() const;
};

/// Block Gram of (A(z_l)A(z_j)^* - B(z_l)B(z_j)^*) / (1 - z_l conj(z_j)).
Matrix leech_kernel(const LeechData& data);

/// Every row of every sample becomes one tangential interpolation condition;
/// the central solution of the resulting problem is returned.
SchurFunction leech_factor(const LeechData& data, const NPOptions& opts = {});

/// `count` points: the first half on the circle of radius 0.4, the rest on
/// radius 0.75, equally spaced with phase offsets drawn from the seed.
std::vector<cplx> ring_samples(int count = 24, std::uint64_t seed = 0);

struct LeechOptions {
    int samples = 24;
    std::uint64_t seed = 0;
    /// Slack allowed when checking [H, H] <= I.
    double norm_tol = 1e-8;
    NPOptions np;
};

/// H = s1 (I - z s2)^{-1} for s = (s1; s2) with s2 the last q = cols rows.
/// Computed as the truncated product of the series of s1 and the series
/// inverse of I - z s2.
TaylorSeries schur_to_h2(const SchurFunction& s, std::size_t n);

/// A Schur function s ((p + q) x q, partition {p, q}) with H = s1 (I - z s2)^{-1}
/// at the sample points, found by Leech factorisation of A = (I, zH), B = H.
SchurFunction h2_to_schur(const TaylorSeries& h, const LeechOptions& opts = {});
SchurFunction h2_to_schur(const TaylorSeries& h, const std::vector<cplx>& points,
                          const LeechOptions& opts = {});

/// H(z) = (sum_j e_j(z) s1j(b(z))) (I - b(z) s2(b(z)))^{-1} for s with rows
/// M*p + q. The blocks of s1 (I - w s2)^{-1} are expanded to `work`
/// coefficients (default 4n) before synthesis so that slowly decaying parts
/// are not cut early.
TaylorSeries generalized_schur_to_h2(const SchurFunction& s, const ModelBasis& basis,
                                     std::size_t n, std::size_t work = 0);

/// Analyses H into its parts, stacks them and represents the stack with
/// h2_to_schur on the ring samples w_l. The result reproduces H at every
/// preimage z with b(z) = w_l. The partition is {p, ..., p, q}.
SchurFunction generalized_h2_to_schur(const TaylorSeries& h, const ModelBasis& basis,
                                      const LeechOptions& opts = {});

} // namespace hardy

#endif
