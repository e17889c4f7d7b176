#ifndef HARDY_BLASCHKE_HPP
#define HARDY_BLASCHKE_HPP

#include <vector>

#include "hardy/series.hpp"

namespace hardy {

struct BlaschkeZero {
    cplx a;
    int multiplicity = 1;
};

///
/// Finite Blaschke product b(z) = c * prod_l ((z - a_l) / (1 - z conj(a_l)))^{m_l}.
///
/// Zeros lie strictly inside the unit disk and |c| = 1. The degree M is the
/// sum of the multiplicities.
///
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(std::vector<BlaschkeZero> zeros, cplx unimodular = 1.0);

    /// One zero per listed point; exactly repeated points are merged into a
    /// single zero with the corresponding multiplicity.
    static BlaschkeProduct from_points(const std::vector<cplx>& points);
    static BlaschkeProduct single(cplx a, int multiplicity = 1);

    const std::vector<BlaschkeZero>& zeros() const noexcept { return zeros_; }
    cplx unimodular() const noexcept { return c_; }
    int degree() const noexcept { return degree_; }

    /// Zeros listed with multiplicity.
    std::vector<cplx> expanded_zeros() const;

    bool has_distinct_zeros() const;

    cplx operator()(cplx z) const;

    /// b = numerator / denominator with ascending coefficients; the
    /// denominator is prod (1 - z conj(a))^m (constant term 1) and the
    /// numerator carries the unimodular constant.
    std::vector<cplx> numerator() const;
    std::vector<cplx> denominator() const;

    TaylorSeries series(std::size_t n) const;

private:
    std::vector<BlaschkeZero> zeros_;
    cplx c_;
    int degree_ = 0;
};

cplx eval_blaschke(const BlaschkeProduct& b, cplx z);

/// The M points z of the disk with b(z) = w (with multiplicity), from the
/// companion matrix of numerator - w * denominator, refined by Newton steps.
std::vector<cplx> preimages(const BlaschkeProduct& b, cplx w);

/// (C, A) with C a 1 x M row and A an M x M matrix; the row
/// C (I - zA)^{-1} spans the model space H(b) = H2 - b H2.
struct StateSpacePair {
    Matrix C;
    Matrix A;
};

/// Block-diagonal realization: a zero a of multiplicity m contributes a
/// Jordan block with eigenvalue conj(a) (ones on the superdiagonal) and the
/// row segment (1, 0, ..., 0), giving the entries z^k / (1 - z conj(a))^{k+1}.
/// For distinct zeros this is A = diag(conj(a_l)), C = (1, ..., 1).
StateSpacePair state_space(const BlaschkeProduct& b);

/// Rank test on the stack C, CA, ..., CA^{M-1}.
bool is_observable(const StateSpacePair& pair, double rel_tol = 1e-12);

/// Solves the Stein equation P - A^* P A = C^* C. Throws not_convergent if
/// the spectral radius of A is not below one and singular when P is not
/// numerically positive definite.
Matrix gramian(const StateSpacePair& pair);

///
/// Orthonormal basis of H(b): the row e(z) = C (I - zA)^{-1} W, where W
/// satisfies W^* P W = I. The default choice is W = P^{-1/2}; any W U with U
/// unitary is an equally valid basis.
///
class ModelBasis {
public:
    ModelBasis(BlaschkeProduct b, StateSpacePair pair, Matrix gram, Matrix ortho);

    const BlaschkeProduct& blaschke() const noexcept { return b_; }
    const StateSpacePair& pair() const noexcept { return pair_; }
    const Matrix& gramian() const noexcept { return gram_; }
    const Matrix& ortho() const noexcept { return ortho_; }
    int dimension() const noexcept { return static_cast<int>(ortho_.cols()); }

    /// (e_1(z), ..., e_M(z)).
    RowVector row(cplx z) const;
    /// Non-orthonormal row C (I - zA)^{-1}.
    RowVector cauchy_row(cplx z) const;

    /// Taylor coefficients C A^n W of the row, as a 1 x M series.
    TaylorSeries series(std::size_t n) const;

    /// Basis with ortho() replaced by ortho() * u. `u` must be unitary.
    ModelBasis remixed(const Matrix& u) const;

private:
    BlaschkeProduct b_;
    StateSpacePair pair_;
    Matrix gram_;
    Matrix ortho_;
};

ModelBasis orthonormal_basis(const BlaschkeProduct& b);

enum class RowKind { orthonormal, cauchy };

/// Highest derivative order basis_derivatives accepts.
inline constexpr int max_derivative_order = 16;

/// Exact derivatives E(a), E'(a), ..., E^{(k_max)}(a) of the basis row, from
/// d^k/dz^k (I - zA)^{-1} = k! A^k (I - zA)^{-(k+1)}.
std::vector<RowVector> basis_derivatives(const ModelBasis& basis, cplx a, int k_max,
                                         RowKind kind = RowKind::orthonormal);

} // namespace hardy

#endif
