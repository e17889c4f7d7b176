#ifndef HARDY_SERIES_HPP
#define HARDY_SERIES_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace hardy {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

///
/// Truncated power series f(z) = c_0 + c_1 z + ... + c_{N-1} z^{N-1} with
/// complex p x q matrix coefficients. This is the working representation of
/// elements of the Hardy space H2^{p x q}; everything past index N-1 is
/// treated as zero.
///
class TaylorSeries {
public:
    /// Zero series with `n` coefficients.
    TaylorSeries(Eigen::Index rows, Eigen::Index cols, std::size_t n);

    /// Takes ownership of the coefficient list. All coefficients must share
    /// one shape, the list must be non-empty and every entry finite.
    explicit TaylorSeries(std::vector<Matrix> coeffs);

    static TaylorSeries constant(const Matrix& value, std::size_t n);
    static TaylorSeries scalar(const std::vector<cplx>& coeffs);
    /// Scalar monomial z^k.
    static TaylorSeries monomial(std::size_t k, std::size_t n);

    Eigen::Index rows() const noexcept { return rows_; }
    Eigen::Index cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const Matrix& operator[](std::size_t n) const { return coeffs_[n]; }
    Matrix& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }

    /// Scalar coefficient access for 1 x 1 series.
    cplx at(std::size_t n) const { return coeffs_[n](0, 0); }

    /// Drops or zero-pads coefficients so that size() == n.
    TaylorSeries resized(std::size_t n) const;

    /// Sub-block of every coefficient.
    TaylorSeries block(Eigen::Index r0, Eigen::Index c0, Eigen::Index nr,
                       Eigen::Index nc) const;

    /// Coefficient-wise adjoint: the series with coefficients c_n^*.
    TaylorSeries conj_flip() const;

    /// Multiplication by z^k (truncation grows by k).
    TaylorSeries shifted(std::size_t k) const;

    TaylorSeries& operator+=(const TaylorSeries& other);
    TaylorSeries& operator-=(const TaylorSeries& other);
    TaylorSeries& operator*=(cplx s);

private:
    Eigen::Index rows_;
    Eigen::Index cols_;
    std::vector<Matrix> coeffs_;
};

/// Sum truncated at the longer of the two operands.
TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b);
TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b);
TaylorSeries operator*(cplx s, TaylorSeries f);

/// Constant matrix times series, and series times constant matrix.
TaylorSeries operator*(const Matrix& m, const TaylorSeries& f);
TaylorSeries operator*(const TaylorSeries& f, const Matrix& m);

/// The H2 form [f, g] = sum_n f_n^* g_n (a q x q matrix). Accumulation runs
/// over n outermost, then over the row index, so the diagonal of [f, f] is
/// sum_n sum_i |c_{n,ik}|^2 in exactly that order.
Matrix h2_form(const TaylorSeries& f, const TaylorSeries& g);

/// trace [f, f], computed as sum_k [f, f]_{kk} with the order above.
double norm2(const TaylorSeries& f);

/// Horner evaluation of the stored coefficients.
Matrix eval(const TaylorSeries& f, cplx z);

/// Cauchy product truncated at min(f.size(), g.size()).
TaylorSeries mul(const TaylorSeries& f, const TaylorSeries& g);

/// k-th complex derivative; the result has size() - k coefficients.
TaylorSeries derivative(const TaylorSeries& f, std::size_t k);

/// Multiplicative inverse of a square series whose constant term is
/// invertible, to `n` coefficients.
TaylorSeries inverse(const TaylorSeries& f, std::size_t n);

/// Stacks series with equal column count and truncation on top of each other.
TaylorSeries vstack(const std::vector<TaylorSeries>& parts);

/// Largest absolute coefficient entry of f - g over the common truncation,
/// with missing coefficients treated as zero.
double max_abs_diff(const TaylorSeries& f, const TaylorSeries& g);

} // namespace hardy

#endif
