#ifndef HARDY_SCHUR_FUNCTION_HPP
#define HARDY_SCHUR_FUNCTION_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "hardy/blaschke.hpp"

namespace hardy {

/// Type-erased analytic p x q function on the disk, evaluable pointwise and
/// expandable into Taylor coefficients.
class MatrixFunction {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual Matrix eval(cplx z) const = 0;
        virtual TaylorSeries series(std::size_t n) const = 0;
    };

    MatrixFunction(Eigen::Index rows, Eigen::Index cols, std::shared_ptr<const Impl> impl);

    static MatrixFunction constant(const Matrix& value);
    /// The stored coefficients are the whole function (a polynomial).
    static MatrixFunction polynomial(const TaylorSeries& coeffs);
    /// D + z C (I - zA)^{-1} B.
    static MatrixFunction realization(const Matrix& a, const Matrix& b, const Matrix& c,
                                      const Matrix& d);

    Eigen::Index rows() const noexcept { return rows_; }
    Eigen::Index cols() const noexcept { return cols_; }

    Matrix operator()(cplx z) const { return impl_->eval(z); }
    TaylorSeries series(std::size_t n) const { return impl_->series(n); }

    MatrixFunction rows_block(Eigen::Index r0, Eigen::Index nr) const;

private:
    Eigen::Index rows_;
    Eigen::Index cols_;
    std::shared_ptr<const Impl> impl_;
};

/// Linear fractional map (T11 E + T12)(T21 E + T22)^{-1}, where T is square of
/// size p + q split after row and column p, and E is p x q.
MatrixFunction linear_fractional(const MatrixFunction& t, Eigen::Index p, const MatrixFunction& e);

///
/// A function that is intended to be contractive on the disk, together with
/// a partition of its rows into consecutive blocks. Contractivity is never
/// assumed by the type; use certify_schur to check it.
///
class SchurFunction {
public:
    explicit SchurFunction(MatrixFunction f, std::vector<Eigen::Index> row_blocks = {});

    static SchurFunction constant(const Matrix& value);
    static SchurFunction from_series(const TaylorSeries& coeffs);
    static SchurFunction from_realization(const Matrix& a, const Matrix& b, const Matrix& c,
                                          const Matrix& d);
    static SchurFunction from_blaschke(const BlaschkeProduct& b);

    Eigen::Index rows() const noexcept { return f_.rows(); }
    Eigen::Index cols() const noexcept { return f_.cols(); }
    const MatrixFunction& function() const noexcept { return f_; }

    Matrix operator()(cplx z) const { return f_(z); }
    TaylorSeries series(std::size_t n) const { return f_.series(n); }

    /// Row block sizes; they sum to rows(). Defaults to a single block.
    const std::vector<Eigen::Index>& partition() const noexcept { return blocks_; }
    SchurFunction with_partition(std::vector<Eigen::Index> row_blocks) const;

    /// The k-th row block as a function of its own.
    MatrixFunction block(std::size_t k) const;

private:
    MatrixFunction f_;
    std::vector<Eigen::Index> blocks_;
};

struct SchurCertificate {
    /// Largest singular value over the boundary samples.
    double max_singular_value = 0.0;
    /// Smallest eigenvalue of the kernel Gram (I - s(z)s(w)^*)/(1 - z conj(w)).
    double min_kernel_eigenvalue = 0.0;
    bool passed = false;
};

struct CertifyOptions {
    int boundary_samples = 512;
    double radius = 0.999;
    int interior_points = 24;
    std::uint64_t seed = 0;
    double sup_tol = 1e-8;
    double kernel_tol = 1e-8;
};

/// Contractivity on a circle of radius close to one plus positivity of the
/// Pick kernel on seeded interior points.
SchurCertificate certify_schur(const SchurFunction& s, const CertifyOptions& opts = {});

} // namespace hardy

#endif
