#include "hardy/schur_function.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "hardy/error.hpp"
#include "hardy/linalg.hpp"
#include "hardy/random.hpp"

namespace hardy {

namespace {

class ConstantImpl final : public MatrixFunction::Impl {
public:
    explicit ConstantImpl(Matrix v) : v_(std::move(v)) {}
    Matrix eval(cplx) const override { return v_; }
    TaylorSeries series(std::size_t n) const override { return TaylorSeries::constant(v_, n); }

private:
    Matrix v_;
};

class PolynomialImpl final : public MatrixFunction::Impl {
public:
    explicit PolynomialImpl(TaylorSeries c) : c_(std::move(c)) {}
    Matrix eval(cplx z) const override { return hardy::eval(c_, z); }
    TaylorSeries series(std::size_t n) const override { return c_.resized(n); }

private:
    TaylorSeries c_;
};

class RealizationImpl final : public MatrixFunction::Impl {
public:
    RealizationImpl(Matrix a, Matrix b, Matrix c, Matrix d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
    }

    Matrix eval(cplx z) const override
    {
        if (a_.rows() == 0) {
            return d_;
        }
        const Matrix r = Matrix::Identity(a_.rows(), a_.cols()) - z * a_;
        return d_ + z * c_ * r.partialPivLu().solve(b_);
    }

    TaylorSeries series(std::size_t n) const override
    {
        TaylorSeries out(d_.rows(), d_.cols(), n);
        out[0] = d_;
        Matrix ab = b_;
        for (std::size_t k = 1; k < n && a_.rows() > 0; ++k) {
            out[k] = c_ * ab;
            ab = a_ * ab;
        }
        return out;
    }

private:
    Matrix a_, b_, c_, d_;
};

class BlaschkeImpl final : public MatrixFunction::Impl {
public:
    explicit BlaschkeImpl(BlaschkeProduct b) : b_(std::move(b)) {}
    Matrix eval(cplx z) const override { return Matrix::Constant(1, 1, b_(z)); }
    TaylorSeries series(std::size_t n) const override { return b_.series(n); }

private:
    BlaschkeProduct b_;
};

class RowBlockImpl final : public MatrixFunction::Impl {
public:
    RowBlockImpl(MatrixFunction f, Eigen::Index r0, Eigen::Index nr)
        : f_(std::move(f)), r0_(r0), nr_(nr)
    {
    }
    Matrix eval(cplx z) const override { return f_(z).middleRows(r0_, nr_); }
    TaylorSeries series(std::size_t n) const override
    {
        return f_.series(n).block(r0_, 0, nr_, f_.cols());
    }

private:
    MatrixFunction f_;
    Eigen::Index r0_, nr_;
};

class LftImpl final : public MatrixFunction::Impl {
public:
    LftImpl(MatrixFunction t, Eigen::Index p, MatrixFunction e)
        : t_(std::move(t)), p_(p), e_(std::move(e))
    {
    }

    Matrix eval(cplx z) const override
    {
        const Matrix t = t_(z);
        const Matrix e = e_(z);
        const Eigen::Index q = t.rows() - p_;
        const Matrix num = t.topLeftCorner(p_, p_) * e + t.topRightCorner(p_, q);
        const Matrix den = t.bottomLeftCorner(q, p_) * e + t.bottomRightCorner(q, q);
        // num * den^{-1} via den^T x^T = num^T.
        return den.transpose().partialPivLu().solve(num.transpose()).transpose();
    }

    TaylorSeries series(std::size_t n) const override
    {
        const TaylorSeries t = t_.series(n);
        const TaylorSeries e = e_.series(n);
        const Eigen::Index q = t_.rows() - p_;
        const TaylorSeries num = mul(t.block(0, 0, p_, p_), e) + t.block(0, p_, p_, q);
        const TaylorSeries den = mul(t.block(p_, 0, q, p_), e) + t.block(p_, p_, q, q);
        return mul(num, inverse(den, n));
    }

private:
    MatrixFunction t_;
    Eigen::Index p_;
    MatrixFunction e_;
};

} // namespace

MatrixFunction::MatrixFunction(Eigen::Index rows, Eigen::Index cols,
                               std::shared_ptr<const Impl> impl)
    : rows_(rows), cols_(cols), impl_(std::move(impl))
{
    require(rows >= 1 && cols >= 1 && impl_ != nullptr, ErrorCode::invalid_argument,
            "matrix function needs positive dimensions and an implementation");
}

MatrixFunction MatrixFunction::constant(const Matrix& value)
{
    return {value.rows(), value.cols(), std::make_shared<ConstantImpl>(value)};
}

MatrixFunction MatrixFunction::polynomial(const TaylorSeries& coeffs)
{
    return {coeffs.rows(), coeffs.cols(), std::make_shared<PolynomialImpl>(coeffs)};
}

MatrixFunction MatrixFunction::realization(const Matrix& a, const Matrix& b, const Matrix& c,
                                           const Matrix& d)
{
    require(a.rows() == a.cols() && b.rows() == a.rows() && c.cols() == a.rows()
                && b.cols() == d.cols() && c.rows() == d.rows(),
            ErrorCode::dimension_mismatch, "realization matrices have inconsistent shapes");
    return {d.rows(), d.cols(), std::make_shared<RealizationImpl>(a, b, c, d)};
}

MatrixFunction MatrixFunction::rows_block(Eigen::Index r0, Eigen::Index nr) const
{
    require(r0 >= 0 && nr >= 1 && r0 + nr <= rows_, ErrorCode::dimension_mismatch,
            "row block out of range");
    return {nr, cols_, std::make_shared<RowBlockImpl>(*this, r0, nr)};
}

MatrixFunction linear_fractional(const MatrixFunction& t, Eigen::Index p, const MatrixFunction& e)
{
    require(t.rows() == t.cols() && p >= 1 && p < t.rows(), ErrorCode::dimension_mismatch,
            "linear fractional map needs a square coefficient split inside its range");
    require(e.rows() == p && e.cols() == t.rows() - p, ErrorCode::dimension_mismatch,
            "linear fractional parameter has the wrong shape");
    return {p, t.rows() - p, std::make_shared<LftImpl>(t, p, e)};
}

SchurFunction::SchurFunction(MatrixFunction f, std::vector<Eigen::Index> row_blocks)
    : f_(std::move(f)), blocks_(std::move(row_blocks))
{
    if (blocks_.empty()) {
        blocks_.push_back(f_.rows());
    }
    for (auto b : blocks_) {
        require(b >= 1, ErrorCode::invalid_argument, "partition blocks must be positive");
    }
    require(std::accumulate(blocks_.begin(), blocks_.end(), Eigen::Index{0}) == f_.rows(),
            ErrorCode::dimension_mismatch, "partition does not cover the rows");
}

SchurFunction SchurFunction::constant(const Matrix& value)
{
    return SchurFunction(MatrixFunction::constant(value));
}

SchurFunction SchurFunction::from_series(const TaylorSeries& coeffs)
{
    return SchurFunction(MatrixFunction::polynomial(coeffs));
}

SchurFunction SchurFunction::from_realization(const Matrix& a, const Matrix& b, const Matrix& c,
                                              const Matrix& d)
{
    return SchurFunction(MatrixFunction::realization(a, b, c, d));
}

SchurFunction SchurFunction::from_blaschke(const BlaschkeProduct& b)
{
    return SchurFunction(MatrixFunction(1, 1, std::make_shared<BlaschkeImpl>(b)));
}

SchurFunction SchurFunction::with_partition(std::vector<Eigen::Index> row_blocks) const
{
    return SchurFunction(f_, std::move(row_blocks));
}

MatrixFunction SchurFunction::block(std::size_t k) const
{
    require(k < blocks_.size(), ErrorCode::invalid_argument, "partition block out of range");
    Eigen::Index r0 = 0;
    for (std::size_t i = 0; i < k; ++i) {
        r0 += blocks_[i];
    }
    return f_.rows_block(r0, blocks_[k]);
}

SchurCertificate certify_schur(const SchurFunction& s, const CertifyOptions& opts)
{
    require(opts.boundary_samples >= 1 && opts.interior_points >= 1 && opts.radius > 0.0
                && opts.radius < 1.0,
            ErrorCode::invalid_argument, "invalid certification options");
    SchurCertificate cert;
    for (int k = 0; k < opts.boundary_samples; ++k) {
        const cplx z = std::polar(opts.radius, 2.0 * std::numbers::pi * k / opts.boundary_samples);
        cert.max_singular_value = std::max(cert.max_singular_value,
                                           linalg::max_singular_value(s(z)));
    }

    Random rng(opts.seed);
    const int g = opts.interior_points;
    const Eigen::Index p = s.rows();
    std::vector<cplx> pts;
    std::vector<Matrix> vals;
    for (int k = 0; k < g; ++k) {
        pts.push_back(rng.in_disk(0.95));
        vals.push_back(s(pts.back()));
    }
    Matrix gram(g * p, g * p);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            gram.block(i * p, j * p, p, p) =
                (Matrix::Identity(p, p) - vals[i] * vals[j].adjoint())
                / (1.0 - pts[i] * std::conj(pts[j]));
        }
    }
    cert.min_kernel_eigenvalue = linalg::min_eigenvalue(gram);
    cert.passed = cert.max_singular_value <= 1.0 + opts.sup_tol
                  && cert.min_kernel_eigenvalue >= -opts.kernel_tol;
    return cert;
}

} // namespace hardy
