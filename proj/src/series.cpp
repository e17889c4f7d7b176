#include "hardy/series.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"

namespace hardy {

namespace {

bool all_finite(const Matrix& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

void require_same_shape(const TaylorSeries& a, const TaylorSeries& b, const char* op)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::dimension_mismatch,
            std::string(op) + ": series shapes differ");
}

} // namespace

TaylorSeries::TaylorSeries(Eigen::Index rows, Eigen::Index cols, std::size_t n)
    : rows_(rows), cols_(cols)
{
    require(rows >= 1 && cols >= 1, ErrorCode::invalid_argument,
            "series dimensions must be positive");
    require(n >= 1, ErrorCode::invalid_argument, "series truncation must be at least 1");
    coeffs_.assign(n, Matrix::Zero(rows, cols));
}

TaylorSeries::TaylorSeries(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs))
{
    require(!coeffs_.empty(), ErrorCode::invalid_argument, "series needs at least one coefficient");
    rows_ = coeffs_.front().rows();
    cols_ = coeffs_.front().cols();
    require(rows_ >= 1 && cols_ >= 1, ErrorCode::invalid_argument,
            "series dimensions must be positive");
    for (const auto& c : coeffs_) {
        require(c.rows() == rows_ && c.cols() == cols_, ErrorCode::dimension_mismatch,
                "series coefficients have inconsistent shapes");
        require(all_finite(c), ErrorCode::invalid_argument, "series coefficient is not finite");
    }
}

TaylorSeries TaylorSeries::constant(const Matrix& value, std::size_t n)
{
    TaylorSeries s(value.rows(), value.cols(), n);
    s.coeffs_[0] = value;
    return s;
}

TaylorSeries TaylorSeries::scalar(const std::vector<cplx>& coeffs)
{
    std::vector<Matrix> c;
    c.reserve(coeffs.size());
    for (cplx v : coeffs) {
        c.push_back(Matrix::Constant(1, 1, v));
    }
    return TaylorSeries(std::move(c));
}

TaylorSeries TaylorSeries::monomial(std::size_t k, std::size_t n)
{
    require(k < n, ErrorCode::truncation_too_small, "monomial degree exceeds truncation");
    TaylorSeries s(1, 1, n);
    s.coeffs_[k](0, 0) = 1.0;
    return s;
}

TaylorSeries TaylorSeries::resized(std::size_t n) const
{
    require(n >= 1, ErrorCode::invalid_argument, "series truncation must be at least 1");
    TaylorSeries out(rows_, cols_, n);
    std::copy_n(coeffs_.begin(), std::min(n, coeffs_.size()), out.coeffs_.begin());
    return out;
}

TaylorSeries TaylorSeries::block(Eigen::Index r0, Eigen::Index c0, Eigen::Index nr,
                                 Eigen::Index nc) const
{
    require(r0 >= 0 && c0 >= 0 && nr >= 1 && nc >= 1 && r0 + nr <= rows_ && c0 + nc <= cols_,
            ErrorCode::dimension_mismatch, "series block out of range");
    TaylorSeries out(nr, nc, size());
    for (std::size_t n = 0; n < size(); ++n) {
        out.coeffs_[n] = coeffs_[n].block(r0, c0, nr, nc);
    }
    return out;
}

TaylorSeries TaylorSeries::conj_flip() const
{
    TaylorSeries out(cols_, rows_, size());
    for (std::size_t n = 0; n < size(); ++n) {
        out.coeffs_[n] = coeffs_[n].adjoint();
    }
    return out;
}

TaylorSeries TaylorSeries::shifted(std::size_t k) const
{
    TaylorSeries out(rows_, cols_, size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& other)
{
    require_same_shape(*this, other, "add");
    if (other.size() > size()) {
        coeffs_.resize(other.size(), Matrix::Zero(rows_, cols_));
    }
    for (std::size_t n = 0; n < other.size(); ++n) {
        coeffs_[n] += other.coeffs_[n];
    }
    return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& other)
{
    require_same_shape(*this, other, "subtract");
    if (other.size() > size()) {
        coeffs_.resize(other.size(), Matrix::Zero(rows_, cols_));
    }
    for (std::size_t n = 0; n < other.size(); ++n) {
        coeffs_[n] -= other.coeffs_[n];
    }
    return *this;
}

TaylorSeries& TaylorSeries::operator*=(cplx s)
{
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b)
{
    a += b;
    return a;
}

TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b)
{
    a -= b;
    return a;
}

TaylorSeries operator*(cplx s, TaylorSeries f)
{
    f *= s;
    return f;
}

TaylorSeries operator*(const Matrix& m, const TaylorSeries& f)
{
    require(m.cols() == f.rows(), ErrorCode::dimension_mismatch,
            "matrix-series product: inner dimensions differ");
    std::vector<Matrix> c;
    c.reserve(f.size());
    for (const auto& fn : f.coeffs()) {
        c.push_back(m * fn);
    }
    return TaylorSeries(std::move(c));
}

TaylorSeries operator*(const TaylorSeries& f, const Matrix& m)
{
    require(f.cols() == m.rows(), ErrorCode::dimension_mismatch,
            "series-matrix product: inner dimensions differ");
    std::vector<Matrix> c;
    c.reserve(f.size());
    for (const auto& fn : f.coeffs()) {
        c.push_back(fn * m);
    }
    return TaylorSeries(std::move(c));
}

Matrix h2_form(const TaylorSeries& f, const TaylorSeries& g)
{
    require(f.rows() == g.rows() && f.cols() == g.cols() && f.size() == g.size(),
            ErrorCode::dimension_mismatch, "h2_form: operands must share p, q and N");
    const Eigen::Index p = f.rows();
    const Eigen::Index q = f.cols();
    Matrix acc = Matrix::Zero(q, q);
    for (std::size_t n = 0; n < f.size(); ++n) {
        const Matrix& fn = f[n];
        const Matrix& gn = g[n];
        for (Eigen::Index k = 0; k < q; ++k) {
            for (Eigen::Index l = 0; l < q; ++l) {
                cplx s = acc(k, l);
                for (Eigen::Index i = 0; i < p; ++i) {
                    s += std::conj(fn(i, k)) * gn(i, l);
                }
                acc(k, l) = s;
            }
        }
    }
    return acc;
}

double norm2(const TaylorSeries& f)
{
    const Matrix form = h2_form(f, f);
    double t = 0.0;
    for (Eigen::Index k = 0; k < form.rows(); ++k) {
        t += form(k, k).real();
    }
    return t;
}

Matrix eval(const TaylorSeries& f, cplx z)
{
    Matrix acc = f[f.size() - 1];
    for (std::size_t n = f.size() - 1; n-- > 0;) {
        acc *= z;
        acc += f[n];
    }
    return acc;
}

TaylorSeries mul(const TaylorSeries& f, const TaylorSeries& g)
{
    require(f.cols() == g.rows(), ErrorCode::dimension_mismatch,
            "mul: inner dimensions differ");
    const std::size_t n = std::min(f.size(), g.size());
    TaylorSeries out(f.rows(), g.cols(), n);
    for (std::size_t k = 0; k < n; ++k) {
        if (f[k].isZero(0.0)) {
            continue;
        }
        for (std::size_t j = 0; k + j < n; ++j) {
            out[k + j].noalias() += f[k] * g[j];
        }
    }
    return out;
}

TaylorSeries derivative(const TaylorSeries& f, std::size_t k)
{
    require(k < f.size(), ErrorCode::truncation_too_small,
            "derivative order must be below the truncation");
    if (k == 0) {
        return f;
    }
    TaylorSeries out(f.rows(), f.cols(), f.size() - k);
    for (std::size_t n = 0; n < out.size(); ++n) {
        // (n+k)! / n!
        double fall = 1.0;
        for (std::size_t i = 1; i <= k; ++i) {
            fall *= static_cast<double>(n + i);
        }
        out[n] = fall * f[n + k];
    }
    return out;
}

TaylorSeries inverse(const TaylorSeries& f, std::size_t n)
{
    require(f.rows() == f.cols(), ErrorCode::dimension_mismatch, "inverse: series must be square");
    Eigen::PartialPivLU<Matrix> lu(f[0]);
    require(std::abs(lu.determinant()) > 0.0, ErrorCode::singular,
            "inverse: constant term is singular");
    const Matrix c0inv = lu.inverse();
    TaylorSeries out(f.rows(), f.cols(), n);
    out[0] = c0inv;
    for (std::size_t k = 1; k < n; ++k) {
        Matrix acc = Matrix::Zero(f.rows(), f.cols());
        const std::size_t top = std::min(k, f.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) {
            acc.noalias() += f[j] * out[k - j];
        }
        out[k] = -c0inv * acc;
    }
    return out;
}

TaylorSeries vstack(const std::vector<TaylorSeries>& parts)
{
    require(!parts.empty(), ErrorCode::invalid_argument, "vstack: nothing to stack");
    const Eigen::Index q = parts.front().cols();
    const std::size_t n = parts.front().size();
    Eigen::Index rows = 0;
    for (const auto& p : parts) {
        require(p.cols() == q && p.size() == n, ErrorCode::dimension_mismatch,
                "vstack: parts must share column count and truncation");
        rows += p.rows();
    }
    TaylorSeries out(rows, q, n);
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::Index r = 0;
        for (const auto& p : parts) {
            out[k].middleRows(r, p.rows()) = p[k];
            r += p.rows();
        }
    }
    return out;
}

double max_abs_diff(const TaylorSeries& f, const TaylorSeries& g)
{
    require_same_shape(f, g, "max_abs_diff");
    double worst = 0.0;
    const std::size_t n = std::max(f.size(), g.size());
    for (std::size_t k = 0; k < n; ++k) {
        Matrix d = Matrix::Zero(f.rows(), f.cols());
        if (k < f.size()) {
            d += f[k];
        }
        if (k < g.size()) {
            d -= g[k];
        }
        worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
    return worst;
}

} // namespace hardy
