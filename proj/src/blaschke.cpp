#include "hardy/blaschke.hpp"

#include <cmath>

#include "hardy/error.hpp"
#include "hardy/linalg.hpp"

namespace hardy {

namespace {

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    std::vector<cplx> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}


} // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<BlaschkeZero> zeros, cplx unimodular)
    : zeros_(std::move(zeros)), c_(unimodular)
{
    require(!zeros_.empty(), ErrorCode::invalid_argument, "Blaschke product needs a zero");
    require(std::abs(std::abs(c_) - 1.0) <= 1e-12, ErrorCode::invalid_argument,
            "Blaschke constant must be unimodular");
    for (const auto& z : zeros_) {
        require(std::isfinite(z.a.real()) && std::isfinite(z.a.imag()) && std::abs(z.a) < 1.0,
                ErrorCode::invalid_argument, "Blaschke zeros must lie in the open unit disk");
        require(z.multiplicity >= 1, ErrorCode::invalid_argument,
                "zero multiplicity must be positive");
        degree_ += z.multiplicity;
    }
}

BlaschkeProduct BlaschkeProduct::from_points(const std::vector<cplx>& points)
{
    std::vector<BlaschkeZero> zeros;
    for (cplx p : points) {
        bool merged = false;
        for (auto& z : zeros) {
            if (z.a == p) {
                ++z.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) {
            zeros.push_back({p, 1});
        }
    }
    return BlaschkeProduct(std::move(zeros));
}

BlaschkeProduct BlaschkeProduct::single(cplx a, int multiplicity)
{
    return BlaschkeProduct({{a, multiplicity}});
}

std::vector<cplx> BlaschkeProduct::expanded_zeros() const
{
    std::vector<cplx> out;
    for (const auto& z : zeros_) {
        out.insert(out.end(), static_cast<std::size_t>(z.multiplicity), z.a);
    }
    return out;
}

bool BlaschkeProduct::has_distinct_zeros() const
{
    for (const auto& z : zeros_) {
        if (z.multiplicity != 1) {
            return false;
        }
    }
    return true;
}

cplx BlaschkeProduct::operator()(cplx z) const
{
    cplx v = c_;
    for (const auto& zero : zeros_) {
        const cplx f = (z - zero.a) / (1.0 - z * std::conj(zero.a));
        for (int k = 0; k < zero.multiplicity; ++k) {
            v *= f;
        }
    }
    return v;
}

std::vector<cplx> BlaschkeProduct::numerator() const
{
    std::vector<cplx> num{c_};
    for (const auto& zero : zeros_) {
        for (int k = 0; k < zero.multiplicity; ++k) {
            num = poly_mul(num, {-zero.a, 1.0});
        }
    }
    return num;
}

std::vector<cplx> BlaschkeProduct::denominator() const
{
    std::vector<cplx> den{1.0};
    for (const auto& zero : zeros_) {
        for (int k = 0; k < zero.multiplicity; ++k) {
            den = poly_mul(den, {1.0, -std::conj(zero.a)});
        }
    }
    return den;
}

TaylorSeries BlaschkeProduct::series(std::size_t n) const
{
    const auto num = numerator();
    const auto den = denominator();
    std::vector<cplx> y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = k < num.size() ? num[k] : 0.0;
        for (std::size_t i = 1; i < den.size() && i <= k; ++i) {
            acc -= den[i] * y[k - i];
        }
        y[k] = acc;
    }
    return TaylorSeries::scalar(y);
}

cplx eval_blaschke(const BlaschkeProduct& b, cplx z)
{
    return b(z);
}

std::vector<cplx> preimages(const BlaschkeProduct& b, cplx w)
{
    require(std::abs(w) < 1.0, ErrorCode::invalid_argument, "preimage target must lie in the disk");
    const auto num = b.numerator();
    const auto den = b.denominator();
    const int m = b.degree();
    std::vector<cplx> poly(num.size());
    for (std::size_t k = 0; k < num.size(); ++k) {
        poly[k] = num[k] - w * den[k];
    }
    Matrix companion = Matrix::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        companion(0, k) = -poly[static_cast<std::size_t>(m - 1 - k)] / poly[static_cast<std::size_t>(m)];
        if (k + 1 < m) {
            companion(k + 1, k) = 1.0;
        }
    }
    Eigen::ComplexEigenSolver<Matrix> es(companion, false);
    std::vector<cplx> roots;
    for (Eigen::Index k = 0; k < m; ++k) {
        cplx z = es.eigenvalues()(k);
        for (int it = 0; it < 3; ++it) {
            cplx p = poly.back();
            cplx dp = 0.0;
            for (std::size_t i = poly.size() - 1; i-- > 0;) {
                dp = dp * z + p;
                p = p * z + poly[i];
            }
            if (std::abs(dp) == 0.0) {
                break;
            }
            z -= p / dp;
        }
        roots.push_back(z);
    }
    return roots;
}

StateSpacePair state_space(const BlaschkeProduct& b)
{
    const int m = b.degree();
    StateSpacePair pair{Matrix::Zero(1, m), Matrix::Zero(m, m)};
    int offset = 0;
    for (const auto& zero : b.zeros()) {
        pair.C(0, offset) = 1.0;
        for (int k = 0; k < zero.multiplicity; ++k) {
            pair.A(offset + k, offset + k) = std::conj(zero.a);
            if (k + 1 < zero.multiplicity) {
                pair.A(offset + k, offset + k + 1) = 1.0;
            }
        }
        offset += zero.multiplicity;
    }
    return pair;
}

bool is_observable(const StateSpacePair& pair, double rel_tol)
{
    const Eigen::Index m = pair.A.rows();
    Matrix obs(m, m);
    Matrix row = pair.C;
    for (Eigen::Index k = 0; k < m; ++k) {
        obs.row(k) = row;
        row = row * pair.A;
    }
    Eigen::JacobiSVD<Matrix> svd(obs);
    const auto& s = svd.singularValues();
    return s(s.size() - 1) > rel_tol * s(0);
}

Matrix gramian(const StateSpacePair& pair)
{
    const Eigen::Index m = pair.A.rows();
    require(pair.A.cols() == m && pair.C.rows() == 1 && pair.C.cols() == m,
            ErrorCode::dimension_mismatch, "gramian: (C, A) shapes are inconsistent");
    Eigen::ComplexEigenSolver<Matrix> eig(pair.A, false);
    require(eig.eigenvalues().cwiseAbs().maxCoeff() < 1.0, ErrorCode::not_convergent,
            "gramian: spectral radius of A must be below one");

    // vec(A^* P A) = (A^T kron A^*) vec(P), column-major vec.
    const Eigen::Index mm = m * m;
    Matrix op = Matrix::Identity(mm, mm);
    const Matrix at = pair.A.transpose();
    const Matrix ah = pair.A.adjoint();
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            op.block(i * m, j * m, m, m) -= at(i, j) * ah;
        }
    }
    const Matrix rhs_m = pair.C.adjoint() * pair.C;
    const Vector rhs = Eigen::Map<const Vector>(rhs_m.data(), mm);
    const Vector sol = op.partialPivLu().solve(rhs);
    Matrix p = Eigen::Map<const Matrix>(sol.data(), m, m);
    p = linalg::hermitian_part(p);

    Eigen::SelfAdjointEigenSolver<Matrix> es(p, Eigen::EigenvaluesOnly);
    const auto& lam = es.eigenvalues();
    require(lam.maxCoeff() > 0.0 && lam.minCoeff() > 1e-12 * lam.maxCoeff(),
            ErrorCode::singular, "gramian: P is singular (pair not observable)");
    return p;
}

ModelBasis::ModelBasis(BlaschkeProduct b, StateSpacePair pair, Matrix gram, Matrix ortho)
    : b_(std::move(b)), pair_(std::move(pair)), gram_(std::move(gram)), ortho_(std::move(ortho))
{
    const Eigen::Index m = b_.degree();
    require(pair_.A.rows() == m && gram_.rows() == m && ortho_.rows() == m && ortho_.cols() == m,
            ErrorCode::dimension_mismatch, "model basis: inconsistent dimensions");
}

RowVector ModelBasis::cauchy_row(cplx z) const
{
    const Eigen::Index m = pair_.A.rows();
    const Matrix resolvent = Matrix::Identity(m, m) - z * pair_.A;
    // Solve x (I - zA) = C  <=>  (I - zA)^T x^T = C^T.
    const Vector xt = resolvent.transpose().partialPivLu().solve(pair_.C.transpose());
    return xt.transpose();
}

RowVector ModelBasis::row(cplx z) const
{
    return cauchy_row(z) * ortho_;
}

TaylorSeries ModelBasis::series(std::size_t n) const
{
    TaylorSeries out(1, dimension(), n);
    Matrix ca = pair_.C;
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = ca * ortho_;
        ca = ca * pair_.A;
    }
    return out;
}

ModelBasis ModelBasis::remixed(const Matrix& u) const
{
    const Eigen::Index m = dimension();
    require(u.rows() == m && u.cols() == m, ErrorCode::dimension_mismatch,
            "remix matrix must be M x M");
    require(linalg::max_abs(u.adjoint() * u - Matrix::Identity(m, m)) <= 1e-10,
            ErrorCode::invalid_argument, "remix matrix must be unitary");
    return ModelBasis(b_, pair_, gram_, ortho_ * u);
}

ModelBasis orthonormal_basis(const BlaschkeProduct& b)
{
    StateSpacePair pair = state_space(b);
    Matrix p = gramian(pair);
    Matrix w = linalg::inv_sqrt_pd(p);
    return ModelBasis(b, std::move(pair), std::move(p), std::move(w));
}

std::vector<RowVector> basis_derivatives(const ModelBasis& basis, cplx a, int k_max, RowKind kind)
{
    require(std::abs(a) < 1.0, ErrorCode::invalid_argument, "derivative point must lie in the disk");
    require(k_max >= 0 && k_max <= max_derivative_order, ErrorCode::invalid_argument,
            "derivative order out of range");
    const auto& pair = basis.pair();
    const Eigen::Index m = pair.A.rows();
    const Matrix resolvent = (Matrix::Identity(m, m) - a * pair.A).inverse();
    const Matrix right = kind == RowKind::orthonormal ? basis.ortho() : Matrix::Identity(m, m);

    std::vector<RowVector> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    Matrix ca = pair.C;         // C A^k
    Matrix rpow = resolvent;    // (I - aA)^{-(k+1)}
    double fact = 1.0;          // k!
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) {
            fact *= k;
            ca = ca * pair.A;
            rpow = rpow * resolvent;
        }
        out.push_back(fact * ca * rpow * right);
    }
    return out;
}

} // namespace hardy
