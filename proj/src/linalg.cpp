#include "hardy/linalg.hpp"

#include <cmath>

#include "hardy/error.hpp"

namespace hardy::linalg {

Matrix hermitian_part(const Matrix& m)
{
    return 0.5 * (m + m.adjoint());
}

double min_eigenvalue(const Matrix& m)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Matrix& m)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

double max_singular_value(const Matrix& m)
{
    if (m.size() == 0) {
        return 0.0;
    }
    if (m.rows() == 1 || m.cols() == 1) {
        return m.norm();
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

namespace {

Matrix pd_power(const Matrix& p, double rel_floor, bool invert)
{
    require(p.rows() == p.cols(), ErrorCode::dimension_mismatch, "matrix must be square");
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(p));
    const auto& lam = es.eigenvalues();
    const double top = lam.maxCoeff();
    require(top > 0.0 && lam.minCoeff() > rel_floor * top, ErrorCode::singular,
            "matrix is not numerically positive definite");
    Eigen::VectorXd d(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        d(i) = invert ? 1.0 / std::sqrt(lam(i)) : std::sqrt(lam(i));
    }
    const Matrix& v = es.eigenvectors();
    return v * d.cast<cplx>().asDiagonal() * v.adjoint();
}

} // namespace

Matrix sqrt_pd(const Matrix& p, double rel_floor)
{
    return pd_power(p, rel_floor, false);
}

Matrix inv_sqrt_pd(const Matrix& p, double rel_floor)
{
    return pd_power(p, rel_floor, true);
}

Matrix pinv(const Matrix& m, double rel_tol)
{
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double top = s.size() > 0 ? s(0) : 0.0;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rel_tol * top && s(i) > 0.0) {
            inv(i) = 1.0 / s(i);
        }
    }
    return svd.matrixV() * inv.cast<cplx>().asDiagonal() * svd.matrixU().adjoint();
}

double max_abs(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace hardy::linalg
