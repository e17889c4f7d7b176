#include "hardy/random.hpp"

#include <cmath>
#include <numbers>

#include "hardy/error.hpp"

namespace hardy {

double Random::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
}

cplx Random::normal()
{
    std::normal_distribution<double> d(0.0, std::sqrt(0.5));
    const double re = d(gen_);
    const double im = d(gen_);
    return {re, im};
}

cplx Random::in_disk(double radius)
{
    const double r = radius * std::sqrt(uniform());
    const double t = uniform(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, t);
}

Matrix Random::matrix(Eigen::Index rows, Eigen::Index cols)
{
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            m(i, j) = normal();
        }
    }
    return m;
}

Matrix Random::unitary(Eigen::Index n)
{
    Eigen::HouseholderQR<Matrix> qr(matrix(n, n));
    Matrix q = qr.householderQ();
    // Fix the phases so the distribution does not depend on QR conventions.
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) {
            q.col(k) *= r(k, k) / mag;
        }
    }
    return q;
}

Matrix Random::contraction(Eigen::Index rows, Eigen::Index cols, double norm)
{
    Matrix m = matrix(rows, cols);
    Eigen::JacobiSVD<Matrix> svd(m);
    const double top = svd.singularValues()(0);
    return top > 0.0 ? Matrix(m * (norm / top)) : m;
}

TaylorSeries Random::polynomial(Eigen::Index rows, Eigen::Index cols, std::size_t deg,
                                std::size_t n)
{
    require(deg < n, ErrorCode::truncation_too_small, "polynomial degree exceeds truncation");
    TaylorSeries f(rows, cols, n);
    for (std::size_t k = 0; k <= deg; ++k) {
        f[k] = matrix(rows, cols);
    }
    return f;
}

std::vector<cplx> Random::separated_points(int count, double radius, double separation)
{
    std::vector<cplx> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < count) {
        require(++attempts < 100000, ErrorCode::invalid_argument,
                "cannot place separated points");
        const cplx z = in_disk(radius);
        bool ok = true;
        for (cplx w : pts) {
            ok = ok && std::abs(z - w) >= separation;
        }
        if (ok) {
            pts.push_back(z);
        }
    }
    return pts;
}

} // namespace hardy
