#ifndef HARDY_RANDOM_HPP
#define HARDY_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hardy/series.hpp"

namespace hardy {

/// Deterministic source of test data. Every draw goes through one
/// mt19937_64 so a seed fixes the whole sequence.
class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0);
    /// Standard complex Gaussian (independent N(0, 1/2) parts).
    cplx normal();
    /// Uniform in the disk of the given radius.
    cplx in_disk(double radius);

    Matrix matrix(Eigen::Index rows, Eigen::Index cols);
    Matrix unitary(Eigen::Index n);
    /// Matrix with largest singular value equal to `norm`.
    Matrix contraction(Eigen::Index rows, Eigen::Index cols, double norm);

    /// Polynomial with Gaussian coefficients up to degree `deg`, stored with
    /// `n` coefficients.
    TaylorSeries polynomial(Eigen::Index rows, Eigen::Index cols, std::size_t deg, std::size_t n);

    /// `count` points in the disk of radius `radius`, pairwise at least
    /// `separation` apart.
    std::vector<cplx> separated_points(int count, double radius, double separation);

    std::mt19937_64& engine() noexcept { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace hardy

#endif
