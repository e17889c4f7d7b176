#ifndef HARDY_TEST_SUPPORT_HPP
#define HARDY_TEST_SUPPORT_HPP

#include <doctest.h>

#include <functional>

#include "hardy/error.hpp"
#include "hardy/random.hpp"
#include "hardy/schur_function.hpp"

namespace support {

inline hardy::ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const hardy::Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return hardy::ErrorCode::invalid_argument;
}

/// Rational Schur function p x q of McMillan degree `deg` from a block of a
/// random unitary colligation, scaled by rho < 1.
inline hardy::SchurFunction random_schur(hardy::Random& rng, Eigen::Index p, Eigen::Index q,
                                         Eigen::Index deg, double rho)
{
    const hardy::Matrix col = rho * rng.unitary(deg + std::max(p, q));
    return hardy::SchurFunction::from_realization(
        col.topLeftCorner(deg, deg), col.block(0, deg, deg, q), col.block(deg, 0, p, deg),
        col.block(deg, deg, p, q));
}

} // namespace support

#endif
