#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardy/error.hpp"
#include "hardy/linalg.hpp"
#include "hardy/pick.hpp"
#include "hardy/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hardy;
using support::code_of;
using support::random_schur;

namespace {

NPData scalar_data(const std::vector<cplx>& w, const std::vector<cplx>& values)
{
    const auto n = static_cast<Eigen::Index>(w.size());
    NPData d{w, Matrix::Ones(1, n), Matrix(1, n)};
    for (Eigen::Index j = 0; j < n; ++j) {
        // s(w)^* * 1 = eta  ->  eta = conj(s(w)).
        d.eta(0, j) = std::conj(values[static_cast<std::size_t>(j)]);
    }
    return d;
}

} // namespace

TEST_CASE("Pick matrices")
{
    const auto one = scalar_data({0.0}, {cplx(0.3, 0.4)});
    CHECK(std::abs(pick_matrix(one)(0, 0) - (1.0 - 0.25)) < 1e-15);

    const auto two = scalar_data({0.0, 0.5}, {0.0, 0.0});
    Matrix want(2, 2);
    want << 1.0, 1.0, 1.0, 4.0 / 3.0;
    CHECK(linalg::max_abs(pick_matrix(two) - want) < 1e-15);
}

TEST_CASE("Pick matrix is Hermitian and PSD for data of a Schur function")
{
    Random rng(31);
    for (int t = 0; t < 100; ++t) {
        const auto s = random_schur(rng, 2, 2, 2, 0.95);
        const int n = 4;
        NPData d{{}, rng.matrix(2, n), Matrix(2, n)};
        for (int j = 0; j < n; ++j) {
            d.nodes.push_back(rng.in_disk(0.9));
            d.eta.col(j) = s(d.nodes.back()).adjoint() * d.xi.col(j);
        }
        const Matrix p = pick_matrix(d);
        CHECK(linalg::max_abs(p - p.adjoint()) <= 1e-14);
        CHECK(linalg::min_eigenvalue(p) >= -1e-8);
    }
}

TEST_CASE("feasibility")
{
    const auto bad = np_feasible(scalar_data({0.0}, {2.0}));
    CHECK_FALSE(bad.feasible);
    CHECK(std::abs(bad.min_eigenvalue + 3.0) < 1e-15);
    CHECK(np_feasible(scalar_data({0.0, 0.5, cplx(0, -0.3)}, {0.0, 0.0, 0.0})).feasible);
    const auto edge = np_feasible(scalar_data({0.2}, {cplx(0.6, 0.8)}));
    CHECK(edge.feasible);
    CHECK(std::abs(edge.min_eigenvalue) < 1e-15);
}

TEST_CASE("data validation")
{
    CHECK(code_of([] { pick_matrix(scalar_data({1.0}, {0.0})); }) == ErrorCode::invalid_argument);
    NPData zero_dir{{0.1}, Matrix::Zero(1, 1), Matrix::Zero(1, 1)};
    CHECK(code_of([&] { pick_matrix(zero_dir); }) == ErrorCode::invalid_argument);
    NPData mismatch{{0.1, 0.2}, Matrix::Ones(1, 1), Matrix::Zero(1, 2)};
    CHECK(code_of([&] { pick_matrix(mismatch); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("resolvent matrix is J-unitary on the circle and matches its series")
{
    Random rng(32);
    NPData d{{0.1, cplx(-0.3, 0.5), cplx(0.6, 0.1)}, rng.matrix(2, 3), Matrix()};
    d.eta = 0.3 * rng.matrix(1, 3);
    REQUIRE(np_feasible(d).min_eigenvalue > 0.0);
    const auto theta = resolvent_matrix(d);
    Matrix j = Matrix::Identity(3, 3);
    j(2, 2) = -1.0;
    for (int k = 0; k < 16; ++k) {
        const cplx z = std::polar(1.0, 0.4 * k + 0.1);
        const Matrix t = theta(z);
        CHECK(linalg::max_abs(t * j * t.adjoint() - j) < 1e-10);
    }
    CHECK(linalg::max_abs(theta(1.0) - Matrix::Identity(3, 3)) < 1e-15);
    const auto s = theta.series(200);
    const cplx z(0.3, -0.2);
    CHECK(linalg::max_abs(eval(s, z) - theta(z)) < 1e-12);
}

TEST_CASE("one-node central solution is the constant target")
{
    const auto s = np_solve(scalar_data({0.0}, {0.5}));
    for (cplx z : {cplx(0.0), cplx(0.3, 0.7), cplx(-0.9)}) {
        CHECK(std::abs(s(z)(0, 0) - 0.5) < 1e-14);
    }
    const auto s2 = np_solve(scalar_data({cplx(0.4, 0.3)}, {cplx(0.5, -0.2)}));
    CHECK(std::abs(s2(cplx(0.1, -0.6))(0, 0) - cplx(0.5, -0.2)) < 1e-12);
}

TEST_CASE("central solutions agree with the classical Schur algorithm")
{
    Random rng(33);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 2;
        std::vector<cplx> w, g;
        const auto s0 = random_schur(rng, 1, 1, 2, 0.9);
        for (int j = 0; j < n; ++j) {
            w.push_back(rng.in_disk(0.85));
            g.push_back(s0(w.back())(0, 0));
        }
        const auto s = np_solve(scalar_data(w, g));
        const oracle::ScalarSchur ref(w, g);
        double worst = 0.0;
        for (int k = 0; k < 64; ++k) {
            const cplx z = std::polar(0.98, 2.0 * std::numbers::pi * k / 64.0);
            worst = std::max(worst, std::abs(s(z)(0, 0) - ref(z)));
        }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("two nodes sampled from z/2")
{
    const std::vector<cplx> w{0.2, cplx(-0.4, 0.3)};
    const auto s = np_solve(scalar_data(w, {w[0] / 2.0, w[1] / 2.0}));
    for (cplx x : w) {
        CHECK(std::abs(s(x)(0, 0) - x / 2.0) < 1e-12);
    }
    CHECK(certify_schur(s).passed);
}

TEST_CASE("random matrix tangential problems")
{
    Random rng(34);
    for (int t = 0; t < 25; ++t) {
        const Eigen::Index p = 1 + t % 2;
        const Eigen::Index q = 1 + (t / 2) % 2;
        const int n = 1 + t % 4;
        const auto s0 = random_schur(rng, p, q, 2, 0.9);
        NPData d{{}, rng.matrix(p, n), Matrix(q, n)};
        for (int j = 0; j < n; ++j) {
            d.nodes.push_back(rng.in_disk(0.8));
            d.eta.col(j) = s0(d.nodes.back()).adjoint() * d.xi.col(j);
        }
        const auto s = np_solve(d);
        CHECK(interpolation_residual(s, d) <= 1e-8);
        CHECK(certify_schur(s).passed);

        // A non-trivial parameter gives another solution.
        const auto e = random_schur(rng, p, q, 1, 0.7);
        const auto se = np_solve(d, e);
        CHECK(interpolation_residual(se, d) <= 1e-8);
        CHECK(certify_schur(se).passed);
    }
}

TEST_CASE("solution series matches evaluation")
{
    const std::vector<cplx> w{0.1, cplx(0.2, 0.5)};
    const auto s = np_solve(scalar_data(w, {0.3, cplx(0.1, 0.2)}));
    const auto ser = s.series(256);
    for (cplx z : {cplx(0.0), cplx(0.5, -0.3)}) {
        CHECK(std::abs(eval(ser, z)(0, 0) - s(z)(0, 0)) < 1e-12);
    }
}

TEST_CASE("infeasible and degenerate problems are reported")
{
    CHECK(code_of([] { np_solve(scalar_data({0.0}, {2.0})); }) == ErrorCode::infeasible);
    CHECK(code_of([] { np_solve(scalar_data({0.3}, {1.2})); }) == ErrorCode::infeasible);
    // Boundary data from an inner function: rank-deficient Pick matrix.
    const std::vector<cplx> w{0.1, 0.5};
    CHECK(code_of([&] { np_solve(scalar_data(w, {w[0], w[1]})); }) == ErrorCode::degenerate);
}

TEST_CASE("zero Pick matrix yields the constant solution")
{
    // Every sample asks for s(w) = I: the Pick matrix vanishes identically.
    Random rng(35);
    NPData d{{}, Matrix(2, 6), Matrix(2, 6)};
    for (int j = 0; j < 3; ++j) {
        const Matrix a = rng.matrix(2, 2);
        const cplx w = rng.in_disk(0.7);
        for (int r = 0; r < 2; ++r) {
            d.nodes.push_back(w);
            d.xi.col(2 * j + r) = a.row(r).adjoint();
            d.eta.col(2 * j + r) = a.row(r).adjoint();
        }
    }
    const auto s = np_solve(d);
    CHECK(linalg::max_abs(s(0.3) - Matrix::Identity(2, 2)) < 1e-10);
    CHECK(interpolation_residual(s, d) < 1e-10);
}

TEST_CASE("origin tangential problems")
{
    Matrix x(1, 2);
    x << 1.0, 0.0;
    const auto s = origin_tangential_solve(x, Matrix::Constant(1, 1, 0.5));
    CHECK(std::abs(s(0.7)(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(s(0.7)(1, 0)) < 1e-15);

    CHECK(code_of([] {
              origin_tangential_solve(Matrix::Ones(1, 1), Matrix::Constant(1, 1, 1.2));
          })
          == ErrorCode::infeasible);

    // X = u P^{1/2}, u = (1, 1), P the two-point Gramian: gamma = 1 feasible.
    Matrix p(2, 2);
    p << 1.0, 1.0, 1.0, 4.0 / 3.0;
    const Matrix xp = Matrix::Ones(1, 2) * linalg::sqrt_pd(p);
    CHECK(std::abs((xp * xp.adjoint())(0, 0) - 13.0 / 3.0) < 1e-14);
    const auto sp = origin_tangential_solve(xp, Matrix::Ones(1, 1));
    CHECK(linalg::max_abs(xp * sp(0.0) - Matrix::Ones(1, 1)) < 1e-14);
    CHECK(std::abs(linalg::max_singular_value(sp(0.0)) - std::sqrt(3.0 / 13.0)) < 1e-14);
}

TEST_CASE("origin problems: parametrised solutions keep the value at zero")
{
    Random rng(36);
    for (int t = 0; t < 10; ++t) {
        const Matrix x = rng.matrix(2, 3);
        const Matrix gamma = 0.3 * rng.matrix(2, 2);
        const auto e = random_schur(rng, 3, 2, 1, 0.8);
        const auto s = origin_tangential_solve(x, gamma, e);
        CHECK(linalg::max_abs(x * s(0.0) - gamma) < 1e-10);
        CHECK(certify_schur(s).passed);
        // Without the parameter the least-norm constant comes back.
        const auto c = origin_tangential_solve(x, gamma);
        const Matrix want = x.adjoint() * (x * x.adjoint()).inverse() * gamma;
        CHECK(linalg::max_abs(c(0.4) - want) < 1e-12);
    }
}

TEST_CASE("origin feasibility boundary")
{
    Random rng(37);
    for (int t = 0; t < 20; ++t) {
        const Matrix x = rng.matrix(2, 3);
        const Matrix gamma = rng.matrix(2, 1);
        const Matrix g = gamma.adjoint() * (x * x.adjoint()).inverse() * gamma;
        const double lam = g(0, 0).real();
        const Matrix inside = gamma / std::sqrt(lam) * (1.0 - 1e-9);
        const Matrix outside = gamma / std::sqrt(lam) * (1.0 + 1e-7);
        CHECK_NOTHROW(origin_tangential_solve(x, inside));
        CHECK(code_of([&] { origin_tangential_solve(x, outside); }) == ErrorCode::infeasible);
    }
}

TEST_CASE("Schur certification")
{
    CHECK(certify_schur(SchurFunction::constant(Matrix::Constant(1, 1, 0.99))).passed);
    CHECK_FALSE(certify_schur(SchurFunction::constant(Matrix::Constant(1, 1, 1.01))).passed);
    CHECK(certify_schur(SchurFunction::from_blaschke(BlaschkeProduct::from_points({0.3, -0.5})))
              .passed);
    // z + 0.2 exceeds one near z = 1.
    CHECK_FALSE(certify_schur(SchurFunction::from_series(TaylorSeries::scalar({0.2, 1.0}))).passed);
}
