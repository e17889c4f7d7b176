#ifndef HARDY_LINALG_HPP
#define HARDY_LINALG_HPP

#include "hardy/series.hpp"

namespace hardy::linalg {

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Matrix& m);
double max_eigenvalue(const Matrix& m);

double max_singular_value(const Matrix& m);

/// P^{1/2} and P^{-1/2} of a Hermitian positive definite matrix. Throws
/// ErrorCode::singular when an eigenvalue falls below rel_floor * max.
Matrix sqrt_pd(const Matrix& p, double rel_floor = 1e-12);
Matrix inv_sqrt_pd(const Matrix& p, double rel_floor = 1e-12);

/// Moore-Penrose pseudo-inverse; singular values below rel_tol * max are
/// treated as zero.
Matrix pinv(const Matrix& m, double rel_tol = 1e-12);

/// Largest entry modulus.
double max_abs(const Matrix& m);

Matrix hermitian_part(const Matrix& m);

} // namespace hardy::linalg

#endif
