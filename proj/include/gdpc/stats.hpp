#ifndef GDPC_STATS_HPP
#define GDPC_STATS_HPP

#include <utility>

#include "gdpc/panel.hpp"

namespace gdpc {

// Removes column means; returns the centered matrix and the means.
std::pair<Matrix, Vector> center_columns(const Matrix& X);

// Lag-u autocovariance on column-centered data, divisor T (biased
// estimator): Gamma(u) = (1/T) sum_{t=1}^{T-u} x_t x_{t+u}'.
// Gamma(-u) = Gamma(u)'. Throws std::invalid_argument when |u| >= T.
Matrix autocovariance(const Matrix& X, Eigen::Index lag);

// Largest singular value via power iteration on X'X. Deterministic:
// start vector is the normalized all-ones vector, tolerance 1e-10 on the
// Rayleigh-quotient change, at most 10000 iterations, with one restart
// from a second fixed vector if the first start lands in the null space.
double spectral_norm(const Matrix& X);

// ||A - B||_F^2 / ||A||_F^2. Throws std::invalid_argument on dimension
// mismatch or when ||A||_F = 0.
double relative_frobenius_error(const Matrix& A, const Matrix& B);

// Sample variance with divisor n of a vector (population-style).
double sample_variance(const Vector& x);

}  // namespace gdpc

#endif
