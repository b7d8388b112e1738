#ifndef GDPC_SOLVER_HPP
#define GDPC_SOLVER_HPP

#include <utility>
#include <vector>

#include "gdpc/panel.hpp"

namespace gdpc {

// First generalized dynamic principal component of a panel: a factor
// path f (length T+k, entries f_{1-k}..f_T), per-series intercepts and
// (k+1) x m loadings minimizing the reconstruction mean squared error
//   MSE = (1/Tm) sum_t ||z_t - zhat_t||^2,
//   zhat_{t,j} = alpha_j + sum_{h=0..k} beta_{h,j} f_{t-h}.
struct GdpcFit {
    Vector f;       // factor path, f[i] holds f_{i+1-k}
    Vector alpha;   // intercepts, length m
    Matrix beta;    // loadings, (k+1) x m, row h = lag-h loadings
    int k = 0;      // lags used
    double mse = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> mse_history;  // one entry per alternation
};

struct GdpcOptions {
    double tol = 1e-6;   // relative MSE-change stopping threshold
    int max_iter = 500;
    // When non-empty, used as the initial factor path (length T+k)
    // instead of the first-principal-component start.
    Vector initial_factor;
};

// zhat as a T x m matrix, T = f.size() - k.
Matrix reconstruct(const GdpcFit& fit);

// Reconstruction MSE of the fit against Z. Throws on dimension mismatch.
double gdpc_mse(const Matrix& Z, const GdpcFit& fit);

// First set of linear equations: per-series least squares of z_j on
// (1, f_t, ..., f_{t-k}). Throws std::runtime_error when the design is
// rank deficient (e.g. a constant factor path).
std::pair<Vector, Matrix> update_loadings(const Matrix& Z, const Vector& f, int k);

// Second set of linear equations: the factor-path normal equations
// A f = b, with A symmetric banded of bandwidth k, solved by a banded
// Cholesky factorization (O(T k^2)). Throws std::runtime_error when A is
// numerically singular (condition estimate > 1e12).
Vector update_factor(const Matrix& Z, const Vector& alpha, const Matrix& beta);

// Enforces the identification convention: mean(f) = 0, variance of f = 1
// (divisor T+k), sum_j beta[0,j] >= 0; intercepts absorb the shift so
// the reconstruction is unchanged. Throws on zero-variance f.
GdpcFit normalize(GdpcFit fit);

// Alternates update_loadings / update_factor from a first-principal-
// component start until the relative MSE change drops below opts.tol or
// opts.max_iter is reached. Requires T > k + 2.
GdpcFit fit_gdpc(const Matrix& Z, int k, const GdpcOptions& opts = {});

}  // namespace gdpc

#endif
