#ifndef GDPC_FHLR_HPP
#define GDPC_FHLR_HPP

#include <complex>
#include <utility>
#include <vector>

#include "gdpc/panel.hpp"
#include "gdpc/sw.hpp"

namespace gdpc {

using CMatrix = Eigen::MatrixXcd;

// Bartlett lag-window spectral density estimate on the canonical grid
// theta_h = 2*pi*h/(2M+1), h = -M..M.
struct SpectralEstimate {
    Vector frequencies;           // 2M+1 angles, ascending in h
    std::vector<CMatrix> spectra; // m x m Hermitian matrices, same order
    int M = 0;                    // lag-window size
};

// Sigma(theta) = (1/2pi) sum_{|u|<=M} (1 - |u|/(M+1)) Gamma(u) e^{-iu theta}
// with Gamma(u) the divisor-T autocovariances of the column-centered
// panel. Requires 1 <= M < T.
SpectralEstimate estimate_spectral_density(const Matrix& Z, int M);

// Splits every spectral matrix into its top-q eigenspace part and the
// remainder: Sigma_chi = sum_{l<=q} lambda_l p_l p_l^*, Sigma_e =
// Sigma - Sigma_chi, eigenvalues sorted descending. Requires 1 <= q <= m.
std::pair<std::vector<CMatrix>, std::vector<CMatrix>> dynamic_pca_split(
    const SpectralEstimate& S, int q);

// Inverse Fourier step: Gamma(u) = (2pi/(2M+1)) sum_h Sigma(theta_h)
// e^{iu theta_h}. The grid must have odd size 2M+1 in the canonical
// order. The imaginary part is checked to be below 1e-8 of the real
// scale and discarded.
Matrix covariances_from_spectra(const std::vector<CMatrix>& spectra, int u);

// Forni-Hallin-Lippi-Reichlin (2005) one-sided estimator of the common
// part: lag-window spectra with M = floor(sqrt(T)), dynamic
// eigendecomposition with q dynamic factors, covariances of the common
// and idiosyncratic parts at lag 0, then projection on the r leading
// generalized eigenvectors of the pencil (Gamma_chi(0), Gamma_e(0)).
// Requires T >= 10 and 1 <= q <= r <= m.
CommonPartEstimate fit_fhlr(const Matrix& Z, int q, int r);

}  // namespace gdpc

#endif
