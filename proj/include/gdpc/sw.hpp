#ifndef GDPC_SW_HPP
#define GDPC_SW_HPP

#include <map>
#include <string>

#include "gdpc/panel.hpp"

namespace gdpc {

enum class Method { GDPC, SW, FHLR };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct CommonPartEstimate {
    Matrix chi_hat;  // T x m estimate of the common part
    Method method = Method::SW;
    int r = 1;  // static factors used
    std::map<std::string, double> diagnostics;
};

// Stock-Watson estimator: projection of the (column-centered) panel on
// its first r ordinary principal components, means added back. Equals
// the best affine rank-r approximation of Z in Frobenius norm. The
// eigendecomposition runs on the m x m covariance when m <= T and on the
// T x T Gram matrix otherwise.
CommonPartEstimate fit_sw(const Matrix& Z, int r);

}  // namespace gdpc

#endif
