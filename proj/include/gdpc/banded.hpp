#ifndef GDPC_BANDED_HPP
#define GDPC_BANDED_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace gdpc {

namespace detail {
inline double conj_s(double x) { return x; }
inline std::complex<double> conj_s(const std::complex<double>& x) { return std::conj(x); }
inline double real_s(double x) { return x; }
inline double real_s(const std::complex<double>& x) { return x.real(); }
}  // namespace detail

// Cholesky factorization A = L L^H of a Hermitian positive definite
// banded matrix in LAPACK lower-band storage: band(d, j) = A(j + d, j)
// for d = 0..bw. Cost O(N bw^2); solves are O(N bw) per right-hand side.
template <typename Scalar>
class BandedCholesky {
  public:
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    // Returns false when a pivot is non-positive (A not numerically PD).
    bool compute(const Mat& band, Eigen::Index bandwidth) {
        bw_ = bandwidth;
        n_ = band.cols();
        L_ = band;
        for (Eigen::Index j = 0; j < n_; ++j) {
            double ajj = detail::real_s(L_(0, j));
            const Eigen::Index plo = std::max<Eigen::Index>(0, j - bw_);
            for (Eigen::Index p = plo; p < j; ++p) {
                const Scalar ljp = L_(j - p, p);
                ajj -= detail::real_s(ljp * detail::conj_s(ljp));
            }
            if (!(ajj > 0.0)) return false;
            const double ljj = std::sqrt(ajj);
            L_(0, j) = Scalar(ljj);
            const Eigen::Index ihi = std::min(j + bw_, n_ - 1);
            for (Eigen::Index i = j + 1; i <= ihi; ++i) {
                Scalar s = L_(i - j, j);
                const Eigen::Index qlo = std::max<Eigen::Index>(0, i - bw_);
                for (Eigen::Index p = qlo; p < j; ++p)
                    s -= L_(i - p, p) * detail::conj_s(L_(j - p, p));
                L_(i - j, j) = s / Scalar(ljj);
            }
        }
        ok_ = true;
        return true;
    }

    // Solves A x = b via the two triangular banded sweeps.
    Vec solve(const Vec& b) const {
        Vec y(n_);
        for (Eigen::Index i = 0; i < n_; ++i) {
            Scalar s = b[i];
            const Eigen::Index plo = std::max<Eigen::Index>(0, i - bw_);
            for (Eigen::Index p = plo; p < i; ++p) s -= L_(i - p, p) * y[p];
            y[i] = s / L_(0, i);
        }
        Vec x(n_);
        for (Eigen::Index i = n_ - 1; i >= 0; --i) {
            Scalar s = y[i];
            const Eigen::Index rhi = std::min(i + bw_, n_ - 1);
            for (Eigen::Index r = i + 1; r <= rhi; ++r)
                s -= detail::conj_s(L_(r - i, i)) * x[r];
            x[i] = s / L_(0, i);
        }
        return x;
    }

    // B = L^H X for dense X (N x m), exploiting the band.
    template <typename Rhs>
    Mat multiply_adjoint(const Rhs& X) const {
        Mat B = Mat::Zero(n_, X.cols());
        for (Eigen::Index i = 0; i < n_; ++i) {
            const Eigen::Index rhi = std::min(i + bw_, n_ - 1);
            for (Eigen::Index r = i; r <= rhi; ++r)
                B.row(i) += detail::conj_s(L_(r - i, i)) * X.row(r);
        }
        return B;
    }

    double min_diagonal() const {
        double v = detail::real_s(L_(0, 0));
        for (Eigen::Index j = 1; j < n_; ++j) v = std::min(v, detail::real_s(L_(0, j)));
        return v;
    }

    Eigen::Index size() const { return n_; }

  private:
    Mat L_;
    Eigen::Index bw_ = 0;
    Eigen::Index n_ = 0;
    bool ok_ = false;
};

// y = A x for symmetric real A in the same lower-band storage.
inline Eigen::VectorXd banded_sym_matvec(const Eigen::MatrixXd& band, Eigen::Index bw,
                                         const Eigen::VectorXd& x) {
    const Eigen::Index n = band.cols();
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        y[j] += band(0, j) * x[j];
        const Eigen::Index ihi = std::min(j + bw, n - 1);
        for (Eigen::Index i = j + 1; i <= ihi; ++i) {
            y[i] += band(i - j, j) * x[j];
            y[j] += band(i - j, j) * x[i];
        }
    }
    return y;
}

}  // namespace gdpc

#endif
