#pragma once

#include <Eigen/Dense>
#include <span>

namespace mret::stats {

/// Gamma distribution parameters (shape alpha, inverse scale beta).
struct GammaParams {
    double alpha = 1.0;
    double beta = 1.0;
    [[nodiscard]] double mean() const { return alpha / beta; }
    [[nodiscard]] double variance() const { return alpha / (beta * beta); }
};

/// Inverse-Wishart parameters in the v > 2d convention:
/// density ~ det(X)^{-v/2} etr(-X^{-1} V / 2), mean V / (v - 2d - 2).
struct InverseWishartParams {
    double dof = 7.0;
    Eigen::MatrixXd scale;
    [[nodiscard]] Eigen::MatrixXd mean() const {
        return scale / (dof - 2.0 * static_cast<double>(scale.rows()) - 2.0);
    }
};

[[nodiscard]] Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& a);

/// True when a is symmetric to sym_tol (relative) and Cholesky succeeds.
[[nodiscard]] bool is_spd(const Eigen::MatrixXd& a, double sym_tol = 1e-10);

/// Cholesky of the symmetrized input; throws std::domain_error when the input
/// is too asymmetric or not positive definite.
[[nodiscard]] Eigen::LLT<Eigen::MatrixXd> spd_cholesky(const Eigen::MatrixXd& a,
                                                       double sym_tol = 1e-10);

/// Lower-triangular L with L L^T = a.
[[nodiscard]] Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& a);

[[nodiscard]] double log_det_spd(const Eigen::MatrixXd& a);

[[nodiscard]] double log_gamma_pdf(double gamma, const GammaParams& p);
[[nodiscard]] double log_gamma_pdf(double gamma, double alpha, double beta);

[[nodiscard]] double log_poisson_pmf(long long n, double rate);

[[nodiscard]] double log_mvnormal_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                                      const Eigen::MatrixXd& cov);

/// ln Gamma_d(a) = (d(d-1)/4) ln pi + sum_{j=1..d} ln Gamma(a + (1-j)/2).
[[nodiscard]] double log_multivariate_gamma(int d, double a);

[[nodiscard]] double log_iwishart_pdf(const Eigen::MatrixXd& x, const InverseWishartParams& p);
[[nodiscard]] double log_iwishart_pdf(const Eigen::MatrixXd& x, double dof,
                                      const Eigen::MatrixXd& scale);

[[nodiscard]] double log_wishart_pdf(const Eigen::MatrixXd& x, double dof,
                                     const Eigen::MatrixXd& scale);

[[nodiscard]] double log_sum_exp(std::span<const double> values);

} // namespace mret::stats
