#include "mret/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mret::stats {

namespace {
constexpr double kLogPi = 1.1447298858494001741; // ln(pi)
constexpr double kLog2Pi = 1.8378770664093454836; // ln(2*pi)
constexpr double kLog2 = 0.69314718055994530942;
} // namespace

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& a) {
    return 0.5 * (a + a.transpose());
}

bool is_spd(const Eigen::MatrixXd& a, double sym_tol) {
    if (a.rows() != a.cols() || a.rows() == 0) return false;
    const double asym = (a - a.transpose()).norm();
    const double scale = std::max(a.norm(), 1e-300);
    if (asym > sym_tol * scale) return false;
    Eigen::LLT<Eigen::MatrixXd> llt(symmetrized(a));
    return llt.info() == Eigen::Success;
}

Eigen::LLT<Eigen::MatrixXd> spd_cholesky(const Eigen::MatrixXd& a, double sym_tol) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw std::domain_error("spd_cholesky: matrix must be square and non-empty");
    const double asym = (a - a.transpose()).norm();
    const double scale = std::max(a.norm(), 1e-300);
    if (asym > sym_tol * scale)
        throw std::domain_error("spd_cholesky: matrix is not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(symmetrized(a));
    if (llt.info() != Eigen::Success)
        throw std::domain_error("spd_cholesky: matrix is not positive definite");
    return llt;
}

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& a) {
    return spd_cholesky(a).matrixL();
}

double log_det_spd(const Eigen::MatrixXd& a) {
    const Eigen::MatrixXd l = spd_cholesky(a).matrixL();
    return 2.0 * l.diagonal().array().log().sum();
}

double log_gamma_pdf(double gamma, const GammaParams& p) {
    return log_gamma_pdf(gamma, p.alpha, p.beta);
}

double log_gamma_pdf(double gamma, double alpha, double beta) {
    if (gamma <= 0.0) throw std::domain_error("log_gamma_pdf: gamma must be positive");
    if (alpha <= 0.0 || beta <= 0.0)
        throw std::domain_error("log_gamma_pdf: alpha and beta must be positive");
    return alpha * std::log(beta) - std::lgamma(alpha) + (alpha - 1.0) * std::log(gamma) -
           beta * gamma;
}

double log_poisson_pmf(long long n, double rate) {
    if (n < 0) throw std::domain_error("log_poisson_pmf: n must be non-negative");
    if (rate <= 0.0) throw std::domain_error("log_poisson_pmf: rate must be positive");
    const double nd = static_cast<double>(n);
    return nd * std::log(rate) - rate - std::lgamma(nd + 1.0);
}

double log_mvnormal_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                        const Eigen::MatrixXd& cov) {
    if (x.size() != mean.size() || cov.rows() != x.size() || cov.cols() != x.size())
        throw std::invalid_argument("log_mvnormal_pdf: dimension mismatch");
    const auto llt = spd_cholesky(cov);
    const Eigen::MatrixXd l = llt.matrixL();
    const double log_det = 2.0 * l.diagonal().array().log().sum();
    const Eigen::VectorXd w = llt.matrixL().solve(x - mean);
    return -0.5 * (static_cast<double>(x.size()) * kLog2Pi + log_det + w.squaredNorm());
}

double log_multivariate_gamma(int d, double a) {
    if (d < 1) throw std::domain_error("log_multivariate_gamma: d must be positive");
    if (a <= 0.5 * (d - 1))
        throw std::domain_error("log_multivariate_gamma: require a > (d-1)/2");
    double out = 0.25 * d * (d - 1) * kLogPi;
    for (int j = 1; j <= d; ++j) out += std::lgamma(a + 0.5 * (1.0 - j));
    return out;
}

double log_iwishart_pdf(const Eigen::MatrixXd& x, const InverseWishartParams& p) {
    return log_iwishart_pdf(x, p.dof, p.scale);
}

double log_iwishart_pdf(const Eigen::MatrixXd& x, double dof, const Eigen::MatrixXd& scale) {
    const int d = static_cast<int>(x.rows());
    if (dof <= 2.0 * d) throw std::domain_error("log_iwishart_pdf: require dof > 2d");
    const double nu = dof - d - 1.0; // degrees of freedom of the matching Wishart on X^{-1}
    const auto llt_x = spd_cholesky(x);
    const double log_det_x = 2.0 * Eigen::MatrixXd(llt_x.matrixL()).diagonal().array().log().sum();
    const double log_det_v = log_det_spd(scale);
    const double trace_term = llt_x.solve(scale).trace();
    return -0.5 * nu * d * kLog2 + 0.5 * nu * log_det_v - log_multivariate_gamma(d, 0.5 * nu) -
           0.5 * dof * log_det_x - 0.5 * trace_term;
}

double log_wishart_pdf(const Eigen::MatrixXd& x, double dof, const Eigen::MatrixXd& scale) {
    const int d = static_cast<int>(x.rows());
    if (dof < static_cast<double>(d)) throw std::domain_error("log_wishart_pdf: require dof >= d");
    const double log_det_x = log_det_spd(x);
    const auto llt_w = spd_cholesky(scale);
    const double log_det_w = 2.0 * Eigen::MatrixXd(llt_w.matrixL()).diagonal().array().log().sum();
    const double trace_term = llt_w.solve(x).trace();
    return -0.5 * dof * d * kLog2 + 0.5 * (dof - d - 1.0) * log_det_x -
           log_multivariate_gamma(d, 0.5 * dof) - 0.5 * dof * log_det_w - 0.5 * trace_term;
}

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("log_sum_exp: empty input");
    const double m = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(m)) return m; // all -inf (or a nan/inf input) propagates
    double acc = 0.0;
    for (double v : values) acc += std::exp(v - m);
    return m + std::log(acc);
}

} // namespace mret::stats
