#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mret/stats.hpp"

namespace mret {

/// Initialization parameters (first-measurement-set hypothesis seeding).
struct InitConfig {
    double rate_mean = 15.0;            // e, initial mean of the measurement rates
    double rate_var = 10.0;             // v, initial variance of the measurement rates
    Eigen::VectorXd kinematics;         // c0; defaults to zeros(n_kinematics)
    double position_var = 100.0;        // P0 = position_var * I_{n_x}
    int hypotheses_per_mode = 0;        // N_p; 0 selects 2*(N_s - 1), floored at 1
};

/// Static model structure shared by every filter stage.
struct ModelConfig {
    int d = 2;                 // spatial dimension
    int n_subobjects = 3;      // N_s
    int n_kinematics = 3;      // n_c (speed, heading, turn-rate for the CT model)
    double sample_time = 1.0;  // T seconds
    int mode_count = 2;        // M
    InitConfig init;
    double sensor_noise_var = 1.0; // sigma^2 of R, used only by the degenerate-radius fallback

    [[nodiscard]] int state_dim() const { return d + n_kinematics + (n_subobjects - 1) * d; }
    /// Start of subobject i's offset block in the stacked state, i in [1, N_s).
    [[nodiscard]] int offset_start(int subobject) const {
        return d + n_kinematics + (subobject - 1) * d;
    }
    [[nodiscard]] int hypotheses_per_mode() const {
        if (init.hypotheses_per_mode > 0) return init.hypotheses_per_mode;
        return std::max(1, 2 * (n_subobjects - 1));
    }
};

/// One mixture hypothesis: gamma rates + joint Gaussian kinematics + per-subobject
/// inverse-Wishart extents, tagged with a motion mode.
struct GGIWComponent {
    double weight = 1.0;
    int mode = 0;
    std::vector<stats::GammaParams> rates;            // N_s
    Eigen::VectorXd kin_mean;                         // n_x
    Eigen::MatrixXd kin_cov;                          // n_x x n_x
    std::vector<stats::InverseWishartParams> extents; // N_s
};

struct GGIWMixture {
    std::vector<GGIWComponent> components;

    [[nodiscard]] double total_weight() const;
    void normalize();
    [[nodiscard]] std::size_t argmax_weight() const;
};

struct TargetEstimate {
    std::vector<double> rates;               // gamma means
    std::vector<Eigen::VectorXd> positions;  // H^{(i)} m
    std::vector<Eigen::MatrixXd> extents;    // V / (v - 2d - 2)
    Eigen::VectorXd kinematics;              // c block
};

/// Hypothesis seeding from the first measurement set. Produces
/// hypotheses_per_mode() * mode_count equally weighted components.
[[nodiscard]] GGIWMixture initialize(const std::vector<Eigen::VectorXd>& measurements,
                                     const ModelConfig& cfg);

/// d x n_x selector, subobject in [0, N_s): H^{(0)} x = p, H^{(i)} x = p + d^{(i)}.
[[nodiscard]] Eigen::MatrixXd measurement_matrix(int subobject, const ModelConfig& cfg);

/// Cross-mode merge then argmax-weight point estimate.
[[nodiscard]] TargetEstimate extract_estimate(const GGIWMixture& mix, const ModelConfig& cfg,
                                              double merge_threshold);

/// Point estimate of a single component without any merging.
[[nodiscard]] TargetEstimate component_estimate(const GGIWComponent& comp, const ModelConfig& cfg);

/// Linear map that re-labels subobject j (0-based, j >= 1) as the main one while
/// preserving every absolute subobject position; an involution, not a permutation.
[[nodiscard]] Eigen::MatrixXd main_swap_matrix(int j, const ModelConfig& cfg);

/// Re-labels the subobject closest to the center of the estimated positions as the
/// main one (ties keep the current main). Kinematics c are left untouched.
[[nodiscard]] GGIWComponent change_main_subobject(const GGIWComponent& comp,
                                                  const ModelConfig& cfg);

} // namespace mret
