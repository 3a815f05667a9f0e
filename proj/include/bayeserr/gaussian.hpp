// Two-class Gaussian generative models with exact class posteriors, used as
// the synthetic benchmark: PN and positive-conditional sampling plus a
// Monte-Carlo ground-truth Bayes error oracle.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "bayeserr/labels.hpp"

namespace bayeserr {
class Rng;
}

namespace bayeserr::gauss {

struct SyntheticDraw {
    Eigen::VectorXd instance;
    int true_class = 1;     // +1 or -1
    double posterior = 0.5; // exact r(x) of the setup at the instance
};

class GaussianSetup {
public:
    // Covariances must be symmetric positive definite (checked by Cholesky),
    // prior_pos in (0, 1). All dimensions must agree.
    GaussianSetup(Eigen::VectorXd mean_pos, Eigen::VectorXd mean_neg,
                  Eigen::MatrixXd cov_pos, Eigen::MatrixXd cov_neg, double prior_pos);

    std::size_t dim() const { return static_cast<std::size_t>(mean_pos_.size()); }
    const Eigen::VectorXd& mean_pos() const { return mean_pos_; }
    const Eigen::VectorXd& mean_neg() const { return mean_neg_; }
    const Eigen::MatrixXd& cov_pos() const { return cov_pos_; }
    const Eigen::MatrixXd& cov_neg() const { return cov_neg_; }
    double prior_pos() const { return prior_pos_; }

    // Exact positive-class posterior r(x), evaluated in log space so that it
    // stays finite far from both means.
    double posterior(const Eigen::VectorXd& x) const;

    // Swaps the two classes (means, covariances, prior -> 1 - prior).
    GaussianSetup swapped() const;

    Eigen::VectorXd sample_class(int label, Rng& rng) const;

private:
    double log_density(const Eigen::VectorXd& x, bool positive) const;

    Eigen::VectorXd mean_pos_, mean_neg_;
    Eigen::MatrixXd cov_pos_, cov_neg_;
    double prior_pos_;
    Eigen::LLT<Eigen::MatrixXd> llt_pos_, llt_neg_;
    double log_norm_pos_ = 0.0, log_norm_neg_ = 0.0; // -(logdet + d log 2pi)/2
};

enum class SetupPreset { A, B };

// A: 10-dimensional isotropic, mean_pos = 0, mean_neg = 1-vector, identity
// covariances, prior 0.5. B: the same with the dimension doubled to 20.
GaussianSetup preset(SetupPreset which);
GaussianSetup preset_from_name(const std::string& name);

// n_per_class draws from each class-conditional (positives first), each
// carrying its exact posterior as the clean soft label.
std::vector<SyntheticDraw> sample_pn(const GaussianSetup& setup, std::size_t n_per_class,
                                     std::uint64_t rng_seed);

// Soft-label view of PN draws, in draw order.
SoftLabelSet soft_labels_of(const std::vector<SyntheticDraw>& draws);

// n_pos draws from the positive class-conditional only; confidences are the
// exact posteriors and the class prior is copied from the setup.
PconfSet sample_pconf(const GaussianSetup& setup, std::size_t n_pos, std::uint64_t rng_seed);

// Monte-Carlo ground truth: mean of min(r(x), 1 - r(x)) over m draws from the
// marginal p(x) (Bernoulli class pick, then the class-conditional).
double oracle_bayes_error(const GaussianSetup& setup, std::size_t m, std::uint64_t rng_seed);

// Closed form Phi(-||mu_pos - mu_neg|| / (2 sigma)) for equal isotropic
// covariances sigma^2 I and prior 0.5; NotApplicableError otherwise. Serves
// as the independent cross-check of the Monte-Carlo oracle.
double analytic_bayes_error_isotropic(const GaussianSetup& setup);

// Custom setup from a JSON document with fields dim, mean_pos, mean_neg,
// cov_pos, cov_neg (row-major, dim*dim numbers) and prior_pos.
GaussianSetup setup_from_json_text(const std::string& text);
GaussianSetup load_setup_file(const std::string& path);

} // namespace bayeserr::gauss
