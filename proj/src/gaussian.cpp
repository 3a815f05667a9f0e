#include "bayeserr/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "bayeserr/errors.hpp"
#include "bayeserr/kahan.hpp"
#include "bayeserr/normal.hpp"
#include "bayeserr/rng.hpp"

namespace bayeserr::gauss {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836; // log(2*pi)

double half_log_det(const Eigen::LLT<Eigen::MatrixXd>& llt) {
    double acc = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < l.rows(); ++i) acc += std::log(l(i, i));
    return acc;
}

Eigen::LLT<Eigen::MatrixXd> checked_llt(const Eigen::MatrixXd& cov, const char* which) {
    if (cov.rows() != cov.cols()) {
        throw InvalidSetupError(std::string(which) + " covariance is not square");
    }
    const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
        throw InvalidSetupError(std::string(which) + " covariance is not symmetric");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
        throw InvalidSetupError(std::string(which) +
                                " covariance is not positive definite (Cholesky failed)");
    }
    return llt;
}

} // namespace

GaussianSetup::GaussianSetup(Eigen::VectorXd mean_pos, Eigen::VectorXd mean_neg,
                             Eigen::MatrixXd cov_pos, Eigen::MatrixXd cov_neg,
                             double prior_pos)
    : mean_pos_(std::move(mean_pos)),
      mean_neg_(std::move(mean_neg)),
      cov_pos_(std::move(cov_pos)),
      cov_neg_(std::move(cov_neg)),
      prior_pos_(prior_pos) {
    const Eigen::Index d = mean_pos_.size();
    if (d < 1) throw InvalidSetupError("dimension must be at least 1");
    if (mean_neg_.size() != d || cov_pos_.rows() != d || cov_neg_.rows() != d) {
        throw InvalidSetupError("mean/covariance dimensions disagree");
    }
    if (!(prior_pos_ > 0.0 && prior_pos_ < 1.0)) {
        throw InvalidSetupError("prior_pos must lie in (0, 1)");
    }
    llt_pos_ = checked_llt(cov_pos_, "positive");
    llt_neg_ = checked_llt(cov_neg_, "negative");
    const double half_d_log2pi = 0.5 * static_cast<double>(d) * kLog2Pi;
    log_norm_pos_ = -half_log_det(llt_pos_) - half_d_log2pi;
    log_norm_neg_ = -half_log_det(llt_neg_) - half_d_log2pi;
}

double GaussianSetup::log_density(const Eigen::VectorXd& x, bool positive) const {
    const auto& mean = positive ? mean_pos_ : mean_neg_;
    const auto& llt = positive ? llt_pos_ : llt_neg_;
    // z = L^-1 (x - mean); quadratic form is |z|^2.
    Eigen::VectorXd z = llt.matrixL().solve(x - mean);
    return (positive ? log_norm_pos_ : log_norm_neg_) - 0.5 * z.squaredNorm();
}

double GaussianSetup::posterior(const Eigen::VectorXd& x) const {
    if (static_cast<std::size_t>(x.size()) != dim()) {
        throw DimensionMismatchError(dim(), static_cast<std::size_t>(x.size()));
    }
    const double log_pos = std::log(prior_pos_) + log_density(x, true);
    const double log_neg = std::log1p(-prior_pos_) + log_density(x, false);
    // r = 1 / (1 + exp(log_neg - log_pos)), saturating cleanly at 0 and 1.
    const double t = log_neg - log_pos;
    if (t > 0.0) {
        const double e = std::exp(-t);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(t));
}

GaussianSetup GaussianSetup::swapped() const {
    return GaussianSetup(mean_neg_, mean_pos_, cov_neg_, cov_pos_, 1.0 - prior_pos_);
}

Eigen::VectorXd GaussianSetup::sample_class(int label, Rng& rng) const {
    const auto& mean = (label == 1) ? mean_pos_ : mean_neg_;
    const auto& llt = (label == 1) ? llt_pos_ : llt_neg_;
    Eigen::VectorXd z(mean.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
    return mean + llt.matrixL() * z;
}

GaussianSetup preset(SetupPreset which) {
    const Eigen::Index d = (which == SetupPreset::A) ? 10 : 20;
    return GaussianSetup(Eigen::VectorXd::Zero(d), Eigen::VectorXd::Ones(d),
                         Eigen::MatrixXd::Identity(d, d), Eigen::MatrixXd::Identity(d, d),
                         0.5);
}

GaussianSetup preset_from_name(const std::string& name) {
    if (name == "A" || name == "a") return preset(SetupPreset::A);
    if (name == "B" || name == "b") return preset(SetupPreset::B);
    throw UnknownPresetError(name);
}

std::vector<SyntheticDraw> sample_pn(const GaussianSetup& setup, std::size_t n_per_class,
                                     std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::vector<SyntheticDraw> draws;
    draws.reserve(2 * n_per_class);
    for (int label : {1, -1}) {
        for (std::size_t i = 0; i < n_per_class; ++i) {
            SyntheticDraw d;
            d.instance = setup.sample_class(label, rng);
            d.true_class = label;
            d.posterior = setup.posterior(d.instance);
            draws.push_back(std::move(d));
        }
    }
    return draws;
}

SoftLabelSet soft_labels_of(const std::vector<SyntheticDraw>& draws) {
    std::vector<double> values;
    values.reserve(draws.size());
    for (const auto& d : draws) values.push_back(d.posterior);
    return SoftLabelSet{std::move(values), LabelKind::soft};
}

PconfSet sample_pconf(const GaussianSetup& setup, std::size_t n_pos, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::vector<double> confidences;
    confidences.reserve(n_pos);
    for (std::size_t i = 0; i < n_pos; ++i) {
        confidences.push_back(setup.posterior(setup.sample_class(1, rng)));
    }
    return PconfSet{std::move(confidences), setup.prior_pos()};
}

double oracle_bayes_error(const GaussianSetup& setup, std::size_t m, std::uint64_t rng_seed) {
    if (m < 1) throw EmptyDatasetError("oracle_bayes_error requires m >= 1");
    Rng rng(rng_seed);
    KahanSum acc;
    for (std::size_t i = 0; i < m; ++i) {
        const int label = rng.bernoulli(setup.prior_pos()) ? 1 : -1;
        const double r = setup.posterior(setup.sample_class(label, rng));
        acc.add(std::min(r, 1.0 - r));
    }
    return acc.value() / static_cast<double>(m);
}

double analytic_bayes_error_isotropic(const GaussianSetup& setup) {
    const Eigen::Index d = static_cast<Eigen::Index>(setup.dim());
    const double sigma_sq = setup.cov_pos()(0, 0);
    const Eigen::MatrixXd iso = sigma_sq * Eigen::MatrixXd::Identity(d, d);
    const double tol = 1e-12 * std::max(1.0, std::abs(sigma_sq));
    if ((setup.cov_pos() - iso).cwiseAbs().maxCoeff() > tol ||
        (setup.cov_neg() - iso).cwiseAbs().maxCoeff() > tol) {
        throw NotApplicableError(
            "analytic Bayes error requires equal isotropic covariances");
    }
    if (std::abs(setup.prior_pos() - 0.5) > 1e-12) {
        throw NotApplicableError("analytic Bayes error requires prior_pos = 0.5");
    }
    const double dist = (setup.mean_pos() - setup.mean_neg()).norm();
    return norm_cdf(-dist / (2.0 * std::sqrt(sigma_sq)));
}

} // namespace bayeserr::gauss
