// JSON configuration schema for custom Gaussian setups.
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bayeserr/errors.hpp"
#include "bayeserr/gaussian.hpp"

namespace bayeserr::gauss {

namespace {

Eigen::VectorXd vector_field(const nlohmann::json& doc, const std::string& key,
                             Eigen::Index dim) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw InvalidSetupError("setup config: \"" + key + "\" must be a list of numbers");
    }
    const auto& arr = doc[key];
    if (static_cast<Eigen::Index>(arr.size()) != dim) {
        throw InvalidSetupError("setup config: \"" + key + "\" must have " +
                                std::to_string(dim) + " entries");
    }
    Eigen::VectorXd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (!arr[i].is_number()) {
            throw InvalidSetupError("setup config: \"" + key + "\" must contain numbers");
        }
        v(i) = arr[i].get<double>();
    }
    return v;
}

Eigen::MatrixXd matrix_field(const nlohmann::json& doc, const std::string& key,
                             Eigen::Index dim) {
    const Eigen::VectorXd flat = vector_field(doc, key, dim * dim);
    Eigen::MatrixXd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = flat(r * dim + c);
    }
    return m;
}

} // namespace

GaussianSetup setup_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidSetupError(std::string("setup config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw InvalidSetupError("setup config: integer \"dim\" field is required");
    }
    const auto dim = doc["dim"].get<long long>();
    if (dim < 1) throw InvalidSetupError("setup config: dim must be at least 1");
    const auto d = static_cast<Eigen::Index>(dim);
    if (!doc.contains("prior_pos") || !doc["prior_pos"].is_number()) {
        throw InvalidSetupError("setup config: numeric \"prior_pos\" field is required");
    }
    return GaussianSetup(vector_field(doc, "mean_pos", d), vector_field(doc, "mean_neg", d),
                         matrix_field(doc, "cov_pos", d), matrix_field(doc, "cov_neg", d),
                         doc["prior_pos"].get<double>());
}

GaussianSetup load_setup_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSetupError("cannot open setup config \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return setup_from_json_text(buf.str());
}

} // namespace bayeserr::gauss
