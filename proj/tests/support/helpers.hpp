// Shared helpers for the unit, property and acceptance suites: seeded trial
// protocols, an independent truncated-normal quadrature oracle, process
// running and temp-file plumbing.
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bayeserr/estimate.hpp"
#include "bayeserr/gaussian.hpp"
#include "bayeserr/kahan.hpp"
#include "bayeserr/noise.hpp"
#include "bayeserr/rng.hpp"

namespace testsupport {

struct TrialStats {
    double mean = 0.0;
    double std_error = 0.0;
};

inline TrialStats trial_stats(const std::vector<double>& points) {
    const double mean = bayeserr::kahan_mean(points);
    double sq = 0.0;
    for (double p : points) sq += (p - mean) * (p - mean);
    const double var = sq / static_cast<double>(points.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(points.size()))};
}

// Seeded trial protocols. Trial t uses child_seed(base_seed, t); noisy trials
// split one stream for sampling and one for the noise.

inline std::vector<double> soft_trial_points(const bayeserr::gauss::GaussianSetup& setup,
                                             std::size_t n_per_class, std::size_t trials,
                                             std::uint64_t base_seed) {
    std::vector<double> points;
    points.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto draws =
            bayeserr::gauss::sample_pn(setup, n_per_class, bayeserr::child_seed(base_seed, t));
        points.push_back(
            bayeserr::estimate_soft(bayeserr::gauss::soft_labels_of(draws)).point);
    }
    return points;
}

enum class NoisyEstimator { naive, corrected };

inline std::vector<double> noisy_trial_points(const bayeserr::gauss::GaussianSetup& setup,
                                              std::size_t n_per_class, std::size_t trials,
                                              std::uint64_t base_seed, double sigma,
                                              NoisyEstimator which) {
    std::vector<double> points;
    points.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = bayeserr::child_seed(base_seed, t);
        const auto draws = bayeserr::gauss::sample_pn(setup, n_per_class,
                                                      bayeserr::child_seed(trial_seed, 0));
        const auto soft = bayeserr::gauss::soft_labels_of(draws);
        const auto corrupted = bayeserr::noise::corrupt_set(
            soft, bayeserr::noise::NoiseSpec{sigma}, bayeserr::child_seed(trial_seed, 1));
        points.push_back(which == NoisyEstimator::naive
                             ? bayeserr::estimate_noisy_naive(corrupted).point
                             : bayeserr::estimate_noisy_signed(corrupted).point);
    }
    return points;
}

inline std::vector<double> pconf_trial_points(const bayeserr::gauss::GaussianSetup& setup,
                                              std::size_t n_pos, std::size_t trials,
                                              std::uint64_t base_seed) {
    std::vector<double> points;
    points.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto set =
            bayeserr::gauss::sample_pconf(setup, n_pos, bayeserr::child_seed(base_seed, t));
        points.push_back(bayeserr::estimate_pconf(set).point);
    }
    return points;
}

// --------------------------------------------------------------------------
// Independent quadrature oracle for the truncated-Gaussian noise model:
// E[f(u)] for u ~ N(c, sigma^2) truncated to [c - a, c + a], a = min(c, 1-c).
// Composite 20-node Gauss-Legendre; callers pass breakpoints (e.g. the kink
// of min(u, 1-u) at 0.5) via the panel list.

inline double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }
inline double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

inline double gauss_legendre(const std::function<double(double)>& f, double lo, double hi,
                             int panels) {
    // 20-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric halves).
    static const double xs[10] = {
        0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
        0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
        0.9639719272779138, 0.9931285991850949,
    };
    static const double ws[10] = {
        0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
        0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
        0.0406014298003869, 0.0176140071391521,
    };
    double total = 0.0;
    const double step = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * step;
        const double mid = a + 0.5 * step;
        const double half = 0.5 * step;
        for (int i = 0; i < 10; ++i) {
            total += ws[i] * half * (f(mid - half * xs[i]) + f(mid + half * xs[i]));
        }
    }
    return total;
}

inline double truncnorm_expect(const std::function<double(double)>& f, double c, double sigma,
                               const std::vector<double>& breakpoints = {}) {
    const double a = std::min(c, 1.0 - c);
    if (a == 0.0) return f(c);
    const double lo = c - a;
    const double hi = c + a;
    const double z = std_normal_cdf(a / sigma) - std_normal_cdf(-a / sigma);
    std::vector<double> edges = {lo};
    for (double b : breakpoints) {
        if (b > lo && b < hi) edges.push_back(b);
    }
    edges.push_back(hi);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        total += gauss_legendre(
            [&](double u) { return f(u) * std_normal_pdf((u - c) / sigma) / (sigma * z); },
            edges[i], edges[i + 1], 64);
    }
    return total;
}

// --------------------------------------------------------------------------
// Process and file plumbing for the CLI-facing suites.

struct ProcessResult {
    int exit_code = -1;
    std::string output;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char ch : s) {
        if (ch == '\'') {
            quoted += "'\\''";
        } else {
            quoted += ch;
        }
    }
    quoted += "'";
    return quoted;
}

inline ProcessResult run_process(const std::vector<std::string>& argv,
                                 const std::string& stderr_path = "/dev/null") {
    std::string cmd;
    for (const auto& arg : argv) {
        if (!cmd.empty()) cmd += ' ';
        cmd += shell_quote(arg);
    }
    cmd += " 2>" + shell_quote(stderr_path);
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
    ProcessResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string cli_path() {
    const char* env = std::getenv("BAYESERR_CLI");
    if (env == nullptr || *env == '\0') {
        throw std::runtime_error("BAYESERR_CLI is not set; run through ctest");
    }
    return env;
}

inline std::string fixtures_dir() {
    const char* env = std::getenv("BAYESERR_FIXTURES");
    if (env == nullptr || *env == '\0') {
        throw std::runtime_error("BAYESERR_FIXTURES is not set; run through ctest");
    }
    return env;
}

inline std::string fixture_path(const std::string& name) {
    return fixtures_dir() + "/" + name;
}

class TempDir {
public:
    TempDir() {
        char tmpl[] = "/tmp/bayeserr_test_XXXXXX";
        if (mkdtemp(tmpl) == nullptr) throw std::runtime_error("mkdtemp failed");
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string write(const std::string& name, const std::string& contents) const {
        const std::string full = path_ + "/" + name;
        std::ofstream out(full);
        out << contents;
        if (!out) throw std::runtime_error("failed writing " + full);
        return full;
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace testsupport
