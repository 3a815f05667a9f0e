// Crowd-annotation ingestion: vote counts -> soft labels under a binary
// class grouping, positive-confidence extraction, hard-label resampling and
// prediction-file scoring.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bayeserr/labels.hpp"

namespace bayeserr::ingest {

struct VoteRecord {
    std::string sample_id;
    // Class name -> non-negative vote count; total >= 1.
    std::map<std::string, long long> counts;

    long long total_votes() const;
};

struct ClassGrouping {
    std::set<std::string> positive;
    std::set<std::string> negative;

    bool covers(const std::string& class_name) const {
        return positive.count(class_name) > 0 || negative.count(class_name) > 0;
    }
};

struct PredictionRecord {
    std::string sample_id;
    std::string predicted_class;
};

enum class VotesFormat {
    wide_csv, // header: sample_id,<class1>,...,<classK>; one row per sample
    long_csv, // header: sample_id,class,count; rows aggregate per sample
};

VotesFormat votes_format_from_string(const std::string& name);

std::vector<VoteRecord> load_votes(const std::string& path, VotesFormat format);
std::vector<VoteRecord> read_votes(std::istream& in, VotesFormat format);

// Prediction CSV, header: sample_id,predicted_class.
std::vector<PredictionRecord> load_predictions(const std::string& path);
std::vector<PredictionRecord> read_predictions(std::istream& in);

// Hard-label CSV, header: sample_id,class.
std::map<std::string, std::string> load_hard_labels(const std::string& path);
std::map<std::string, std::string> read_hard_labels(std::istream& in);

// The four binary splits of the ten CIFAR class names:
// animals-vs-artifacts, land-vs-other, odd-vs-even, first5-vs-last5.
ClassGrouping grouping_preset(const std::string& name);
const std::vector<std::string>& grouping_preset_names();

// Custom grouping from a JSON document {"positive": [...], "negative": [...]};
// the two lists must be disjoint.
ClassGrouping load_grouping_file(const std::string& path);
ClassGrouping grouping_from_json_text(const std::string& text);

// c_i = positive-group votes / total votes, in input order.
SoftLabelSet soft_labels(const std::vector<VoteRecord>& votes, const ClassGrouping& grouping);

// Indices of the samples whose dataset hard label falls in the positive
// group. Every sample must have a covered hard label.
std::vector<std::size_t> pconf_subset_indices(
    const std::vector<VoteRecord>& votes, const ClassGrouping& grouping,
    const std::map<std::string, std::string>& hard_labels);

// Keeps samples whose dataset hard label falls in the positive group;
// confidence = positive-group vote proportion; class prior = fraction of all
// samples with a positive hard label.
PconfSet pconf_subset(const std::vector<VoteRecord>& votes, const ClassGrouping& grouping,
                      const std::map<std::string, std::string>& hard_labels);

// Independent Bernoulli(c_i) draws mapped to {+1, -1}, aligned with the set.
std::vector<int> resample_hard_labels(const SoftLabelSet& soft, std::uint64_t rng_seed);

// Fraction of predictions whose grouped sign disagrees with the label.
// Labels are matched by sample id, so record order does not matter.
double score_predictions(const std::vector<PredictionRecord>& preds,
                         const std::vector<std::pair<std::string, int>>& labels,
                         const ClassGrouping& grouping);

} // namespace bayeserr::ingest
