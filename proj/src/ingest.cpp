#include "bayeserr/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "bayeserr/errors.hpp"
#include "bayeserr/rng.hpp"

namespace bayeserr::ingest {

namespace {

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    if (line.find('"') != std::string::npos) {
        throw ParseError(line_no, "quoted fields are not supported");
    }
    std::vector<std::string> cells;
    std::string::size_type start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        cells.push_back(strip(line.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

long long parse_count(const std::string& cell, std::size_t line_no) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError(line_no, "expected an integer vote count, got \"" + cell + "\"");
    }
    if (value < 0) {
        throw ParseError(line_no, "vote counts must be non-negative, got \"" + cell + "\"");
    }
    return value;
}

// Reads non-empty lines, tracking 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line, std::size_t& line_no) {
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (strip(line).empty()) continue;
            line_no = line_no_;
            return true;
        }
        return false;
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::vector<std::string> read_header(LineReader& reader, const std::string& expect_first) {
    std::string line;
    std::size_t line_no = 0;
    if (!reader.next(line, line_no)) {
        throw ParseError(1, "missing header row");
    }
    auto cells = split_csv_line(line, line_no);
    if (cells.empty() || cells[0] != expect_first) {
        throw ParseError(line_no, "header must start with \"" + expect_first + "\"");
    }
    return cells;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open \"" + path + "\"");
    return in;
}

const std::vector<std::string> kCifarClasses = {
    "plane", "car", "bird", "cat", "deer", "dog", "frog", "horse", "ship", "truck",
};

ClassGrouping make_grouping(std::initializer_list<const char*> positive) {
    ClassGrouping g;
    for (const char* name : positive) g.positive.insert(name);
    for (const auto& name : kCifarClasses) {
        if (g.positive.count(name) == 0) g.negative.insert(name);
    }
    return g;
}

} // namespace

long long VoteRecord::total_votes() const {
    long long total = 0;
    for (const auto& [cls, count] : counts) total += count;
    return total;
}

VotesFormat votes_format_from_string(const std::string& name) {
    if (name == "wide" || name == "wide_csv") return VotesFormat::wide_csv;
    if (name == "long" || name == "long_csv") return VotesFormat::long_csv;
    throw UnknownPresetError(name);
}

std::vector<VoteRecord> read_votes(std::istream& in, VotesFormat format) {
    LineReader reader(in);
    std::vector<VoteRecord> records;
    std::string line;
    std::size_t line_no = 0;

    if (format == VotesFormat::wide_csv) {
        const auto header = read_header(reader, "sample_id");
        if (header.size() < 2) {
            throw ParseError(1, "wide vote header needs at least one class column");
        }
        std::unordered_set<std::string> header_names;
        for (std::size_t i = 1; i < header.size(); ++i) {
            if (header[i].empty() || !header_names.insert(header[i]).second) {
                throw ParseError(1, "class columns must be unique and non-empty");
            }
        }
        std::unordered_set<std::string> seen_ids;
        while (reader.next(line, line_no)) {
            const auto cells = split_csv_line(line, line_no);
            if (cells.size() != header.size()) {
                throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                              " cells, got " + std::to_string(cells.size()));
            }
            VoteRecord rec;
            rec.sample_id = cells[0];
            if (rec.sample_id.empty()) throw ParseError(line_no, "empty sample id");
            if (!seen_ids.insert(rec.sample_id).second) {
                throw DuplicateSampleError(rec.sample_id);
            }
            for (std::size_t i = 1; i < cells.size(); ++i) {
                rec.counts[header[i]] = parse_count(cells[i], line_no);
            }
            if (rec.total_votes() < 1) throw ZeroVotesError(rec.sample_id);
            records.push_back(std::move(rec));
        }
    } else {
        read_header(reader, "sample_id");
        std::unordered_map<std::string, std::size_t> index_of;
        while (reader.next(line, line_no)) {
            const auto cells = split_csv_line(line, line_no);
            if (cells.size() != 3) {
                throw ParseError(line_no, "long vote rows need sample_id,class,count");
            }
            const std::string& id = cells[0];
            const std::string& cls = cells[1];
            if (id.empty() || cls.empty()) {
                throw ParseError(line_no, "empty sample id or class name");
            }
            const long long count = parse_count(cells[2], line_no);
            auto [it, inserted] = index_of.try_emplace(id, records.size());
            if (inserted) {
                records.push_back(VoteRecord{id, {}});
            }
            records[it->second].counts[cls] += count;
        }
        for (const auto& rec : records) {
            if (rec.total_votes() < 1) throw ZeroVotesError(rec.sample_id);
        }
    }
    return records;
}

std::vector<VoteRecord> load_votes(const std::string& path, VotesFormat format) {
    auto in = open_or_throw(path);
    return read_votes(in, format);
}

std::vector<PredictionRecord> read_predictions(std::istream& in) {
    LineReader reader(in);
    const auto header = read_header(reader, "sample_id");
    if (header.size() != 2 || header[1] != "predicted_class") {
        throw ParseError(1, "prediction header must be sample_id,predicted_class");
    }
    std::vector<PredictionRecord> records;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (reader.next(line, line_no)) {
        const auto cells = split_csv_line(line, line_no);
        if (cells.size() != 2 || cells[0].empty() || cells[1].empty()) {
            throw ParseError(line_no, "prediction rows need sample_id,predicted_class");
        }
        if (!seen_ids.insert(cells[0]).second) throw DuplicateSampleError(cells[0]);
        records.push_back(PredictionRecord{cells[0], cells[1]});
    }
    return records;
}

std::vector<PredictionRecord> load_predictions(const std::string& path) {
    auto in = open_or_throw(path);
    return read_predictions(in);
}

std::map<std::string, std::string> read_hard_labels(std::istream& in) {
    LineReader reader(in);
    const auto header = read_header(reader, "sample_id");
    if (header.size() != 2 || header[1] != "class") {
        throw ParseError(1, "hard-label header must be sample_id,class");
    }
    std::map<std::string, std::string> labels;
    std::string line;
    std::size_t line_no = 0;
    while (reader.next(line, line_no)) {
        const auto cells = split_csv_line(line, line_no);
        if (cells.size() != 2 || cells[0].empty() || cells[1].empty()) {
            throw ParseError(line_no, "hard-label rows need sample_id,class");
        }
        if (!labels.emplace(cells[0], cells[1]).second) throw DuplicateSampleError(cells[0]);
    }
    return labels;
}

std::map<std::string, std::string> load_hard_labels(const std::string& path) {
    auto in = open_or_throw(path);
    return read_hard_labels(in);
}

const std::vector<std::string>& grouping_preset_names() {
    static const std::vector<std::string> names = {
        "animals-vs-artifacts", "land-vs-other", "odd-vs-even", "first5-vs-last5",
    };
    return names;
}

ClassGrouping grouping_preset(const std::string& name) {
    if (name == "animals-vs-artifacts") {
        return make_grouping({"cat", "deer", "dog", "frog", "bird", "horse"});
    }
    if (name == "land-vs-other") {
        return make_grouping({"car", "truck", "cat", "deer", "dog", "horse"});
    }
    if (name == "odd-vs-even") {
        return make_grouping({"plane", "bird", "deer", "frog", "ship"});
    }
    if (name == "first5-vs-last5") {
        return make_grouping({"plane", "car", "bird", "cat", "deer"});
    }
    throw UnknownPresetError(name);
}

ClassGrouping grouping_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("grouping file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("positive") || !doc.contains("negative")) {
        throw ParseError(0, "grouping file needs \"positive\" and \"negative\" lists");
    }
    ClassGrouping g;
    for (const char* key : {"positive", "negative"}) {
        auto& target = (std::string(key) == "positive") ? g.positive : g.negative;
        if (!doc[key].is_array()) {
            throw ParseError(0, std::string("\"") + key + "\" must be a list of class names");
        }
        for (const auto& item : doc[key]) {
            if (!item.is_string()) {
                throw ParseError(0, std::string("\"") + key + "\" must contain strings");
            }
            target.insert(item.get<std::string>());
        }
    }
    for (const auto& name : g.positive) {
        if (g.negative.count(name) > 0) {
            throw ParseError(0, "class \"" + name + "\" appears in both groups");
        }
    }
    if (g.positive.empty() || g.negative.empty()) {
        throw ParseError(0, "both groups must be non-empty");
    }
    return g;
}

ClassGrouping load_grouping_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return grouping_from_json_text(buf.str());
}

SoftLabelSet soft_labels(const std::vector<VoteRecord>& votes, const ClassGrouping& grouping) {
    std::vector<double> values;
    values.reserve(votes.size());
    for (const auto& rec : votes) {
        long long positive = 0;
        long long total = 0;
        for (const auto& [cls, count] : rec.counts) {
            if (!grouping.covers(cls)) throw UncoveredClassError(cls);
            total += count;
            if (grouping.positive.count(cls) > 0) positive += count;
        }
        if (total < 1) throw ZeroVotesError(rec.sample_id);
        values.push_back(static_cast<double>(positive) / static_cast<double>(total));
    }
    return SoftLabelSet{std::move(values), LabelKind::soft};
}

std::vector<std::size_t> pconf_subset_indices(
    const std::vector<VoteRecord>& votes, const ClassGrouping& grouping,
    const std::map<std::string, std::string>& hard_labels) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < votes.size(); ++i) {
        const auto it = hard_labels.find(votes[i].sample_id);
        if (it == hard_labels.end()) throw MissingHardLabelError(votes[i].sample_id);
        if (!grouping.covers(it->second)) throw UncoveredClassError(it->second);
        if (grouping.positive.count(it->second) > 0) indices.push_back(i);
    }
    return indices;
}

PconfSet pconf_subset(const std::vector<VoteRecord>& votes, const ClassGrouping& grouping,
                      const std::map<std::string, std::string>& hard_labels) {
    const SoftLabelSet soft = soft_labels(votes, grouping);
    const auto indices = pconf_subset_indices(votes, grouping, hard_labels);
    std::vector<double> confidences;
    confidences.reserve(indices.size());
    for (std::size_t i : indices) confidences.push_back(soft.values[i]);
    const double prior =
        votes.empty() ? 0.0
                      : static_cast<double>(indices.size()) / static_cast<double>(votes.size());
    return PconfSet{std::move(confidences), prior};
}

std::vector<int> resample_hard_labels(const SoftLabelSet& soft, std::uint64_t rng_seed) {
    if (soft.kind != LabelKind::soft) {
        throw UnsupportedKindError("resample_hard_labels requires soft labels");
    }
    Rng rng(rng_seed);
    std::vector<int> out;
    out.reserve(soft.size());
    for (std::size_t i = 0; i < soft.values.size(); ++i) {
        const double c = soft.values[i];
        if (!(c >= 0.0 && c <= 1.0)) throw InvalidLabelError(i, c, "[0, 1]");
        out.push_back(rng.bernoulli(c) ? 1 : -1);
    }
    return out;
}

double score_predictions(const std::vector<PredictionRecord>& preds,
                         const std::vector<std::pair<std::string, int>>& labels,
                         const ClassGrouping& grouping) {
    if (preds.empty()) throw EmptyDatasetError("no predictions to score");
    std::unordered_map<std::string, int> label_of;
    label_of.reserve(labels.size());
    for (const auto& [id, label] : labels) {
        if (label != 1 && label != -1) throw InvalidSignError(0, label);
        if (!label_of.emplace(id, label).second) throw DuplicateSampleError(id);
    }
    std::size_t wrong = 0;
    for (const auto& pred : preds) {
        if (!grouping.covers(pred.predicted_class)) {
            throw UncoveredClassError(pred.predicted_class);
        }
        const auto it = label_of.find(pred.sample_id);
        if (it == label_of.end()) throw MissingLabelError(pred.sample_id);
        const int pred_sign = (grouping.positive.count(pred.predicted_class) > 0) ? 1 : -1;
        if (pred_sign != it->second) ++wrong;
    }
    return static_cast<double>(wrong) / static_cast<double>(preds.size());
}

} // namespace bayeserr::ingest
