#include "serostack/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

#include "serostack/errors.hpp"
#include "serostack/rng.hpp"

namespace serostack {

LabelMap LabelMap::defaults() {
    return LabelMap({{"D0", 0},
                     {"DiseaseA", 1},
                     {"DiseaseB", 2},
                     {"DiseaseC", 3},
                     {"DiseaseD", 4}});
}

std::optional<int> LabelMap::find(std::string_view label) const {
    for (const auto& [name, cls] : entries_)
        if (name == label) return cls;
    return std::nullopt;
}

const std::string& LabelMap::name_of(int cls) const {
    for (const auto& [name, c] : entries_)
        if (c == cls) return name;
    throw ConfigError("label map has no entry for class " + std::to_string(cls));
}

std::size_t Dataset::total_observations() const {
    std::size_t n = 0;
    for (const auto& s : series) n += s.observations.size();
    return n;
}

Dataset Dataset::select_markers(const std::vector<std::string>& names) const {
    std::vector<std::size_t> idx;
    idx.reserve(names.size());
    for (const auto& name : names) {
        auto it = std::find(marker_names.begin(), marker_names.end(), name);
        if (it == marker_names.end())
            throw std::invalid_argument("select_markers: unknown marker '" + name + "'");
        idx.push_back(static_cast<std::size_t>(it - marker_names.begin()));
    }
    Dataset out;
    out.marker_names = names;
    out.series = series;
    for (auto& s : out.series)
        for (auto& obs : s.observations) {
            std::vector<double> kept;
            kept.reserve(idx.size());
            for (std::size_t i : idx) kept.push_back(obs.markers[i]);
            obs.markers = std::move(kept);
        }
    return out;
}

Dataset Dataset::truncate_series(int max_length) const {
    if (max_length < 1) throw std::invalid_argument("truncate_series: max_length must be >= 1");
    Dataset out;
    out.marker_names = marker_names;
    out.series = series;
    for (auto& s : out.series) {
        const std::size_t keep = std::min<std::size_t>(s.observations.size(),
                                                       static_cast<std::size_t>(max_length));
        s.observations.resize(keep);
    }
    return out;
}

std::vector<int> FeatureMatrix::class_list() const {
    std::set<int> classes(labels.begin(), labels.end());
    return {classes.begin(), classes.end()};
}

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> idx) const {
    FeatureMatrix out;
    out.feature_names = feature_names;
    const std::size_t d = n_features();
    out.values.reserve(idx.size() * d);
    out.labels.reserve(idx.size());
    out.groups.reserve(idx.size());
    for (std::size_t i : idx) {
        const auto r = row(i);
        out.values.insert(out.values.end(), r.begin(), r.end());
        out.labels.push_back(labels[i]);
        out.groups.push_back(groups[i]);
    }
    return out;
}

std::string_view flatten_kind_name(FlattenKind kind) {
    switch (kind) {
        case FlattenKind::per_observation: return "per_observation";
        case FlattenKind::series_mean: return "series_mean";
        case FlattenKind::series_last: return "series_last";
        case FlattenKind::series_trend: return "series_trend";
    }
    throw std::invalid_argument("unknown flatten kind");
}

FlattenKind flatten_kind_from_name(std::string_view name) {
    if (name == "per_observation") return FlattenKind::per_observation;
    if (name == "series_mean") return FlattenKind::series_mean;
    if (name == "series_last") return FlattenKind::series_last;
    if (name == "series_trend") return FlattenKind::series_trend;
    throw ConfigError("unknown flatten kind '" + std::string(name) + "'");
}

// --- CSV ---------------------------------------------------------------

namespace {

// Splits one CSV record. Double quotes delimit fields; "" inside a quoted
// field is a literal quote.
std::vector<std::string> split_record(std::string_view line, std::size_t row) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw CsvError(row, "unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

// Accepts decimal commas ("5,17") and normalizes them to dots.
double parse_number(const std::string& field, std::size_t row, const std::string& column) {
    std::string s = field;
    std::replace(s.begin(), s.end(), ',', '.');
    double value = 0.0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw CsvError(row, "non-numeric value '" + field + "' in column " + column);
    return value;
}

std::string render_number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n") != std::string::npos;
}

std::string quote_field(const std::string& s) {
    if (!needs_quoting(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

Dataset parse_csv(std::string_view text, const LabelMap& labels) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw CsvError(1, "missing header row");

    const auto header = split_record(lines[0], 1);
    const std::vector<std::string> required = {"patient_id", "diagnosis", "time_to_diagnosis",
                                               "age"};
    for (std::size_t i = 0; i < required.size(); ++i) {
        if (i >= header.size() || header[i] != required[i])
            throw CsvError(1, "missing required column '" + required[i] + "'");
    }
    if (header.size() < required.size() + 1)
        throw CsvError(1, "at least one marker column is required");

    Dataset ds;
    ds.marker_names.assign(header.begin() + required.size(), header.end());

    std::unordered_map<std::string, std::size_t> series_of_patient;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::size_t row = li + 1;
        if (lines[li].empty()) continue;
        const auto fields = split_record(lines[li], row);
        if (fields.size() != header.size())
            throw CsvError(row, "expected " + std::to_string(header.size()) + " fields, got " +
                                    std::to_string(fields.size()));

        Observation obs;
        obs.patient_id = fields[0];
        if (obs.patient_id.empty()) throw CsvError(row, "empty patient_id");

        const auto cls = labels.find(fields[1]);
        if (!cls) throw CsvError(row, "diagnosis label '" + fields[1] + "' not in label map");
        obs.diagnosis_class = *cls;

        if (!fields[2].empty()) {
            const double t = parse_number(fields[2], row, "time_to_diagnosis");
            if (t < 0.0) throw CsvError(row, "time_to_diagnosis must be nonnegative");
            obs.time_to_diagnosis = t;
        }
        obs.age = parse_number(fields[3], row, "age");
        if (obs.age <= 0.0) throw CsvError(row, "age must be positive");

        obs.markers.reserve(ds.marker_names.size());
        for (std::size_t m = 0; m < ds.marker_names.size(); ++m)
            obs.markers.push_back(parse_number(fields[4 + m], row, ds.marker_names[m]));

        auto it = series_of_patient.find(obs.patient_id);
        if (it == series_of_patient.end()) {
            PatientSeries s;
            s.patient_id = obs.patient_id;
            s.diagnosis_class = obs.diagnosis_class;
            series_of_patient.emplace(obs.patient_id, ds.series.size());
            ds.series.push_back(std::move(s));
            it = series_of_patient.find(obs.patient_id);
        }
        PatientSeries& s = ds.series[it->second];
        if (s.diagnosis_class != obs.diagnosis_class)
            throw CsvError(row, "patient '" + obs.patient_id +
                                    "' has inconsistent diagnosis across rows");
        obs.sequence_index = s.length();
        s.observations.push_back(std::move(obs));
    }
    return ds;
}

std::string write_csv(const Dataset& ds, const LabelMap& labels) {
    std::string out = "patient_id,diagnosis,time_to_diagnosis,age";
    for (const auto& name : ds.marker_names) out += "," + quote_field(name);
    out += '\n';
    for (const auto& s : ds.series) {
        const std::string& label = labels.name_of(s.diagnosis_class);
        for (const auto& obs : s.observations) {
            out += quote_field(obs.patient_id);
            out += ',';
            out += quote_field(label);
            out += ',';
            if (obs.time_to_diagnosis) out += render_number(*obs.time_to_diagnosis);
            out += ',';
            out += render_number(obs.age);
            for (double v : obs.markers) {
                out += ',';
                out += render_number(v);
            }
            out += '\n';
        }
    }
    return out;
}

// --- Summaries ----------------------------------------------------------

std::int64_t SeriesLengthHistogram::patients(int group) const {
    std::int64_t n = 0;
    for (const auto& [L, c] : counts) n += c[static_cast<std::size_t>(group)];
    return n;
}

std::int64_t SeriesLengthHistogram::observations() const {
    std::int64_t n = 0;
    for (const auto& [L, c] : counts) n += static_cast<std::int64_t>(L) * (c[0] + c[1]);
    return n;
}

SeriesLengthHistogram series_length_histogram(const Dataset& ds) {
    SeriesLengthHistogram hist;
    for (const auto& s : ds.series) {
        auto& cell = hist.counts[s.length()];
        ++cell[s.diagnosis_class == 0 ? 0 : 1];
    }
    return hist;
}

std::map<int, std::vector<double>> class_marker_means(const Dataset& ds) {
    std::map<int, std::vector<double>> sums;
    std::map<int, std::size_t> counts;
    const std::size_t d = ds.marker_names.size();
    for (const auto& s : ds.series) {
        auto& sum = sums[s.diagnosis_class];
        if (sum.empty()) sum.assign(d, 0.0);
        for (const auto& obs : s.observations) {
            for (std::size_t m = 0; m < d; ++m) sum[m] += obs.markers[m];
            ++counts[s.diagnosis_class];
        }
    }
    for (auto& [cls, sum] : sums) {
        const double n = static_cast<double>(counts[cls]);
        for (double& v : sum) v /= n;
    }
    return sums;
}

// --- Matrix construction -------------------------------------------------

namespace {

// Least-squares slope of y against x = 0..n-1; 0 for a single point.
double series_slope(std::span<const double> y) {
    const std::size_t n = y.size();
    if (n < 2) return 0.0;
    const double xbar = static_cast<double>(n - 1) / 2.0;
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = static_cast<double>(i) - xbar;
        num += dx * (y[i] - ybar);
        den += dx * dx;
    }
    return num / den;
}

} // namespace

FeatureMatrix flatten(const Dataset& ds, const FlattenPolicy& policy) {
    if (ds.series.empty()) throw std::invalid_argument("flatten: empty dataset");
    const std::size_t d = ds.marker_names.size();

    FeatureMatrix fm;
    for (const auto& name : ds.marker_names) {
        switch (policy.kind) {
            case FlattenKind::per_observation: fm.feature_names.push_back(name); break;
            case FlattenKind::series_mean: fm.feature_names.push_back(name + "_mean"); break;
            case FlattenKind::series_last: fm.feature_names.push_back(name + "_last"); break;
            case FlattenKind::series_trend: fm.feature_names.push_back(name + "_slope"); break;
        }
    }
    if (policy.append_length) fm.feature_names.push_back("series_length");
    if (policy.append_age) fm.feature_names.push_back("age");

    auto push_row = [&](const PatientSeries& s, const std::vector<double>& features, double age) {
        fm.values.insert(fm.values.end(), features.begin(), features.end());
        if (policy.append_length) fm.values.push_back(static_cast<double>(s.length()));
        if (policy.append_age) fm.values.push_back(age);
        fm.labels.push_back(s.diagnosis_class);
        fm.groups.push_back(s.patient_id);
    };

    std::vector<double> features(d);
    std::vector<double> column;
    for (const auto& s : ds.series) {
        if (s.observations.empty())
            throw std::invalid_argument("flatten: patient '" + s.patient_id + "' has no observations");
        switch (policy.kind) {
            case FlattenKind::per_observation:
                for (const auto& obs : s.observations) push_row(s, obs.markers, obs.age);
                break;
            case FlattenKind::series_mean: {
                std::fill(features.begin(), features.end(), 0.0);
                double age = 0.0;
                for (const auto& obs : s.observations) {
                    for (std::size_t m = 0; m < d; ++m) features[m] += obs.markers[m];
                    age += obs.age;
                }
                const double n = static_cast<double>(s.observations.size());
                for (double& v : features) v /= n;
                push_row(s, features, age / n);
                break;
            }
            case FlattenKind::series_last: {
                const auto& last = s.observations.back();
                push_row(s, last.markers, last.age);
                break;
            }
            case FlattenKind::series_trend: {
                double age = 0.0;
                for (const auto& obs : s.observations) age += obs.age;
                for (std::size_t m = 0; m < d; ++m) {
                    column.clear();
                    for (const auto& obs : s.observations) column.push_back(obs.markers[m]);
                    features[m] = series_slope(column);
                }
                push_row(s, features, age / static_cast<double>(s.observations.size()));
                break;
            }
        }
    }
    return fm;
}

std::pair<FeatureMatrix, FeatureMatrix> split(const FeatureMatrix& fm, double test_fraction,
                                              std::uint64_t seed, bool group_aware) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::invalid_argument("split: test_fraction must be in (0, 1)");
    if (fm.n_rows() == 0) throw std::invalid_argument("split: empty matrix");

    Rng rng(derive_seed(seed, "split"));
    std::vector<std::size_t> test_idx, train_idx;

    if (group_aware) {
        // Unique groups in first-appearance order, then shuffled.
        std::vector<std::string> order;
        std::unordered_map<std::string, std::vector<std::size_t>> rows_of;
        for (std::size_t i = 0; i < fm.n_rows(); ++i) {
            auto [it, inserted] = rows_of.try_emplace(fm.groups[i]);
            if (inserted) order.push_back(fm.groups[i]);
            it->second.push_back(i);
        }
        rng.shuffle(order);
        const double target = test_fraction * static_cast<double>(fm.n_rows());
        std::size_t test_rows = 0;
        for (const auto& g : order) {
            const auto& rows = rows_of[g];
            if (static_cast<double>(test_rows) < target) {
                test_rows += rows.size();
                test_idx.insert(test_idx.end(), rows.begin(), rows.end());
            } else {
                train_idx.insert(train_idx.end(), rows.begin(), rows.end());
            }
        }
    } else {
        std::vector<std::size_t> idx(fm.n_rows());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        rng.shuffle(idx);
        const auto n_test = static_cast<std::size_t>(
            std::llround(test_fraction * static_cast<double>(fm.n_rows())));
        test_idx.assign(idx.begin(), idx.begin() + n_test);
        train_idx.assign(idx.begin() + n_test, idx.end());
    }
    std::sort(test_idx.begin(), test_idx.end());
    std::sort(train_idx.begin(), train_idx.end());
    return {fm.select_rows(train_idx), fm.select_rows(test_idx)};
}

} // namespace serostack
