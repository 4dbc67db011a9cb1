#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace serostack {

// Maps diagnosis labels as written in a CSV to integer classes
// (0 = control, 1..4 = diseases). Insertion order is preserved for output.
class LabelMap {
public:
    LabelMap() = default;
    explicit LabelMap(std::vector<std::pair<std::string, int>> entries)
        : entries_(std::move(entries)) {}

    static LabelMap defaults();

    std::optional<int> find(std::string_view label) const;
    // Label for a class; throws if the class is unmapped.
    const std::string& name_of(int cls) const;

    const std::vector<std::pair<std::string, int>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, int>> entries_;
};

// One examination of one patient. Marker values align with the owning
// Dataset's marker_names.
struct Observation {
    std::string patient_id;
    int diagnosis_class = 0;
    std::optional<double> time_to_diagnosis; // days; absent for controls
    double age = 0.0;                        // years
    std::vector<double> markers;
    int sequence_index = 0; // 0-based position within the patient's series
};

// The ordered series of examinations of a single patient.
struct PatientSeries {
    std::string patient_id;
    int diagnosis_class = 0;
    std::vector<Observation> observations;

    int length() const { return static_cast<int>(observations.size()); }
};

struct Dataset {
    std::vector<PatientSeries> series;
    std::vector<std::string> marker_names;

    std::size_t n_patients() const { return series.size(); }
    std::size_t total_observations() const;
    // New dataset keeping only the named markers (in the given order).
    Dataset select_markers(const std::vector<std::string>& names) const;
    // New dataset with every series cut to its first min(max_length, L) observations.
    Dataset truncate_series(int max_length) const;
};

// Numeric design matrix with labels and patient grouping.
struct FeatureMatrix {
    std::vector<double> values; // row-major, n * d
    std::vector<int> labels;
    std::vector<std::string> groups; // patient id per row
    std::vector<std::string> feature_names;

    std::size_t n_rows() const { return labels.size(); }
    std::size_t n_features() const { return feature_names.size(); }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * n_features(), n_features()};
    }
    std::vector<int> class_list() const; // sorted unique labels
    FeatureMatrix select_rows(std::span<const std::size_t> idx) const;
};

enum class FlattenKind { per_observation, series_mean, series_last, series_trend };

std::string_view flatten_kind_name(FlattenKind kind);
FlattenKind flatten_kind_from_name(std::string_view name);

struct FlattenPolicy {
    FlattenKind kind = FlattenKind::per_observation;
    bool append_length = false; // adds L as a feature
    bool append_age = false;
};

// --- CSV ---------------------------------------------------------------

// Expected header: patient_id, diagnosis, time_to_diagnosis, age, then one
// column per marker. Fields may be double-quoted; decimal commas inside
// numeric fields ("5,17") are normalized to dots. Rows are grouped into
// series by patient id in file order. Throws CsvError with the 1-based row
// number on malformed input.
Dataset parse_csv(std::string_view text, const LabelMap& labels);

// Inverse of parse_csv: values rendered with shortest round-trip decimals.
std::string write_csv(const Dataset& ds, const LabelMap& labels);

// --- Summaries ----------------------------------------------------------

// Series-length counts split into control (class 0) and disease (classes >= 1).
struct SeriesLengthHistogram {
    std::map<int, std::array<std::int64_t, 2>> counts; // L -> {control, disease}

    std::int64_t patients(int group) const;
    std::int64_t observations() const; // sum of L * count over both groups
};

SeriesLengthHistogram series_length_histogram(const Dataset& ds);

// Arithmetic mean of each marker over all observations of each class.
std::map<int, std::vector<double>> class_marker_means(const Dataset& ds);

// --- Matrix construction -------------------------------------------------

// per_observation: one row per observation; series_*: one row per patient
// (mean / last value / least-squares slope per marker). Throws
// std::invalid_argument on an empty dataset.
FeatureMatrix flatten(const Dataset& ds, const FlattenPolicy& policy);

// Deterministic random partition. With group_aware all rows of a patient
// land on the same side; the test side reaches the target row fraction to
// within one patient group.
std::pair<FeatureMatrix, FeatureMatrix> split(const FeatureMatrix& fm, double test_fraction,
                                              std::uint64_t seed, bool group_aware);

} // namespace serostack
