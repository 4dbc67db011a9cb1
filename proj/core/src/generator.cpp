#include "serostack/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "serostack/errors.hpp"
#include "serostack/rng.hpp"

namespace serostack {

GeneratorConfig GeneratorConfig::defaults() {
    GeneratorConfig cfg;
    cfg.marker_names = {"Biomarker A", "Biomarker B", "Biomarker C"};
    cfg.classes = {
        {"D0", 0, 70, {0.89, 0.95, 0.96}},
        {"DiseaseA", 1, 18, {5.17, 4.17, 8.7}},
        {"DiseaseB", 2, 18, {0.83, 0.91, 0.88}},
        {"DiseaseC", 3, 18, {0.75, 0.89, 1.03}},
        {"DiseaseD", 4, 17, {0.81, 0.86, 1.12}},
    };
    cfg.control_length_weights = {{1, 0}, {2, 2}, {3, 6},  {4, 9}, {5, 4},
                                  {6, 12}, {7, 10}, {8, 9}, {9, 18}, {10, 0}};
    cfg.disease_length_weights = {{1, 14}, {2, 7}, {3, 24}, {4, 9}, {5, 10},
                                  {6, 6},  {7, 1}, {8, 0},  {9, 0}, {10, 0}};
    cfg.sigma = 0.2;
    return cfg;
}

void GeneratorConfig::validate() const {
    if (marker_names.empty()) throw ConfigError("generator: marker_names must be nonempty");
    if (classes.empty()) throw ConfigError("generator: classes must be nonempty");
    for (const auto& c : classes) {
        if (c.n_patients < 0)
            throw ConfigError("generator: class '" + c.label + "' has negative patient count");
        if (c.marker_means.size() != marker_names.size())
            throw ConfigError("generator: class '" + c.label + "' needs " +
                              std::to_string(marker_names.size()) + " marker means");
        for (double m : c.marker_means)
            if (!(m > 0.0) || !std::isfinite(m))
                throw ConfigError("generator: class '" + c.label +
                                  "' marker means must be positive and finite");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw ConfigError("generator: sigma must be a nonnegative real");
    if (!(age_mean > 0.0) || !(age_sd >= 0.0))
        throw ConfigError("generator: invalid age distribution");
    for (const auto* weights : {&control_length_weights, &disease_length_weights}) {
        for (const auto& [L, w] : *weights) {
            if (L < 1) throw ConfigError("generator: series length must be >= 1");
            if (w < 0.0 || !std::isfinite(w))
                throw ConfigError("generator: negative length weight at L=" + std::to_string(L));
        }
    }
}

namespace {

int group_patient_total(const GeneratorConfig& cfg, bool disease) {
    int n = 0;
    for (const auto& c : cfg.classes)
        if ((c.diagnosis_class != 0) == disease) n += c.n_patients;
    return n;
}

// Expands length weights into one length per patient. Integer counts that sum
// to n_patients are taken verbatim; probabilities summing to 1 are apportioned
// by largest remainder. Anything else is an invalid distribution.
std::vector<int> expand_lengths(const std::map<int, double>& weights, int n_patients,
                                const char* group) {
    double sum = 0.0;
    bool integral = true;
    for (const auto& [L, w] : weights) {
        sum += w;
        if (w != std::floor(w)) integral = false;
    }
    std::vector<int> lengths;
    if (integral && std::llround(sum) == n_patients) {
        for (const auto& [L, w] : weights)
            lengths.insert(lengths.end(), static_cast<std::size_t>(w), L);
    } else if (std::abs(sum - 1.0) <= 1e-9) {
        // Largest-remainder apportionment of n_patients.
        std::vector<std::pair<int, double>> quota;
        int assigned = 0;
        for (const auto& [L, w] : weights) {
            const double q = w * n_patients;
            const int base = static_cast<int>(std::floor(q));
            assigned += base;
            quota.emplace_back(L, q - base);
            lengths.insert(lengths.end(), static_cast<std::size_t>(base), L);
        }
        std::stable_sort(quota.begin(), quota.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        for (int i = 0; i < n_patients - assigned; ++i)
            lengths.push_back(quota[static_cast<std::size_t>(i)].first);
        std::sort(lengths.begin(), lengths.end());
    } else {
        throw ConfigError(std::string("generator: ") + group +
                          " length weights must be counts summing to the group's patient total "
                          "or probabilities summing to 1");
    }
    return lengths;
}

} // namespace

Dataset generate_synthetic(const GeneratorConfig& config, std::uint64_t seed) {
    config.validate();

    auto control_lengths =
        expand_lengths(config.control_length_weights, group_patient_total(config, false), "control");
    auto disease_lengths =
        expand_lengths(config.disease_length_weights, group_patient_total(config, true), "disease");

    Rng rng(derive_seed(seed, "generator"));
    rng.shuffle(control_lengths);
    rng.shuffle(disease_lengths);

    const double sigma = config.sigma;
    // exp(sigma*z - sigma^2/2) has unit expectation.
    const double log_shift = -0.5 * sigma * sigma;

    Dataset ds;
    ds.marker_names = config.marker_names;

    std::size_t next_control = 0, next_disease = 0;
    int patient_counter = 0;
    for (const auto& profile : config.classes) {
        const bool disease = profile.diagnosis_class != 0;
        for (int p = 0; p < profile.n_patients; ++p) {
            PatientSeries s;
            char id[16];
            std::snprintf(id, sizeof(id), "P%04d", ++patient_counter);
            s.patient_id = id;
            s.diagnosis_class = profile.diagnosis_class;
            const int length = disease ? disease_lengths[next_disease++]
                                       : control_lengths[next_control++];

            double age = rng.normal(config.age_mean, config.age_sd);
            age = std::clamp(age, 18.0, 95.0);

            for (int i = 0; i < length; ++i) {
                Observation obs;
                obs.patient_id = s.patient_id;
                obs.diagnosis_class = s.diagnosis_class;
                obs.sequence_index = i;
                obs.age = age + 0.25 * i; // quarterly examinations
                if (disease) obs.time_to_diagnosis = 30.0 * (length - 1 - i);
                obs.markers.reserve(config.marker_names.size());
                for (double mean : profile.marker_means) {
                    const double z = sigma > 0.0 ? rng.normal() : 0.0;
                    obs.markers.push_back(mean * std::exp(sigma * z + log_shift));
                }
                s.observations.push_back(std::move(obs));
            }
            ds.series.push_back(std::move(s));
        }
    }
    return ds;
}

} // namespace serostack
