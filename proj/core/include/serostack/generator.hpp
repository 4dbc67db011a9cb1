#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "serostack/dataset.hpp"

namespace serostack {

struct ClassProfile {
    std::string label;            // diagnosis label as written to CSV
    int diagnosis_class = 0;      // 0 = control, 1..4 = diseases
    int n_patients = 0;
    std::vector<double> marker_means; // aligned with GeneratorConfig::marker_names
};

// Cohort generator calibrated so that the default configuration reproduces
// the reference series-length histogram exactly and the per-class marker
// means in expectation.
struct GeneratorConfig {
    std::vector<std::string> marker_names;
    std::vector<ClassProfile> classes;
    // Series-length weights per group. Either exact integer counts summing to
    // the group's patient total, or probabilities summing to 1 (apportioned
    // deterministically by largest remainder).
    std::map<int, double> control_length_weights;
    std::map<int, double> disease_length_weights;
    double sigma = 0.2;      // lognormal noise scale; 0 means exact class means
    double age_mean = 60.0;  // patient age at first observation
    double age_sd = 10.0;

    static GeneratorConfig defaults();
    void validate() const; // throws ConfigError
};

// Pure function of (config, seed). Marker value = class_mean *
// exp(sigma * z - sigma^2 / 2) with z standard normal, so levels stay
// positive and the expected value equals the class mean.
Dataset generate_synthetic(const GeneratorConfig& config, std::uint64_t seed);

} // namespace serostack
