#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "serostack/classifiers.hpp"
#include "serostack/folds.hpp"

namespace serostack {

enum class MetaFeatureMode { scores, labels_one_hot };

struct OutOfFold {
    int k = 5;
};
struct Holdout {
    double fraction = 0.25;
};
using StackingScheme = std::variant<OutOfFold, Holdout>;

// Two-level stacking: first-level learners produce meta features, a logistic
// meta-classifier learns on them.
struct StackingConfig {
    std::vector<std::pair<std::string, ModelSpec>> base_specs; // ordered (name, spec)
    ModelSpec meta_spec = ModelSpec{LogisticParams{}};
    MetaFeatureMode meta_feature_mode = MetaFeatureMode::scores;
    StackingScheme scheme = OutOfFold{};

    // The six default first-level learners.
    static StackingConfig defaults();
};

// Bookkeeping for the leakage audit: which patients trained the models that
// produced each row's meta features.
struct MetaFeatureAudit {
    std::vector<int> fold_of_row;
    std::vector<std::set<std::string>> fold_training_groups;
    int redraws = 0;
};

struct MetaFeatures {
    FeatureMatrix features;   // n x (B * C), base-major column layout
    std::vector<int> classes; // global class list the columns refer to
    std::optional<MetaFeatureAudit> audit;
};

// Out-of-fold: every row is scored by base models whose training folds
// excluded that row's patient. Holdout: base models train on the complement
// split and only the holdout rows get meta features.
MetaFeatures build_meta_features(const std::vector<std::pair<std::string, ModelSpec>>& bases,
                                 const FeatureMatrix& fm, const StackingScheme& scheme,
                                 MetaFeatureMode mode, std::uint64_t seed,
                                 bool with_audit = false);

struct StackedModel {
    std::vector<std::pair<std::string, TrainedModel>> base_models; // refit on all data
    TrainedModel meta;
    std::vector<int> classes;
    std::vector<std::string> meta_feature_names;
};

StackedModel train_stacking(const FeatureMatrix& train, const StackingConfig& cfg,
                            std::uint64_t seed);

std::vector<int> predict_stacked(const StackedModel& model, const FeatureMatrix& fm);

// JSON envelope holding the base model documents, the meta model document and
// the column layout; round-trips preserve predictions bit-exactly.
std::string stacked_to_json(const StackedModel& model, int indent = -1);
StackedModel stacked_from_json(std::string_view text);

} // namespace serostack
