#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "serostack/dataset.hpp"

namespace serostack {

// Gini impurity 1 - sum((n_c / n)^2). Throws on an all-zero count vector.
double gini_impurity(std::span<const std::size_t> counts);

struct SplitCandidate {
    std::size_t feature = 0;
    double threshold = 0.0; // rows with value <= threshold go left
    double gain = 0.0;      // impurity decrease
};

// Exhaustive CART search over midpoints of consecutive distinct sorted
// values of each candidate feature. Returns the split with the largest
// weighted impurity decrease, ties broken by (lower feature index, lower
// threshold); nullopt when nothing reduces impurity or min_samples_leaf
// blocks every candidate. `rows` indexes into fm and may repeat (bootstrap).
std::optional<SplitCandidate> best_split(const FeatureMatrix& fm,
                                         std::span<const std::size_t> rows,
                                         std::span<const std::size_t> candidate_features,
                                         int min_samples_leaf = 1);

// Class position of each row's label within fm's sorted unique label set.
std::vector<std::size_t> label_positions(const FeatureMatrix& fm);

// Flat binary tree; leaves hold per-class training counts.
struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    int left = -1, right = -1;
    std::vector<double> class_counts; // leaves only, indexed by class position

    bool is_leaf() const { return feature < 0; }
};

struct TreeModel {
    std::vector<TreeNode> nodes; // node 0 is the root

    // Leaf class counts for one feature row.
    const std::vector<double>& leaf_counts(std::span<const double> row) const;
    int depth() const;
};

class Rng;

// Recursive CART builder. cls_of maps every fm row to its class position;
// rows may repeat (bootstrap resample). When feature_subsample > 0, each node
// searches a fresh random draw of that many features (without replacement)
// instead of all of them.
TreeModel build_tree(const FeatureMatrix& fm, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cls_of, std::size_t n_classes, int max_depth,
                     int min_samples_leaf, std::size_t feature_subsample = 0, Rng* rng = nullptr);

} // namespace serostack
