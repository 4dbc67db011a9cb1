#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "serostack/dataset.hpp"

namespace serostack {

// Group-aware k-fold assignment: all rows of a patient share a fold.
struct GroupFolds {
    int n_folds = 0;
    std::vector<std::string> groups;  // unique groups, first-appearance order
    std::vector<int> fold_of_group;   // parallel to groups
    std::vector<int> fold_of_row;     // parallel to fm rows
    int redraws = 0;                  // 1 when the plan had to be re-drawn

    std::vector<std::size_t> test_rows(int fold) const;
    std::vector<std::size_t> train_rows(int fold) const;
};

// Deterministic under seed: groups are shuffled and dealt round-robin.
// When require_two_train_classes is set and some fold's training side ends up
// single-class, the plan is re-drawn once with a derived seed; a second
// violation throws NumericError. group_aware = false treats every row as its
// own group.
GroupFolds plan_group_folds(const FeatureMatrix& fm, int n_folds, std::uint64_t seed,
                            bool group_aware = true, bool require_two_train_classes = true);

} // namespace serostack
