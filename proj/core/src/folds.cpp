#include "serostack/folds.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "serostack/errors.hpp"
#include "serostack/rng.hpp"

namespace serostack {

std::vector<std::size_t> GroupFolds::test_rows(int fold) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < fold_of_row.size(); ++i)
        if (fold_of_row[i] == fold) rows.push_back(i);
    return rows;
}

std::vector<std::size_t> GroupFolds::train_rows(int fold) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < fold_of_row.size(); ++i)
        if (fold_of_row[i] != fold) rows.push_back(i);
    return rows;
}

namespace {

GroupFolds draw(const FeatureMatrix& fm, int n_folds, std::uint64_t seed, bool group_aware) {
    GroupFolds plan;
    plan.n_folds = n_folds;

    std::unordered_map<std::string, std::size_t> index_of;
    if (group_aware) {
        for (const auto& g : fm.groups) {
            if (index_of.try_emplace(g, plan.groups.size()).second) plan.groups.push_back(g);
        }
    } else {
        plan.groups.resize(fm.n_rows());
        for (std::size_t i = 0; i < fm.n_rows(); ++i)
            plan.groups[i] = "row:" + std::to_string(i);
    }
    if (static_cast<int>(plan.groups.size()) < n_folds)
        throw NumericError("plan_group_folds: fewer groups (" +
                           std::to_string(plan.groups.size()) + ") than folds (" +
                           std::to_string(n_folds) + ")");

    std::vector<std::size_t> order(plan.groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(derive_seed(seed, "folds"));
    rng.shuffle(order);

    plan.fold_of_group.assign(plan.groups.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        plan.fold_of_group[order[i]] = static_cast<int>(i % static_cast<std::size_t>(n_folds));

    plan.fold_of_row.resize(fm.n_rows());
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        const std::size_t g = group_aware ? index_of.at(fm.groups[i]) : i;
        plan.fold_of_row[i] = plan.fold_of_group[g];
    }
    return plan;
}

bool train_sides_have_two_classes(const FeatureMatrix& fm, const GroupFolds& plan) {
    for (int fold = 0; fold < plan.n_folds; ++fold) {
        std::set<int> classes;
        for (std::size_t i = 0; i < fm.n_rows(); ++i)
            if (plan.fold_of_row[i] != fold) classes.insert(fm.labels[i]);
        if (classes.size() < 2) return false;
    }
    return true;
}

} // namespace

GroupFolds plan_group_folds(const FeatureMatrix& fm, int n_folds, std::uint64_t seed,
                            bool group_aware, bool require_two_train_classes) {
    if (n_folds < 2) throw std::invalid_argument("plan_group_folds: n_folds must be >= 2");
    if (fm.n_rows() == 0) throw std::invalid_argument("plan_group_folds: empty matrix");

    GroupFolds plan = draw(fm, n_folds, seed, group_aware);
    if (!require_two_train_classes || train_sides_have_two_classes(fm, plan)) return plan;

    plan = draw(fm, n_folds, derive_seed(seed, "refold"), group_aware);
    plan.redraws = 1;
    if (train_sides_have_two_classes(fm, plan)) return plan;
    throw NumericError("plan_group_folds: a fold's training side is single-class "
                       "after one re-draw");
}

} // namespace serostack
