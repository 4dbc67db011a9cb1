#include "serostack/tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "serostack/rng.hpp"

namespace serostack {

double gini_impurity(std::span<const std::size_t> counts) {
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    if (total == 0) throw std::invalid_argument("gini_impurity: all counts are zero");
    double sum_sq = 0.0;
    for (std::size_t c : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

std::vector<std::size_t> label_positions(const FeatureMatrix& fm) {
    const auto classes = fm.class_list();
    std::vector<std::size_t> idx(fm.n_rows());
    for (std::size_t i = 0; i < fm.n_rows(); ++i)
        idx[i] = static_cast<std::size_t>(
            std::lower_bound(classes.begin(), classes.end(), fm.labels[i]) - classes.begin());
    return idx;
}

namespace {

double gini_from_counts(const std::vector<std::size_t>& counts, std::size_t total) {
    double sum_sq = 0.0;
    for (std::size_t c : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

std::optional<SplitCandidate> search_split(const FeatureMatrix& fm,
                                           std::span<const std::size_t> rows,
                                           std::span<const std::size_t> cls_of,
                                           std::size_t n_classes,
                                           std::span<const std::size_t> candidate_features,
                                           int min_samples_leaf) {
    if (rows.size() < 2) return std::nullopt;

    std::vector<std::size_t> parent_counts(n_classes, 0);
    for (std::size_t r : rows) ++parent_counts[cls_of[r]];
    const std::size_t n = rows.size();
    const double parent_gini = gini_from_counts(parent_counts, n);

    std::optional<SplitCandidate> best;
    std::vector<std::pair<double, std::size_t>> sorted; // (value, class position)
    std::vector<std::size_t> left_counts(n_classes), right_counts(n_classes);

    for (std::size_t f : candidate_features) {
        sorted.clear();
        for (std::size_t r : rows) sorted.emplace_back(fm.row(r)[f], cls_of[r]);
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::fill(left_counts.begin(), left_counts.end(), 0);
        right_counts = parent_counts;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ++left_counts[sorted[i].second];
            --right_counts[sorted[i].second];
            const double v = sorted[i].first;
            const double next = sorted[i + 1].first;
            if (v == next) continue;
            const std::size_t n_left = i + 1, n_right = n - n_left;
            if (n_left < static_cast<std::size_t>(min_samples_leaf) ||
                n_right < static_cast<std::size_t>(min_samples_leaf))
                continue;
            double threshold = v + 0.5 * (next - v);
            if (threshold >= next) threshold = v; // rounding guard at adjacent doubles
            const double child_gini =
                (static_cast<double>(n_left) * gini_from_counts(left_counts, n_left) +
                 static_cast<double>(n_right) * gini_from_counts(right_counts, n_right)) /
                static_cast<double>(n);
            const double gain = parent_gini - child_gini;
            if (gain <= 0.0) continue;
            if (!best || gain > best->gain) best = SplitCandidate{f, threshold, gain};
        }
    }
    return best;
}

} // namespace

std::optional<SplitCandidate> best_split(const FeatureMatrix& fm,
                                         std::span<const std::size_t> rows,
                                         std::span<const std::size_t> candidate_features,
                                         int min_samples_leaf) {
    const auto cls_of = label_positions(fm);
    return search_split(fm, rows, cls_of, fm.class_list().size(), candidate_features,
                        min_samples_leaf);
}

TreeModel build_tree(const FeatureMatrix& fm, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cls_of, std::size_t n_classes, int max_depth,
                     int min_samples_leaf, std::size_t feature_subsample, Rng* rng) {
    const std::size_t d = fm.n_features();
    std::vector<std::size_t> all_features(d);
    for (std::size_t f = 0; f < d; ++f) all_features[f] = f;

    TreeModel tree;

    auto make_leaf = [&](std::span<const std::size_t> node_rows) {
        TreeNode leaf;
        leaf.class_counts.assign(n_classes, 0.0);
        for (std::size_t r : node_rows) leaf.class_counts[cls_of[r]] += 1.0;
        tree.nodes.push_back(std::move(leaf));
        return static_cast<int>(tree.nodes.size() - 1);
    };

    std::function<int(std::vector<std::size_t>&, int)> grow =
        [&](std::vector<std::size_t>& node_rows, int depth) -> int {
        std::optional<SplitCandidate> cand;
        if (depth < max_depth) {
            if (feature_subsample > 0 && feature_subsample < d) {
                const auto subset = rng->sample_without_replacement(d, feature_subsample);
                cand = search_split(fm, node_rows, cls_of, n_classes, subset, min_samples_leaf);
            } else {
                cand = search_split(fm, node_rows, cls_of, n_classes, all_features,
                                    min_samples_leaf);
            }
        }
        if (!cand) return make_leaf(node_rows);

        std::vector<std::size_t> left_rows, right_rows;
        for (std::size_t r : node_rows)
            (fm.row(r)[cand->feature] <= cand->threshold ? left_rows : right_rows).push_back(r);

        TreeNode node;
        node.feature = static_cast<int>(cand->feature);
        node.threshold = cand->threshold;
        tree.nodes.push_back(std::move(node));
        const int self = static_cast<int>(tree.nodes.size() - 1);
        const int left = grow(left_rows, depth + 1);
        const int right = grow(right_rows, depth + 1);
        tree.nodes[static_cast<std::size_t>(self)].left = left;
        tree.nodes[static_cast<std::size_t>(self)].right = right;
        return self;
    };

    std::vector<std::size_t> root_rows(rows.begin(), rows.end());
    grow(root_rows, 0);
    return tree;
}

const std::vector<double>& TreeModel::leaf_counts(std::span<const double> row) const {
    const TreeNode* node = &nodes[0];
    while (!node->is_leaf()) {
        node = row[static_cast<std::size_t>(node->feature)] <= node->threshold
                   ? &nodes[static_cast<std::size_t>(node->left)]
                   : &nodes[static_cast<std::size_t>(node->right)];
    }
    return node->class_counts;
}

int TreeModel::depth() const {
    std::function<int(int)> walk = [&](int i) -> int {
        const TreeNode& node = nodes[static_cast<std::size_t>(i)];
        if (node.is_leaf()) return 0;
        return 1 + std::max(walk(node.left), walk(node.right));
    };
    return nodes.empty() ? 0 : walk(0);
}

} // namespace serostack
