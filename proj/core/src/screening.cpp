#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "serostack/stats.hpp"

namespace serostack {

ScreeningReport screen_markers(const Dataset& ds, const FlattenPolicy& policy,
                               const ScreeningConfig& cfg) {
    if (cfg.tests.empty()) throw std::invalid_argument("screen_markers: no tests configured");
    if (cfg.k_per_comparison < 1)
        throw std::invalid_argument("screen_markers: k_per_comparison must be >= 1");

    // Marker values only; appended features would not be marker-attributable.
    FlattenPolicy marker_policy{policy.kind, false, false};
    const FeatureMatrix fm = flatten(ds, marker_policy);
    const std::size_t d = ds.marker_names.size();

    // Per-class column samples.
    std::map<int, std::vector<std::vector<double>>> values_by_class;
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        auto& cols = values_by_class[fm.labels[i]];
        if (cols.empty()) cols.resize(d);
        const auto row = fm.row(i);
        for (std::size_t m = 0; m < d; ++m) cols[m].push_back(row[m]);
    }
    if (!values_by_class.contains(0))
        throw std::invalid_argument("screen_markers: control class 0 is absent");
    const auto& control = values_by_class.at(0);

    ScreeningReport report;
    std::vector<std::string> selected;

    for (TestKind test : cfg.tests) {
        for (const auto& [cls, cols] : values_by_class) {
            if (cls == 0) continue;
            // Score all markers for this (test, class) comparison.
            std::vector<std::pair<double, std::size_t>> by_p;
            for (std::size_t m = 0; m < d; ++m) {
                if (test == TestKind::t_test && (cols[m].size() < 2 || control[m].size() < 2))
                    throw std::invalid_argument(
                        "screen_markers: class " + std::to_string(cls) +
                        " has fewer than 2 flattened values for t_test");
                const TestResult r = test == TestKind::t_test
                                         ? t_test(cols[m], control[m], cfg.t_variant)
                                         : mann_whitney_u(cols[m], control[m]);
                report.scores.push_back({ds.marker_names[m], cls, test, r});
                by_p.emplace_back(r.p_value, m);
            }
            std::sort(by_p.begin(), by_p.end(), [&](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return ds.marker_names[x.second] < ds.marker_names[y.second];
            });
            const std::size_t k = std::min<std::size_t>(by_p.size(),
                                                        static_cast<std::size_t>(cfg.k_per_comparison));
            for (std::size_t i = 0; i < k; ++i) {
                const auto& name = ds.marker_names[by_p[i].second];
                if (std::find(selected.begin(), selected.end(), name) == selected.end())
                    selected.push_back(name);
            }
        }
    }

    // Order the union by the marker's lowest p over all comparisons, name
    // breaking ties.
    std::map<std::string, double> min_p;
    for (const auto& score : report.scores) {
        auto [it, inserted] = min_p.try_emplace(score.marker, score.result.p_value);
        if (!inserted) it->second = std::min(it->second, score.result.p_value);
    }
    std::sort(selected.begin(), selected.end(), [&](const std::string& x, const std::string& y) {
        if (min_p.at(x) != min_p.at(y)) return min_p.at(x) < min_p.at(y);
        return x < y;
    });
    report.selected = std::move(selected);
    return report;
}

} // namespace serostack
