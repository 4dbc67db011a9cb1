#include "serostack/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "serostack/errors.hpp"
#include "serostack/rng.hpp"
#include "serostack/svm_solver.hpp"

namespace serostack {

std::string_view kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::logistic: return "logistic";
        case ModelKind::svm: return "svm";
        case ModelKind::naive_bayes: return "naive_bayes";
        case ModelKind::knn: return "knn";
        case ModelKind::tree: return "tree";
        case ModelKind::forest: return "forest";
    }
    throw std::invalid_argument("unknown model kind");
}

std::string_view kind_short_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::logistic: return "LR";
        case ModelKind::svm: return "SVM";
        case ModelKind::naive_bayes: return "NB";
        case ModelKind::knn: return "KNN";
        case ModelKind::tree: return "DT";
        case ModelKind::forest: return "RF";
    }
    throw std::invalid_argument("unknown model kind");
}

ModelKind kind_from_name(std::string_view name) {
    for (ModelKind k : {ModelKind::logistic, ModelKind::svm, ModelKind::naive_bayes,
                        ModelKind::knn, ModelKind::tree, ModelKind::forest})
        if (kind_name(k) == name) return k;
    throw ConfigError("unknown model kind '" + std::string(name) + "'");
}

std::vector<double> Standardizer::apply(std::span<const double> row) const {
    std::vector<double> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = (row[i] - mean[i]) / scale[i];
    return out;
}

namespace {

// Lowest class position among maximal scores.
std::size_t argmax_lowest(std::span<const double> scores) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < scores.size(); ++c)
        if (scores[c] > scores[best]) best = c;
    return best;
}

std::vector<double> column_means(const FeatureMatrix& fm) {
    std::vector<double> mean(fm.n_features(), 0.0);
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        const auto row = fm.row(i);
        for (std::size_t f = 0; f < row.size(); ++f) mean[f] += row[f];
    }
    for (double& m : mean) m /= static_cast<double>(fm.n_rows());
    return mean;
}

// Population variances per column.
std::vector<double> column_variances(const FeatureMatrix& fm, const std::vector<double>& mean) {
    std::vector<double> var(fm.n_features(), 0.0);
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        const auto row = fm.row(i);
        for (std::size_t f = 0; f < row.size(); ++f) {
            const double d = row[f] - mean[f];
            var[f] += d * d;
        }
    }
    for (double& v : var) v /= static_cast<double>(fm.n_rows());
    return var;
}

// Materialized (optionally standardized) training view.
struct TrainingData {
    std::vector<double> values; // row-major
    std::size_t n = 0, d = 0;
    std::vector<std::size_t> cls_of; // class position per row
    std::size_t n_classes = 0;

    std::span<const double> row(std::size_t i) const { return {values.data() + i * d, d}; }
};

TrainingData materialize(const FeatureMatrix& fm, const std::vector<int>& classes,
                         const std::optional<Standardizer>& std_opt) {
    TrainingData data;
    data.n = fm.n_rows();
    data.d = fm.n_features();
    data.n_classes = classes.size();
    data.values.reserve(data.n * data.d);
    for (std::size_t i = 0; i < data.n; ++i) {
        if (std_opt) {
            const auto z = std_opt->apply(fm.row(i));
            data.values.insert(data.values.end(), z.begin(), z.end());
        } else {
            const auto r = fm.row(i);
            data.values.insert(data.values.end(), r.begin(), r.end());
        }
    }
    data.cls_of.resize(data.n);
    for (std::size_t i = 0; i < data.n; ++i)
        data.cls_of[i] = static_cast<std::size_t>(
            std::lower_bound(classes.begin(), classes.end(), fm.labels[i]) - classes.begin());
    return data;
}

// --- Logistic regression ---------------------------------------------------

double sigmoid(double m) {
    if (m >= 0.0) return 1.0 / (1.0 + std::exp(-m));
    const double e = std::exp(m);
    return e / (1.0 + e);
}

// log(1 + exp(-m)) without overflow.
double softplus_neg(double m) {
    if (m > 0.0) return std::log1p(std::exp(-m));
    return -m + std::log1p(std::exp(m));
}

struct BinaryObjective {
    const TrainingData& data;
    const std::vector<double>& target; // 0/1 per row
    double lambda;                     // L2 strength on weights (not bias)

    double value(const std::vector<double>& w, double b) const {
        double loss = 0.0;
        for (std::size_t i = 0; i < data.n; ++i) {
            const auto x = data.row(i);
            double m = b;
            for (std::size_t f = 0; f < data.d; ++f) m += w[f] * x[f];
            // y=1: log(1+e^{-m}); y=0: log(1+e^{m})
            loss += target[i] > 0.5 ? softplus_neg(m) : softplus_neg(-m);
        }
        loss /= static_cast<double>(data.n);
        double reg = 0.0;
        for (double v : w) reg += v * v;
        return loss + 0.5 * lambda * reg;
    }

    void gradient(const std::vector<double>& w, double b, std::vector<double>& gw,
                  double& gb) const {
        std::fill(gw.begin(), gw.end(), 0.0);
        gb = 0.0;
        for (std::size_t i = 0; i < data.n; ++i) {
            const auto x = data.row(i);
            double m = b;
            for (std::size_t f = 0; f < data.d; ++f) m += w[f] * x[f];
            const double err = sigmoid(m) - target[i];
            for (std::size_t f = 0; f < data.d; ++f) gw[f] += err * x[f];
            gb += err;
        }
        const double inv_n = 1.0 / static_cast<double>(data.n);
        for (std::size_t f = 0; f < data.d; ++f) gw[f] = gw[f] * inv_n + lambda * w[f];
        gb *= inv_n;
    }
};

LogisticModel train_logistic(const TrainingData& data, const LogisticParams& hp,
                             std::vector<std::vector<double>>* trace = nullptr) {
    const double lambda = hp.l2_penalty ? 1.0 / static_cast<double>(data.n) : 0.0;
    LogisticModel model;
    model.weights.assign(data.n_classes, std::vector<double>(data.d, 0.0));
    model.bias.assign(data.n_classes, 0.0);
    if (trace) trace->assign(data.n_classes, {});

    std::vector<double> target(data.n);
    std::vector<double> gw(data.d), trial(data.d);
    for (std::size_t c = 0; c < data.n_classes; ++c) {
        for (std::size_t i = 0; i < data.n; ++i) target[i] = data.cls_of[i] == c ? 1.0 : 0.0;
        BinaryObjective obj{data, target, lambda};
        auto& w = model.weights[c];
        double& b = model.bias[c];
        double current = obj.value(w, b);
        if (trace) (*trace)[c].push_back(current);
        for (int iter = 0; iter < hp.max_iter; ++iter) {
            double gb = 0.0;
            obj.gradient(w, b, gw, gb);
            double norm_sq = gb * gb;
            for (double g : gw) norm_sq += g * g;
            if (std::sqrt(norm_sq) < hp.tol) break;

            // Backtracking line search keeps the objective non-increasing.
            double step = hp.learning_rate;
            double trial_b = b;
            double next = current;
            while (step > 1e-14) {
                for (std::size_t f = 0; f < data.d; ++f) trial[f] = w[f] - step * gw[f];
                trial_b = b - step * gb;
                next = obj.value(trial, trial_b);
                if (next <= current) break;
                step *= 0.5;
            }
            if (next > current) break; // no descent direction progress at any step
            w = trial;
            b = trial_b;
            current = next;
            if (trace) (*trace)[c].push_back(current);
        }
    }
    return model;
}

// --- SVM --------------------------------------------------------------------

double resolve_gamma(const TrainingData& data, const SvmParams& hp) {
    if (hp.gamma) {
        if (!(*hp.gamma > 0.0)) throw std::invalid_argument("svm: gamma must be positive");
        return *hp.gamma;
    }
    // "scale": 1 / (d * mean feature variance) over the training matrix.
    double var_sum = 0.0;
    for (std::size_t f = 0; f < data.d; ++f) {
        double mean = 0.0;
        for (std::size_t i = 0; i < data.n; ++i) mean += data.row(i)[f];
        mean /= static_cast<double>(data.n);
        double var = 0.0;
        for (std::size_t i = 0; i < data.n; ++i) {
            const double diff = data.row(i)[f] - mean;
            var += diff * diff;
        }
        var_sum += var / static_cast<double>(data.n);
    }
    const double mean_var = var_sum / static_cast<double>(data.d);
    if (mean_var <= 0.0) return 1.0;
    return 1.0 / (static_cast<double>(data.d) * mean_var);
}

SvmModel train_svm(const TrainingData& data, const SvmParams& hp) {
    if (!(hp.c > 0.0)) throw std::invalid_argument("svm: C must be positive");
    SvmModel model;
    model.gamma = resolve_gamma(data, hp);

    std::vector<std::vector<std::size_t>> rows_of_class(data.n_classes);
    for (std::size_t i = 0; i < data.n; ++i) rows_of_class[data.cls_of[i]].push_back(i);

    for (std::size_t a = 0; a < data.n_classes; ++a) {
        for (std::size_t b = a + 1; b < data.n_classes; ++b) {
            std::vector<std::size_t> rows = rows_of_class[a];
            rows.insert(rows.end(), rows_of_class[b].begin(), rows_of_class[b].end());
            const std::size_t m = rows.size();

            std::vector<double> y(m);
            for (std::size_t i = 0; i < m; ++i)
                y[i] = data.cls_of[rows[i]] == a ? 1.0 : -1.0;

            std::vector<double> kernel(m * m);
            for (std::size_t i = 0; i < m; ++i) {
                kernel[i * m + i] = 1.0;
                for (std::size_t j = i + 1; j < m; ++j) {
                    const double k = rbf_kernel(data.row(rows[i]), data.row(rows[j]), model.gamma);
                    kernel[i * m + j] = k;
                    kernel[j * m + i] = k;
                }
            }

            const SmoResult sol = smo_solve(kernel, y, {hp.c, hp.kkt_tol, hp.max_passes});

            SvmPairModel pair;
            pair.class_a = a;
            pair.class_b = b;
            pair.bias = sol.bias;
            for (std::size_t i = 0; i < m; ++i) {
                if (sol.alpha[i] <= 0.0) continue;
                const auto r = data.row(rows[i]);
                pair.support.emplace_back(r.begin(), r.end());
                pair.coef.push_back(sol.alpha[i] * y[i]);
            }
            model.pairs.push_back(std::move(pair));
        }
    }
    return model;
}

// --- Gaussian naive Bayes ----------------------------------------------------

NaiveBayesModel train_naive_bayes(const TrainingData& data, const NaiveBayesParams& hp) {
    if (!(hp.smoothing_alpha > 0.0))
        throw std::invalid_argument("naive_bayes: smoothing_alpha must be positive");
    NaiveBayesModel model;
    model.log_prior.assign(data.n_classes, 0.0);
    model.mean.assign(data.n_classes, std::vector<double>(data.d, 0.0));
    model.var.assign(data.n_classes, std::vector<double>(data.d, 0.0));

    std::vector<std::size_t> count(data.n_classes, 0);
    for (std::size_t i = 0; i < data.n; ++i) {
        const auto x = data.row(i);
        const std::size_t c = data.cls_of[i];
        ++count[c];
        for (std::size_t f = 0; f < data.d; ++f) model.mean[c][f] += x[f];
    }
    for (std::size_t c = 0; c < data.n_classes; ++c)
        for (double& m : model.mean[c]) m /= static_cast<double>(count[c]);
    for (std::size_t i = 0; i < data.n; ++i) {
        const auto x = data.row(i);
        const std::size_t c = data.cls_of[i];
        for (std::size_t f = 0; f < data.d; ++f) {
            const double d = x[f] - model.mean[c][f];
            model.var[c][f] += d * d;
        }
    }

    // Relative variance floor: alpha * the largest per-feature variance of the
    // whole training matrix.
    const auto global_mean_vec = [&] {
        std::vector<double> m(data.d, 0.0);
        for (std::size_t i = 0; i < data.n; ++i) {
            const auto x = data.row(i);
            for (std::size_t f = 0; f < data.d; ++f) m[f] += x[f];
        }
        for (double& v : m) v /= static_cast<double>(data.n);
        return m;
    }();
    double max_var = 0.0;
    for (std::size_t f = 0; f < data.d; ++f) {
        double v = 0.0;
        for (std::size_t i = 0; i < data.n; ++i) {
            const double d = data.row(i)[f] - global_mean_vec[f];
            v += d * d;
        }
        max_var = std::max(max_var, v / static_cast<double>(data.n));
    }
    const double floor = std::max(hp.smoothing_alpha * max_var, 1e-30);

    for (std::size_t c = 0; c < data.n_classes; ++c) {
        model.log_prior[c] = std::log(static_cast<double>(count[c]) / static_cast<double>(data.n));
        for (std::size_t f = 0; f < data.d; ++f) {
            model.var[c][f] = std::max(model.var[c][f] / static_cast<double>(count[c]), floor);
        }
    }
    return model;
}

// --- KNN ---------------------------------------------------------------------

KnnModel train_knn(const TrainingData& data, const KnnParams& hp) {
    if (hp.n_neighbors < 1) throw std::invalid_argument("knn: n_neighbors must be >= 1");
    KnnModel model;
    model.k = hp.n_neighbors;
    model.points = data.values;
    model.point_class = data.cls_of;
    return model;
}

// --- Trees -------------------------------------------------------------------

FeatureMatrix to_matrix(const TrainingData& data) {
    FeatureMatrix fm;
    fm.values = data.values;
    fm.labels.resize(data.n);
    for (std::size_t i = 0; i < data.n; ++i) fm.labels[i] = static_cast<int>(data.cls_of[i]);
    fm.groups.assign(data.n, "");
    fm.feature_names.assign(data.d, "");
    return fm;
}

TreeModel train_tree(const TrainingData& data, const TreeParams& hp) {
    if (hp.max_depth < 0) throw std::invalid_argument("tree: max_depth must be >= 0");
    if (hp.min_samples_leaf < 1)
        throw std::invalid_argument("tree: min_samples_leaf must be >= 1");
    const FeatureMatrix fm = to_matrix(data);
    std::vector<std::size_t> rows(data.n);
    std::iota(rows.begin(), rows.end(), 0);
    return build_tree(fm, rows, data.cls_of, data.n_classes, hp.max_depth, hp.min_samples_leaf);
}

ForestModel train_forest(const TrainingData& data, const ForestParams& hp, std::uint64_t seed) {
    if (hp.n_estimators < 1) throw std::invalid_argument("forest: n_estimators must be >= 1");
    const FeatureMatrix fm = to_matrix(data);
    const std::size_t subsample =
        hp.sqrt_features
            ? std::max<std::size_t>(1, static_cast<std::size_t>(
                                           std::floor(std::sqrt(static_cast<double>(data.d)))))
            : 0;

    ForestModel model;
    model.trees.resize(static_cast<std::size_t>(hp.n_estimators));
    for (std::size_t t = 0; t < model.trees.size(); ++t) {
        Rng rng(derive_seed(seed, "forest_tree", t));
        std::vector<std::size_t> rows(data.n);
        for (auto& r : rows) r = static_cast<std::size_t>(rng.bounded(data.n));
        model.trees[t] = build_tree(fm, rows, data.cls_of, data.n_classes, hp.max_depth,
                                    hp.min_samples_leaf, subsample, &rng);
    }
    return model;
}

} // namespace

TrainedModel train_classifier(const ModelSpec& spec, const FeatureMatrix& fm,
                              std::uint64_t seed) {
    if (fm.n_rows() == 0 || fm.n_features() == 0)
        throw std::invalid_argument("train_classifier: empty feature matrix");
    for (double v : fm.values)
        if (!std::isfinite(v))
            throw std::invalid_argument("train_classifier: non-finite feature value");

    TrainedModel model;
    model.spec = spec;
    model.classes = fm.class_list();
    model.n_features = fm.n_features();

    if (spec.standardize) {
        Standardizer st;
        st.mean = column_means(fm);
        st.scale = column_variances(fm, st.mean);
        for (double& s : st.scale) s = s > 0.0 ? std::sqrt(s) : 1.0;
        model.standardizer = std::move(st);
    }

    const TrainingData data = materialize(fm, model.classes, model.standardizer);

    switch (spec.kind()) {
        case ModelKind::logistic:
            model.impl = train_logistic(data, std::get<LogisticParams>(spec.params));
            break;
        case ModelKind::svm:
            model.impl = train_svm(data, std::get<SvmParams>(spec.params));
            break;
        case ModelKind::naive_bayes:
            model.impl = train_naive_bayes(data, std::get<NaiveBayesParams>(spec.params));
            break;
        case ModelKind::knn:
            model.impl = train_knn(data, std::get<KnnParams>(spec.params));
            break;
        case ModelKind::tree:
            model.impl = train_tree(data, std::get<TreeParams>(spec.params));
            break;
        case ModelKind::forest:
            model.impl = train_forest(data, std::get<ForestParams>(spec.params), seed);
            break;
    }
    return model;
}

namespace {

struct ScoreVisitor {
    const TrainedModel& model;
    std::span<const double> row; // already standardized

    std::vector<double> operator()(const LogisticModel& m) const {
        const std::size_t n_classes = model.classes.size();
        std::vector<double> scores(n_classes);
        double total = 0.0;
        for (std::size_t c = 0; c < n_classes; ++c) {
            double margin = m.bias[c];
            for (std::size_t f = 0; f < row.size(); ++f) margin += m.weights[c][f] * row[f];
            scores[c] = sigmoid(margin);
            total += scores[c];
        }
        for (double& s : scores) s /= total;
        return scores;
    }

    std::vector<double> operator()(const SvmModel& m) const {
        const std::size_t n_classes = model.classes.size();
        std::vector<double> votes(n_classes, 0.0);
        if (m.pairs.empty()) { // single-class degenerate
            votes[0] = 1.0;
            return votes;
        }
        for (const auto& pair : m.pairs) {
            double f = pair.bias;
            for (std::size_t k = 0; k < pair.support.size(); ++k)
                f += pair.coef[k] * rbf_kernel(pair.support[k], row, m.gamma);
            // f == 0 counts for the lower class position.
            votes[f >= 0.0 ? pair.class_a : pair.class_b] += 1.0;
        }
        for (double& v : votes) v /= static_cast<double>(m.pairs.size());
        return votes;
    }

    std::vector<double> operator()(const NaiveBayesModel& m) const {
        const std::size_t n_classes = model.classes.size();
        std::vector<double> logpost(n_classes);
        for (std::size_t c = 0; c < n_classes; ++c) {
            double lp = m.log_prior[c];
            for (std::size_t f = 0; f < row.size(); ++f) {
                const double d = row[f] - m.mean[c][f];
                lp += -0.5 * (std::log(2.0 * std::numbers::pi * m.var[c][f]) +
                              d * d / m.var[c][f]);
            }
            logpost[c] = lp;
        }
        const double max_lp = *std::max_element(logpost.begin(), logpost.end());
        std::vector<double> scores(n_classes);
        if (!std::isfinite(max_lp)) { // every class impossible: fall back to priors
            for (std::size_t c = 0; c < n_classes; ++c) scores[c] = std::exp(m.log_prior[c]);
        } else {
            for (std::size_t c = 0; c < n_classes; ++c) scores[c] = std::exp(logpost[c] - max_lp);
        }
        double total = 0.0;
        for (double s : scores) total += s;
        for (double& s : scores) s /= total;
        return scores;
    }

    std::vector<double> operator()(const KnnModel& m) const {
        const std::size_t n_classes = model.classes.size();
        const auto neighbors = nearest_neighbors(m);
        std::vector<double> counts(n_classes, 0.0);
        for (const auto& [dist, cls] : neighbors) counts[cls] += 1.0;
        for (double& c : counts) c /= static_cast<double>(neighbors.size());
        return counts;
    }

    std::vector<double> operator()(const TreeModel& m) const {
        const auto& counts = m.leaf_counts(row);
        std::vector<double> scores(counts);
        double total = 0.0;
        for (double c : scores) total += c;
        for (double& c : scores) c /= total;
        return scores;
    }

    std::vector<double> operator()(const ForestModel& m) const {
        const std::size_t n_classes = model.classes.size();
        std::vector<double> scores(n_classes, 0.0);
        for (const auto& tree : m.trees) {
            const auto& counts = tree.leaf_counts(row);
            double total = 0.0;
            for (double c : counts) total += c;
            for (std::size_t c = 0; c < n_classes; ++c) scores[c] += counts[c] / total;
        }
        for (double& s : scores) s /= static_cast<double>(m.trees.size());
        return scores;
    }

    // (distance, class position) of the k nearest training points,
    // distance ties broken by training index.
    std::vector<std::pair<double, std::size_t>> nearest_neighbors(const KnnModel& m) const {
        const std::size_t d = row.size();
        const std::size_t n = m.point_class.size();
        std::vector<std::pair<double, std::size_t>> dist(n); // (squared distance, index)
        for (std::size_t i = 0; i < n; ++i) {
            double sq = 0.0;
            for (std::size_t f = 0; f < d; ++f) {
                const double diff = m.points[i * d + f] - row[f];
                sq += diff * diff;
            }
            dist[i] = {sq, i};
        }
        const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(m.k), n);
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
        std::vector<std::pair<double, std::size_t>> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            out.emplace_back(std::sqrt(dist[i].first), m.point_class[dist[i].second]);
        return out;
    }
};

} // namespace

std::vector<double> predict_scores_row(const TrainedModel& model, std::span<const double> row) {
    if (row.size() != model.n_features)
        throw std::invalid_argument("predict: expected " + std::to_string(model.n_features) +
                                    " features, got " + std::to_string(row.size()));
    std::vector<double> standardized;
    std::span<const double> r = row;
    if (model.standardizer) {
        standardized = model.standardizer->apply(row);
        r = standardized;
    }
    return std::visit(ScoreVisitor{model, r}, model.impl);
}

std::vector<double> predict_scores(const TrainedModel& model, const FeatureMatrix& fm) {
    std::vector<double> out;
    out.reserve(fm.n_rows() * model.classes.size());
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        const auto scores = predict_scores_row(model, fm.row(i));
        out.insert(out.end(), scores.begin(), scores.end());
    }
    return out;
}

int predict_row(const TrainedModel& model, std::span<const double> row) {
    const auto scores = predict_scores_row(model, row);
    std::size_t best = argmax_lowest(scores);

    // KNN breaks score (= neighbor count) ties by the larger inverse-distance
    // weighted count, then the lower class label.
    if (model.kind() == ModelKind::knn) {
        std::vector<double> standardized;
        std::span<const double> r = row;
        if (model.standardizer) {
            standardized = model.standardizer->apply(row);
            r = standardized;
        }
        const auto& m = std::get<KnnModel>(model.impl);
        const auto neighbors = ScoreVisitor{model, r}.nearest_neighbors(m);
        std::vector<double> weighted(model.classes.size(), 0.0);
        for (const auto& [dist, cls] : neighbors) weighted[cls] += 1.0 / (dist + 1e-12);
        const double top = scores[best];
        for (std::size_t c = 0; c < scores.size(); ++c) {
            if (scores[c] == top && weighted[c] > weighted[best]) best = c;
        }
    }
    return model.classes[best];
}

std::vector<int> predict(const TrainedModel& model, const FeatureMatrix& fm) {
    std::vector<int> out;
    out.reserve(fm.n_rows());
    for (std::size_t i = 0; i < fm.n_rows(); ++i) out.push_back(predict_row(model, fm.row(i)));
    return out;
}

std::vector<std::vector<double>> logistic_objective_trace(const LogisticParams& hp,
                                                          const FeatureMatrix& fm,
                                                          bool standardize) {
    ModelSpec spec{hp, standardize};
    TrainedModel shell;
    shell.classes = fm.class_list();
    if (standardize) {
        Standardizer st;
        st.mean = column_means(fm);
        st.scale = column_variances(fm, st.mean);
        for (double& s : st.scale) s = s > 0.0 ? std::sqrt(s) : 1.0;
        shell.standardizer = std::move(st);
    }
    const TrainingData data = materialize(fm, shell.classes, shell.standardizer);
    std::vector<std::vector<double>> trace;
    train_logistic(data, hp, &trace);
    return trace;
}

} // namespace serostack
