#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "serostack/dataset.hpp"
#include "serostack/tree.hpp"

namespace serostack {

enum class ModelKind { logistic, svm, naive_bayes, knn, tree, forest };

std::string_view kind_name(ModelKind kind);        // "logistic", "svm", ...
std::string_view kind_short_name(ModelKind kind);  // "LR", "SVM", "NB", "KNN", "DT", "RF"
ModelKind kind_from_name(std::string_view name);

// One-vs-rest binary logistic models trained by full-batch gradient descent
// with backtracking line search on the L2-regularized mean log-loss.
struct LogisticParams {
    int max_iter = 10;
    bool l2_penalty = true; // regularization strength 1/n, matching C=1
    double tol = 1e-4;      // stop when the gradient norm drops below this
    double learning_rate = 1.0;
};

// One-vs-one soft-margin SVMs solved by SMO on the dual.
struct SvmParams {
    double c = 1.0;
    std::optional<double> gamma; // nullopt = "scale": 1 / (d * mean feature variance)
    int max_passes = 100;
    double kkt_tol = 1e-3;
};

// Gaussian naive Bayes; alpha acts as a relative variance floor.
struct NaiveBayesParams {
    double smoothing_alpha = 0.01;
};

struct KnnParams {
    int n_neighbors = 10; // euclidean metric
};

struct TreeParams {
    int max_depth = 3; // gini criterion
    int min_samples_leaf = 1;
};

struct ForestParams {
    int n_estimators = 10;
    int max_depth = 3;
    int min_samples_leaf = 1;
    bool sqrt_features = true; // floor(sqrt(d)) candidate features per split
};

using Hyperparams =
    std::variant<LogisticParams, SvmParams, NaiveBayesParams, KnnParams, TreeParams, ForestParams>;

struct ModelSpec {
    Hyperparams params = LogisticParams{};
    bool standardize = false; // optional per-feature z-scoring, recorded in the model

    ModelKind kind() const { return static_cast<ModelKind>(params.index()); }
};

// --- Learned parameter sets -----------------------------------------------

struct LogisticModel {
    std::vector<std::vector<double>> weights; // one weight vector per class
    std::vector<double> bias;
};

struct SvmPairModel {
    std::size_t class_a = 0, class_b = 0;     // class positions; a < b, +1 = a
    std::vector<std::vector<double>> support; // support vectors
    std::vector<double> coef;                 // alpha_k * y_k
    double bias = 0.0;
};

struct SvmModel {
    double gamma = 1.0;
    std::vector<SvmPairModel> pairs;
};

struct NaiveBayesModel {
    std::vector<double> log_prior;
    std::vector<std::vector<double>> mean; // [class][feature]
    std::vector<std::vector<double>> var;
};

struct KnnModel {
    int k = 10;
    std::vector<double> points; // row-major training rows
    std::vector<std::size_t> point_class; // class positions
};

struct ForestModel {
    std::vector<TreeModel> trees;
};

struct Standardizer {
    std::vector<double> mean;
    std::vector<double> scale; // standard deviation, 1 where degenerate

    std::vector<double> apply(std::span<const double> row) const;
};

// Trained classifier with the uniform predict / score contract.
struct TrainedModel {
    ModelSpec spec;            // hyperparameter echo
    std::vector<int> classes;  // sorted raw labels
    std::size_t n_features = 0;
    std::optional<Standardizer> standardizer;
    std::variant<LogisticModel, SvmModel, NaiveBayesModel, KnnModel, TreeModel, ForestModel> impl;

    ModelKind kind() const { return static_cast<ModelKind>(impl.index()); }
};

// Deterministic under (spec, fm, seed). Throws std::invalid_argument on an
// empty matrix or non-finite features; a single-class matrix is allowed and
// yields a constant predictor.
TrainedModel train_classifier(const ModelSpec& spec, const FeatureMatrix& fm, std::uint64_t seed);

// Probability-like scores, one row per input row, n_classes columns; each row
// sums to 1 and argmax (lowest label on ties) agrees with predict.
std::vector<double> predict_scores(const TrainedModel& model, const FeatureMatrix& fm);
std::vector<double> predict_scores_row(const TrainedModel& model, std::span<const double> row);

std::vector<int> predict(const TrainedModel& model, const FeatureMatrix& fm);
int predict_row(const TrainedModel& model, std::span<const double> row);

// Versioned JSON document; round-trips preserve predictions bit-exactly.
std::string model_to_json(const TrainedModel& model, int indent = -1);
TrainedModel model_from_json(std::string_view text);

// Objective values per accepted gradient iteration (entry 0 = start) for
// every one-vs-rest logistic subproblem.
std::vector<std::vector<double>> logistic_objective_trace(const LogisticParams& hp,
                                                          const FeatureMatrix& fm,
                                                          bool standardize = false);

} // namespace serostack
