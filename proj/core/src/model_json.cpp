#include <json.hpp>

#include "serostack/classifiers.hpp"
#include "serostack/errors.hpp"

namespace serostack {

namespace {

using json = nlohmann::ordered_json;

json hyperparams_to_json(const ModelSpec& spec) {
    json j;
    switch (spec.kind()) {
        case ModelKind::logistic: {
            const auto& p = std::get<LogisticParams>(spec.params);
            j = {{"max_iter", p.max_iter},
                 {"l2_penalty", p.l2_penalty},
                 {"tol", p.tol},
                 {"learning_rate", p.learning_rate}};
            break;
        }
        case ModelKind::svm: {
            const auto& p = std::get<SvmParams>(spec.params);
            j = {{"c", p.c},
                 {"gamma", p.gamma ? json(*p.gamma) : json("scale")},
                 {"max_passes", p.max_passes},
                 {"kkt_tol", p.kkt_tol}};
            break;
        }
        case ModelKind::naive_bayes:
            j = {{"smoothing_alpha", std::get<NaiveBayesParams>(spec.params).smoothing_alpha}};
            break;
        case ModelKind::knn:
            j = {{"n_neighbors", std::get<KnnParams>(spec.params).n_neighbors}};
            break;
        case ModelKind::tree: {
            const auto& p = std::get<TreeParams>(spec.params);
            j = {{"max_depth", p.max_depth}, {"min_samples_leaf", p.min_samples_leaf}};
            break;
        }
        case ModelKind::forest: {
            const auto& p = std::get<ForestParams>(spec.params);
            j = {{"n_estimators", p.n_estimators},
                 {"max_depth", p.max_depth},
                 {"min_samples_leaf", p.min_samples_leaf},
                 {"feature_subsample", p.sqrt_features ? "sqrt" : "all"}};
            break;
        }
    }
    return j;
}

Hyperparams hyperparams_from_json(ModelKind kind, const json& j) {
    switch (kind) {
        case ModelKind::logistic:
            return LogisticParams{j.at("max_iter").get<int>(), j.at("l2_penalty").get<bool>(),
                                  j.at("tol").get<double>(), j.at("learning_rate").get<double>()};
        case ModelKind::svm: {
            SvmParams p;
            p.c = j.at("c").get<double>();
            if (!j.at("gamma").is_string()) p.gamma = j.at("gamma").get<double>();
            p.max_passes = j.at("max_passes").get<int>();
            p.kkt_tol = j.at("kkt_tol").get<double>();
            return p;
        }
        case ModelKind::naive_bayes:
            return NaiveBayesParams{j.at("smoothing_alpha").get<double>()};
        case ModelKind::knn:
            return KnnParams{j.at("n_neighbors").get<int>()};
        case ModelKind::tree:
            return TreeParams{j.at("max_depth").get<int>(), j.at("min_samples_leaf").get<int>()};
        case ModelKind::forest: {
            ForestParams p;
            p.n_estimators = j.at("n_estimators").get<int>();
            p.max_depth = j.at("max_depth").get<int>();
            p.min_samples_leaf = j.at("min_samples_leaf").get<int>();
            p.sqrt_features = j.at("feature_subsample").get<std::string>() == "sqrt";
            return p;
        }
    }
    throw ConfigError("unknown model kind in document");
}

json tree_to_json(const TreeModel& tree) {
    json nodes = json::array();
    for (const auto& node : tree.nodes) {
        json n = {{"feature", node.feature}};
        if (node.is_leaf()) {
            n["counts"] = node.class_counts;
        } else {
            n["threshold"] = node.threshold;
            n["left"] = node.left;
            n["right"] = node.right;
        }
        nodes.push_back(std::move(n));
    }
    return {{"nodes", std::move(nodes)}};
}

TreeModel tree_from_json(const json& j) {
    TreeModel tree;
    for (const auto& n : j.at("nodes")) {
        TreeNode node;
        node.feature = n.at("feature").get<int>();
        if (node.is_leaf()) {
            node.class_counts = n.at("counts").get<std::vector<double>>();
        } else {
            node.threshold = n.at("threshold").get<double>();
            node.left = n.at("left").get<int>();
            node.right = n.at("right").get<int>();
        }
        tree.nodes.push_back(std::move(node));
    }
    return tree;
}

struct ParamsToJson {
    json operator()(const LogisticModel& m) const {
        return {{"weights", m.weights}, {"bias", m.bias}};
    }
    json operator()(const SvmModel& m) const {
        json pairs = json::array();
        for (const auto& p : m.pairs)
            pairs.push_back({{"class_a", p.class_a},
                             {"class_b", p.class_b},
                             {"support", p.support},
                             {"coef", p.coef},
                             {"bias", p.bias}});
        return {{"gamma", m.gamma}, {"pairs", std::move(pairs)}};
    }
    json operator()(const NaiveBayesModel& m) const {
        return {{"log_prior", m.log_prior}, {"mean", m.mean}, {"var", m.var}};
    }
    json operator()(const KnnModel& m) const {
        return {{"k", m.k}, {"points", m.points}, {"point_class", m.point_class}};
    }
    json operator()(const TreeModel& m) const { return tree_to_json(m); }
    json operator()(const ForestModel& m) const {
        json trees = json::array();
        for (const auto& t : m.trees) trees.push_back(tree_to_json(t));
        return {{"trees", std::move(trees)}};
    }
};

} // namespace

std::string model_to_json(const TrainedModel& model, int indent) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = std::string(kind_name(model.kind()));
    j["hyperparams"] = hyperparams_to_json(model.spec);
    j["classes"] = model.classes;
    j["n_features"] = model.n_features;
    if (model.standardizer) {
        j["standardizer"] = {{"mean", model.standardizer->mean},
                             {"scale", model.standardizer->scale}};
    } else {
        j["standardizer"] = nullptr;
    }
    j["params"] = std::visit(ParamsToJson{}, model.impl);
    return j.dump(indent);
}

TrainedModel model_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("model document: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != 1)
            throw ConfigError("model document: unsupported schema_version");
        TrainedModel model;
        const ModelKind kind = kind_from_name(j.at("kind").get<std::string>());
        model.spec.params = hyperparams_from_json(kind, j.at("hyperparams"));
        model.classes = j.at("classes").get<std::vector<int>>();
        model.n_features = j.at("n_features").get<std::size_t>();
        if (!j.at("standardizer").is_null()) {
            Standardizer st;
            st.mean = j["standardizer"].at("mean").get<std::vector<double>>();
            st.scale = j["standardizer"].at("scale").get<std::vector<double>>();
            model.standardizer = std::move(st);
            model.spec.standardize = true;
        }
        const json& p = j.at("params");
        switch (kind) {
            case ModelKind::logistic: {
                LogisticModel m;
                m.weights = p.at("weights").get<std::vector<std::vector<double>>>();
                m.bias = p.at("bias").get<std::vector<double>>();
                model.impl = std::move(m);
                break;
            }
            case ModelKind::svm: {
                SvmModel m;
                m.gamma = p.at("gamma").get<double>();
                for (const auto& pj : p.at("pairs")) {
                    SvmPairModel pair;
                    pair.class_a = pj.at("class_a").get<std::size_t>();
                    pair.class_b = pj.at("class_b").get<std::size_t>();
                    pair.support = pj.at("support").get<std::vector<std::vector<double>>>();
                    pair.coef = pj.at("coef").get<std::vector<double>>();
                    pair.bias = pj.at("bias").get<double>();
                    m.pairs.push_back(std::move(pair));
                }
                model.impl = std::move(m);
                break;
            }
            case ModelKind::naive_bayes: {
                NaiveBayesModel m;
                m.log_prior = p.at("log_prior").get<std::vector<double>>();
                m.mean = p.at("mean").get<std::vector<std::vector<double>>>();
                m.var = p.at("var").get<std::vector<std::vector<double>>>();
                model.impl = std::move(m);
                break;
            }
            case ModelKind::knn: {
                KnnModel m;
                m.k = p.at("k").get<int>();
                m.points = p.at("points").get<std::vector<double>>();
                m.point_class = p.at("point_class").get<std::vector<std::size_t>>();
                model.impl = std::move(m);
                break;
            }
            case ModelKind::tree:
                model.impl = tree_from_json(p);
                break;
            case ModelKind::forest: {
                ForestModel m;
                for (const auto& tj : p.at("trees")) m.trees.push_back(tree_from_json(tj));
                model.impl = std::move(m);
                break;
            }
        }
        return model;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("model document: ") + e.what());
    }
}

} // namespace serostack
