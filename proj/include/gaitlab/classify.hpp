#pragma once

#include "gaitlab/pose.hpp"
#include "gaitlab/video_features.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gaitlab {

enum class Algorithm { KNN, DecisionTree, RandomForest, GaussianNB, LogRegSGD };

inline constexpr std::array<Algorithm, 5> k_all_algorithms = {
    Algorithm::KNN, Algorithm::DecisionTree, Algorithm::RandomForest,
    Algorithm::GaussianNB, Algorithm::LogRegSGD};

// "knn", "tree", "forest", "gnb", "logreg"
std::string_view algorithm_name(Algorithm a) noexcept;
std::optional<Algorithm> algorithm_from_name(std::string_view name) noexcept;

struct Hyperparameters
{
   // kNN
   std::size_t k = 5;
   // tree / forest; max_depth 0 means unlimited
   std::size_t max_depth        = 12;
   std::size_t min_samples_leaf = 2;
   std::size_t n_trees          = 100;
   std::size_t max_features     = 0; // 0 means floor(sqrt(d)), forest only
   bool bootstrap               = true;
   // gaussian naive bayes
   double var_floor = 1e-9;
   // logistic regression
   double learning_rate   = 0.01;
   std::size_t epochs     = 200;
   std::size_t batch_size = 16;
   double l2              = 1e-4;

   friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;
};

struct LabeledVideo
{
   VideoFeatures features;
   GaitLabel label = GaitLabel::Normal;
};

using Matrix = std::vector<std::vector<double>>;

// z-score per dimension. Constant dimensions get scale 1.
struct Standardizer
{
   std::vector<double> mean;
   std::vector<double> scale;

   static Standardizer fit(const Matrix& rows);
   std::vector<double> transform(std::span<const double> x) const;
};

struct TreeNode
{
   int feature      = -1; // -1 for a leaf
   double threshold = 0.0; // go left when x[feature] <= threshold
   int left         = -1;
   int right        = -1;
   std::vector<double> class_freq; // leaf only, indexed by class_set position
};

struct DecisionTree
{
   std::vector<TreeNode> nodes; // nodes[0] is the root

   const TreeNode& leaf_for(std::span<const double> x) const;
};

struct KnnParams
{
   Standardizer scaler;
   Matrix points; // standardized training rows
   std::vector<int> labels; // class_set positions
};

struct TreeParams
{
   DecisionTree tree;
};

struct ForestParams
{
   std::vector<DecisionTree> trees;
   std::vector<std::uint64_t> tree_seeds;
};

struct GnbParams
{
   Matrix means;     // class x dim
   Matrix variances; // class x dim, floored
   std::vector<double> priors;
};

struct LogRegParams
{
   Standardizer scaler;
   Matrix weights; // class x dim
   std::vector<double> bias;
};

using ModelParameters = std::variant<KnnParams, TreeParams, ForestParams, GnbParams, LogRegParams>;

struct TrainedModel
{
   Algorithm algorithm = Algorithm::KNN;
   Hyperparameters hyper;
   std::vector<GaitLabel> class_set; // ascending label order
   std::string schema_fingerprint;
   std::size_t n_features = 0;
   std::uint64_t seed     = 0;
   ModelParameters parameters;
};

struct Prediction
{
   GaitLabel label = GaitLabel::Normal;
   std::vector<double> scores; // aligned with class_set
};

// Requires >= 2 classes with >= 2 examples each and one shared fingerprint.
// Throws InsufficientData, SchemaMismatch.
TrainedModel train(Algorithm algorithm,
                   std::span<const LabeledVideo> data,
                   const Hyperparameters& hyper = {},
                   std::uint64_t seed          = 0);

// Throws SchemaMismatch if the fingerprints differ.
Prediction predict(const TrainedModel& model, const VideoFeatures& features);

// No fingerprint check; x must have model.n_features entries.
Prediction predict_values(const TrainedModel& model, std::span<const double> x);

// Label chosen by a single tree of a forest model.
GaitLabel predict_tree(const TrainedModel& forest, std::size_t tree, std::span<const double> x);

// Exhaustive scan kNN. Distance ties go to the lower training index, vote
// ties to the earlier class in ascending label order.
GaitLabel knn_brute_force_oracle(std::span<const LabeledVideo> train,
                                 const VideoFeatures& query,
                                 std::size_t k,
                                 bool standardize = true);

// Mean softmax cross-entropy + (l2/2)|W|^2 and its gradient.
struct LogRegGradient
{
   double loss = 0.0;
   Matrix d_weights;
   std::vector<double> d_bias;
};

LogRegGradient logreg_loss_gradient(const Matrix& weights,
                                    std::span<const double> bias,
                                    const Matrix& rows,
                                    std::span<const int> labels,
                                    double l2);

// Versioned JSON (.gaitmodel.json).
inline constexpr int k_model_format_version = 1;
nlohmann::json model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const nlohmann::json& doc); // throws Error(Input)
std::string serialize_model(const TrainedModel& model);
void save_model(const std::filesystem::path& path, const TrainedModel& model);
TrainedModel load_model(const std::filesystem::path& path);

} // namespace gaitlab
