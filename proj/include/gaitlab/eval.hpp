#pragma once

#include "gaitlab/classify.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gaitlab {

enum class Partition { Train, Test };

struct LabeledDataset
{
   std::vector<LabeledVideo> items;
   std::vector<Partition> split; // parallel to items

   std::vector<LabeledVideo> part(Partition p) const;
};

// Per class (ascending label order): seeded shuffle, then the first
// floor(3n/4) items train and the remaining ceil(n/4) test.
// Throws ClassTooSmall if a present class has fewer than 4 items.
LabeledDataset stratified_split(std::vector<LabeledVideo> items, std::uint64_t seed);

// fold id per item; each class is shuffled and dealt round-robin.
std::vector<std::size_t>
stratified_fold_assignment(std::span<const GaitLabel> labels, std::size_t folds, std::uint64_t seed);

// Mean of per-fold accuracies. Throws TooManyFolds when folds exceeds the
// smallest class count, std::invalid_argument when folds < 2.
double cross_validate(Algorithm algorithm,
                      std::span<const LabeledVideo> train_part,
                      std::size_t folds,
                      const Hyperparameters& hyper,
                      std::uint64_t seed);

struct Task
{
   enum class Kind { MultiClass, BinaryVs };
   Kind kind        = Kind::MultiClass;
   GaitLabel target = GaitLabel::Normal; // BinaryVs only

   static Task multi() { return {}; }
   static Task binary(GaitLabel l) { return {Kind::BinaryVs, l}; }
   friend bool operator==(const Task&, const Task&) = default;
};

// "multi" or "binary:<Label>"; throws std::invalid_argument.
Task parse_task(std::string_view s);
std::string to_string(const Task& t);

// BinaryVs(L) keeps only rows labeled L or Normal.
LabeledDataset restrict_to_task(const LabeledDataset& data, const Task& task);
std::vector<LabeledVideo> restrict_to_task(std::span<const LabeledVideo> items, const Task& task);

struct EvalConfig
{
   std::size_t folds = 5;
   Hyperparameters hyper;
   std::uint64_t seed = 0;
};

struct EvalReport
{
   Task task;
   Algorithm algorithm = Algorithm::KNN;
   double cv_accuracy   = 0.0;
   double test_accuracy = 0.0;
   std::vector<GaitLabel> class_set;
   std::vector<std::vector<std::size_t>> confusion; // [true][predicted]
   std::size_t fold_count = 0;
   std::uint64_t seed     = 0;
   std::optional<std::string> error; // training failed; accuracies meaningless
};

struct TaskResult
{
   Task task;
   std::vector<EvalReport> reports;
   std::optional<std::size_t> best; // index into reports
};

// Highest cv + test accuracy among reports without error; ties keep the
// earlier report.
std::optional<std::size_t> select_best(std::span<const EvalReport> reports);

// One report per algorithm; a failing algorithm records its error and the
// others still run.
TaskResult run_task(const Task& task,
                    std::span<const Algorithm> algorithms,
                    const LabeledDataset& dataset,
                    const EvalConfig& config);

nlohmann::ordered_json report_to_json(std::span<const TaskResult> results, const EvalConfig& config);
std::string report_to_text(std::span<const TaskResult> results);

} // namespace gaitlab
