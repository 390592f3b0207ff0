#include "gaitlab/eval.hpp"

#include "gaitlab/error.hpp"
#include "gaitlab/rng.hpp"
#include "gaitlab/table_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gaitlab {

namespace {

std::map<GaitLabel, std::vector<std::size_t>> indices_by_class(std::span<const GaitLabel> labels)
{
   std::map<GaitLabel, std::vector<std::size_t>> out;
   for(std::size_t i = 0; i < labels.size(); ++i) out[labels[i]].push_back(i);
   return out;
}

std::vector<GaitLabel> labels_of(std::span<const LabeledVideo> items)
{
   std::vector<GaitLabel> out;
   out.reserve(items.size());
   for(const auto& it : items) out.push_back(it.label);
   return out;
}

double accuracy_on(const TrainedModel& model, std::span<const LabeledVideo> items)
{
   if(items.empty()) return 0.0;
   std::size_t hits = 0;
   for(const auto& it : items) hits += predict(model, it.features).label == it.label;
   return double(hits) / double(items.size());
}

std::string fixed3(double v)
{
   char buf[32];
   std::snprintf(buf, sizeof(buf), "%.3f", v);
   return buf;
}

} // namespace

std::vector<LabeledVideo> LabeledDataset::part(Partition p) const
{
   std::vector<LabeledVideo> out;
   for(std::size_t i = 0; i < items.size(); ++i)
      if(split[i] == p) out.push_back(items[i]);
   return out;
}

LabeledDataset stratified_split(std::vector<LabeledVideo> items, std::uint64_t seed)
{
   {
      std::set<std::string> ids;
      for(const auto& it : items)
         if(!it.features.source_id.empty() && !ids.insert(it.features.source_id).second)
            throw Error(ErrorKind::Input, "duplicate source_id " + it.features.source_id);
   }

   const auto labels = labels_of(items);
   auto groups       = indices_by_class(labels);
   for(const auto& [label, idx] : groups)
      if(idx.size() < 4) throw ClassTooSmall(std::string(label_name(label)), idx.size());

   LabeledDataset ds;
   ds.split.assign(items.size(), Partition::Test);
   for(auto& [label, idx] : groups) {
      Rng rng(derive_seed(seed, std::uint64_t(static_cast<int>(label))));
      rng.shuffle(std::span(idx));
      const std::size_t n_train = 3 * idx.size() / 4;
      for(std::size_t i = 0; i < n_train; ++i) ds.split[idx[i]] = Partition::Train;
   }
   ds.items = std::move(items);
   return ds;
}

std::vector<std::size_t>
stratified_fold_assignment(std::span<const GaitLabel> labels, std::size_t folds, std::uint64_t seed)
{
   if(folds < 2) throw std::invalid_argument("need at least 2 folds");
   auto groups          = indices_by_class(labels);
   std::size_t smallest = labels.size();
   for(const auto& [label, idx] : groups) smallest = std::min(smallest, idx.size());
   if(folds > smallest) throw TooManyFolds(folds, smallest);

   std::vector<std::size_t> fold(labels.size(), 0);
   std::size_t offset = 0; // rotate so small classes do not all pile into fold 0
   for(auto& [label, idx] : groups) {
      Rng rng(derive_seed(seed, 0x5eed0000ULL + std::uint64_t(static_cast<int>(label))));
      rng.shuffle(std::span(idx));
      for(std::size_t i = 0; i < idx.size(); ++i) fold[idx[i]] = (offset + i) % folds;
      offset += idx.size();
   }
   return fold;
}

double cross_validate(Algorithm algorithm,
                      std::span<const LabeledVideo> train_part,
                      std::size_t folds,
                      const Hyperparameters& hyper,
                      std::uint64_t seed)
{
   const auto labels = labels_of(train_part);
   const auto fold   = stratified_fold_assignment(labels, folds, seed);

   double total = 0.0;
   for(std::size_t f = 0; f < folds; ++f) {
      std::vector<LabeledVideo> fit;
      std::vector<LabeledVideo> held;
      for(std::size_t i = 0; i < train_part.size(); ++i) (fold[i] == f ? held : fit).push_back(train_part[i]);
      const auto model = train(algorithm, fit, hyper, derive_seed(seed, 100 + f));
      total += accuracy_on(model, held);
   }
   return total / double(folds);
}

Task parse_task(std::string_view s)
{
   if(s == "multi") return Task::multi();
   constexpr std::string_view prefix = "binary:";
   if(s.starts_with(prefix)) {
      const auto l = label_from_name(s.substr(prefix.size()));
      if(!l) throw std::invalid_argument("unknown label in task: " + std::string(s));
      if(*l == GaitLabel::Normal) throw std::invalid_argument("binary task needs an abnormal label");
      return Task::binary(*l);
   }
   throw std::invalid_argument("unknown task: " + std::string(s));
}

std::string to_string(const Task& t)
{
   if(t.kind == Task::Kind::MultiClass) return "multi";
   return "binary:" + std::string(label_name(t.target));
}

std::vector<LabeledVideo> restrict_to_task(std::span<const LabeledVideo> items, const Task& task)
{
   std::vector<LabeledVideo> out;
   for(const auto& it : items)
      if(task.kind == Task::Kind::MultiClass || it.label == task.target || it.label == GaitLabel::Normal)
         out.push_back(it);
   return out;
}

LabeledDataset restrict_to_task(const LabeledDataset& data, const Task& task)
{
   if(task.kind == Task::Kind::MultiClass) return data;
   LabeledDataset out;
   for(std::size_t i = 0; i < data.items.size(); ++i) {
      const auto l = data.items[i].label;
      if(l == task.target || l == GaitLabel::Normal) {
         out.items.push_back(data.items[i]);
         out.split.push_back(data.split[i]);
      }
   }
   return out;
}

std::optional<std::size_t> select_best(std::span<const EvalReport> reports)
{
   std::optional<std::size_t> best;
   for(std::size_t i = 0; i < reports.size(); ++i) {
      if(reports[i].error) continue;
      const double s = reports[i].cv_accuracy + reports[i].test_accuracy;
      if(!best || s > reports[*best].cv_accuracy + reports[*best].test_accuracy) best = i;
   }
   return best;
}

TaskResult run_task(const Task& task,
                    std::span<const Algorithm> algorithms,
                    const LabeledDataset& dataset,
                    const EvalConfig& config)
{
   const auto data  = restrict_to_task(dataset, task);
   const auto train_part = data.part(Partition::Train);
   const auto test_part  = data.part(Partition::Test);

   std::vector<GaitLabel> class_set;
   for(const auto& it : data.items)
      if(std::find(class_set.begin(), class_set.end(), it.label) == class_set.end()) class_set.push_back(it.label);
   std::sort(class_set.begin(), class_set.end());
   const auto pos = [&](GaitLabel l) {
      return std::size_t(std::lower_bound(class_set.begin(), class_set.end(), l) - class_set.begin());
   };

   TaskResult result;
   result.task = task;
   for(const auto algo : algorithms) {
      EvalReport r;
      r.task       = task;
      r.algorithm  = algo;
      r.class_set  = class_set;
      r.fold_count = config.folds;
      r.seed       = config.seed;
      r.confusion.assign(class_set.size(), std::vector<std::size_t>(class_set.size(), 0));
      try {
         r.cv_accuracy = cross_validate(algo, train_part, config.folds, config.hyper, config.seed);
         const auto model = train(algo, train_part, config.hyper, derive_seed(config.seed, 7));
         std::size_t hits = 0;
         for(const auto& it : test_part) {
            const auto p = predict(model, it.features);
            ++r.confusion[pos(it.label)][pos(p.label)];
            hits += p.label == it.label;
         }
         r.test_accuracy = test_part.empty() ? 0.0 : double(hits) / double(test_part.size());
      } catch(const std::exception& e) {
         r.error         = e.what();
         r.cv_accuracy   = 0.0;
         r.test_accuracy = 0.0;
      }
      result.reports.push_back(std::move(r));
   }
   result.best = select_best(result.reports);
   return result;
}

nlohmann::ordered_json report_to_json(std::span<const TaskResult> results, const EvalConfig& config)
{
   using json = nlohmann::ordered_json;
   json tasks = json::array();
   for(const auto& tr : results) {
      json reports = json::array();
      for(const auto& r : tr.reports) {
         json classes = json::array();
         for(const auto l : r.class_set) classes.push_back(std::string(label_name(l)));
         json entry;
         entry["algorithm"]     = std::string(algorithm_name(r.algorithm));
         entry["cv_accuracy"]   = r.cv_accuracy;
         entry["test_accuracy"] = r.test_accuracy;
         entry["fold_count"]    = r.fold_count;
         entry["seed"]          = r.seed;
         entry["class_set"]     = classes;
         entry["confusion"]     = r.confusion;
         if(r.error) entry["error"] = *r.error;
         reports.push_back(std::move(entry));
      }
      json t;
      t["task"]    = to_string(tr.task);
      t["reports"] = std::move(reports);
      if(tr.best)
         t["best"] = std::string(algorithm_name(tr.reports[*tr.best].algorithm));
      else
         t["best"] = nullptr;
      tasks.push_back(std::move(t));
   }
   json doc;
   doc["format"] = "gaitlab-eval";
   doc["version"] = 1;
   doc["folds"]  = config.folds;
   doc["seed"]   = config.seed;
   doc["tasks"]  = std::move(tasks);
   return doc;
}

std::string report_to_text(std::span<const TaskResult> results)
{
   std::string out;
   for(const auto& tr : results) {
      out += "task: " + to_string(tr.task) + "\n";
      out += "algorithm   cv      test\n";
      for(std::size_t i = 0; i < tr.reports.size(); ++i) {
         const auto& r = tr.reports[i];
         std::string name(algorithm_name(r.algorithm));
         name.resize(10, ' ');
         out += name + "  ";
         if(r.error) {
            out += "error: " + *r.error + "\n";
            continue;
         }
         out += fixed3(r.cv_accuracy) + "   " + fixed3(r.test_accuracy);
         if(tr.best && *tr.best == i) out += "  *best";
         out += "\n";
      }
      if(tr.best) {
         const auto& r = tr.reports[*tr.best];
         out += "confusion (" + std::string(algorithm_name(r.algorithm)) + ", rows = true)\n";
         for(std::size_t a = 0; a < r.class_set.size(); ++a) {
            std::string name(label_name(r.class_set[a]));
            name.resize(11, ' ');
            out += "  " + name;
            for(const auto c : r.confusion[a]) {
               char buf[16];
               std::snprintf(buf, sizeof(buf), "%5zu", c);
               out += buf;
            }
            out += "\n";
         }
      }
      out += "\n";
   }
   return out;
}

} // namespace gaitlab
