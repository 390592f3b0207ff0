// gaitlab: keypoints -> gait features -> classifiers.
//
//   gaitlab synth   --seed N --out corpus/
//   gaitlab extract --in corpus/ --out features.csv
//   gaitlab eval    --features features.csv --algos all --task multi --report report.json
//   gaitlab train   --features features.csv --algo forest --out model.gaitmodel.json
//   gaitlab predict --model model.gaitmodel.json --features unlabeled.csv --out predictions.csv

#include "gaitlab/classify.hpp"
#include "gaitlab/error.hpp"
#include "gaitlab/eval.hpp"
#include "gaitlab/ingest.hpp"
#include "gaitlab/synth.hpp"
#include "gaitlab/table_io.hpp"
#include "gaitlab/video_features.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using namespace gaitlab;

namespace {

enum Exit : int { k_ok = 0, k_failure = 1, k_input = 2, k_insufficient = 3, k_schema = 4 };

int exit_code(const Error& e)
{
   switch(e.kind()) {
   case ErrorKind::Input: return k_input;
   case ErrorKind::InsufficientData: return k_insufficient;
   case ErrorKind::SchemaMismatch: return k_schema;
   case ErrorKind::Geometry: return k_input;
   }
   return k_failure;
}

std::map<GaitLabel, std::size_t> parse_counts(const std::string& list)
{
   std::map<GaitLabel, std::size_t> counts;
   std::size_t start = 0;
   while(start <= list.size()) {
      const auto comma = list.find(',', start);
      const auto item  = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto eq    = item.find('=');
      if(eq == std::string::npos) throw std::invalid_argument("bad --counts entry: " + item);
      const auto label = label_from_name(item.substr(0, eq));
      if(!label) throw std::invalid_argument("unknown label in --counts: " + item.substr(0, eq));
      const long n = std::stol(item.substr(eq + 1));
      if(n < 1) throw std::invalid_argument("--counts entries must be >= 1");
      counts[*label] = std::size_t(n);
      if(comma == std::string::npos) break;
      start = comma + 1;
   }
   return counts;
}

std::vector<Algorithm> parse_algorithms(const std::string& list)
{
   if(list == "all") return {k_all_algorithms.begin(), k_all_algorithms.end()};
   std::vector<Algorithm> out;
   std::size_t start = 0;
   while(true) {
      const auto comma = list.find(',', start);
      const auto name  = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto a     = algorithm_from_name(name);
      if(!a) throw std::invalid_argument("unknown algorithm: " + name);
      out.push_back(*a);
      if(comma == std::string::npos) break;
      start = comma + 1;
   }
   return out;
}

void add_hyper_options(CLI::App& cmd, Hyperparameters& h)
{
   cmd.add_option("--k", h.k, "kNN neighbours")->capture_default_str();
   cmd.add_option("--max-depth", h.max_depth, "tree depth limit, 0 = unlimited")->capture_default_str();
   cmd.add_option("--min-leaf", h.min_samples_leaf, "minimum samples per leaf")->capture_default_str();
   cmd.add_option("--trees", h.n_trees, "forest size")->capture_default_str();
   cmd.add_option("--max-features", h.max_features, "features per split, 0 = sqrt(d)")->capture_default_str();
   cmd.add_option("--var-floor", h.var_floor, "naive Bayes variance floor")->capture_default_str();
   cmd.add_option("--lr", h.learning_rate, "logreg learning rate")->capture_default_str();
   cmd.add_option("--epochs", h.epochs, "logreg epochs")->capture_default_str();
   cmd.add_option("--batch", h.batch_size, "logreg minibatch size")->capture_default_str();
   cmd.add_option("--l2", h.l2, "logreg L2 penalty")->capture_default_str();
}

// -------------------------------------------------------------- commands

struct ExtractArgs
{
   std::string in;
   std::string out;
   std::string manifest;
   std::string frames_dir;
   double min_conf       = k_default_min_confidence;
   std::size_t min_frames = k_default_min_frames;
   std::string norm_scope = "frame";
   std::string std_mode   = "population";
};

int run_extract(const ExtractArgs& a)
{
   FeatureConfig config{parse_norm_scope(a.norm_scope), parse_std_mode(a.std_mode)};

   std::vector<fs::path> files;
   fs::path manifest_path = a.manifest;
   if(fs::is_directory(a.in)) {
      for(const auto& e : fs::directory_iterator(a.in))
         if(e.is_regular_file() && e.path().filename().string().ends_with(".kp.jsonl")) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      if(manifest_path.empty() && fs::exists(fs::path(a.in) / "manifest.csv")) manifest_path = fs::path(a.in) / "manifest.csv";
   } else {
      files.push_back(a.in);
   }
   if(files.empty()) throw Error(ErrorKind::Input, "no .kp.jsonl files under " + a.in);

   std::map<std::string, GaitLabel> labels;
   if(!manifest_path.empty())
      for(const auto& e : read_manifest(read_text_file(manifest_path))) labels[e.source_id] = e.label;

   std::vector<VideoRecord> rows;
   for(const auto& f : files) {
      const auto seq = read_keypoint_file(f);
      try {
         const auto [valid, report] = filter_valid(seq, a.min_conf, a.min_frames);
         auto video                 = extract_video(valid, config);
         if(report.dropped_frames > 0 || video.frames_failed > 0)
            std::cerr << seq.source_id << ": dropped " << report.dropped_frames << " low-confidence and "
                      << video.frames_failed << " degenerate frame(s)\n";
         if(!a.frames_dir.empty())
            write_text_file(fs::path(a.frames_dir) / (seq.source_id + ".frames.csv"), frame_features_csv(video.frames));
         VideoRecord r{std::move(video.features), std::nullopt};
         if(const auto it = labels.find(seq.source_id); it != labels.end()) r.label = it->second;
         rows.push_back(std::move(r));
      } catch(const Error& e) {
         if(e.kind() != ErrorKind::InsufficientData) throw;
         std::cerr << "skipping " << seq.source_id << ": " << e.what() << "\n";
      }
   }
   if(rows.empty()) throw InsufficientData("no usable videos");
   write_video_csv_file(a.out, rows, !labels.empty());
   std::cerr << "wrote " << rows.size() << " video(s) to " << a.out << "\n";
   return k_ok;
}

int run_synth(const std::string& counts_arg, std::uint64_t seed, std::size_t frames, const std::string& out)
{
   const auto counts = counts_arg.empty() ? reference_counts() : parse_counts(counts_arg);
   fs::create_directories(out);
   std::vector<ManifestEntry> manifest;
   for(const auto& item : generate_corpus(counts, seed, frames)) {
      write_keypoint_file(fs::path(out) / (item.sequence.source_id + ".kp.jsonl"), item.sequence);
      manifest.push_back({item.sequence.source_id, item.label, item.seed});
   }
   write_text_file(fs::path(out) / "manifest.csv", write_manifest(manifest));
   std::cerr << "wrote " << manifest.size() << " sequence(s) to " << out << "\n";
   return k_ok;
}

int run_train(const std::string& features, const std::string& algo, const std::string& task_arg,
              std::uint64_t seed, const Hyperparameters& hyper, const std::string& out)
{
   const auto a = algorithm_from_name(algo);
   if(!a) throw std::invalid_argument("unknown algorithm: " + algo);
   const auto task  = parse_task(task_arg);
   const auto rows  = read_video_csv_file(features);
   const auto items = restrict_to_task(labeled_only(rows), task);
   const auto model = train(*a, items, hyper, seed);
   save_model(out, model);
   std::cerr << "trained " << algo << " on " << items.size() << " video(s)\n";
   return k_ok;
}

int run_eval(const std::string& features, const std::string& algos, const std::string& task_arg,
             std::size_t folds, std::uint64_t seed, const Hyperparameters& hyper,
             const std::string& report, const std::string& text)
{
   const auto algorithms = parse_algorithms(algos);
   std::vector<Task> tasks;
   if(task_arg == "all") {
      tasks.push_back(Task::multi());
      for(const auto l : all_labels())
         if(l != GaitLabel::Normal) tasks.push_back(Task::binary(l));
   } else {
      tasks.push_back(parse_task(task_arg));
   }

   const auto rows = read_video_csv_file(features);
   const auto data = stratified_split(labeled_only(rows), seed);
   EvalConfig config{folds, hyper, seed};

   std::vector<TaskResult> results;
   for(const auto& t : tasks) results.push_back(run_task(t, algorithms, data, config));

   write_text_file(report, report_to_json(results, config).dump(2) + "\n");
   const auto table = report_to_text(results);
   if(!text.empty()) write_text_file(text, table);
   std::cout << table;
   const bool any = std::any_of(results.begin(), results.end(), [](const TaskResult& r) { return r.best.has_value(); });
   return any ? k_ok : k_insufficient;
}

int run_predict(const std::string& model_path, const std::string& features, const std::string& out)
{
   const auto model = load_model(model_path);
   const auto rows  = read_video_csv_file(features);
   std::vector<std::string> ids;
   std::vector<Prediction> preds;
   for(const auto& r : rows) {
      ids.push_back(r.features.source_id);
      preds.push_back(predict(model, r.features));
   }
   write_text_file(out, write_predictions_csv(model, ids, preds));
   return k_ok;
}

} // namespace

int main(int argc, char** argv)
{
   CLI::App app{"gait feature extraction and abnormality classification"};
   app.require_subcommand(1);

   ExtractArgs ex;
   auto* extract = app.add_subcommand("extract", "keypoint files -> video feature CSV");
   extract->add_option("--in", ex.in, "directory or .kp.jsonl file")->required();
   extract->add_option("--out", ex.out, "output CSV")->required();
   extract->add_option("--manifest", ex.manifest, "source_id,label,seed file (default <dir>/manifest.csv)");
   extract->add_option("--frames-dir", ex.frames_dir, "also dump per-frame features here");
   extract->add_option("--min-conf", ex.min_conf)->capture_default_str();
   extract->add_option("--min-frames", ex.min_frames)->capture_default_str();
   extract->add_option("--norm-scope", ex.norm_scope)->check(CLI::IsMember({"frame", "video"}))->capture_default_str();
   extract->add_option("--std", ex.std_mode)->check(CLI::IsMember({"population", "sample"}))->capture_default_str();

   std::string counts;
   std::uint64_t seed = 0;
   std::size_t frames = 90;
   std::string out;
   auto* synth = app.add_subcommand("synth", "generate a synthetic labeled corpus");
   synth->add_option("--counts", counts, "Label=N,... (default: reference counts)");
   synth->add_option("--seed", seed)->capture_default_str();
   synth->add_option("--frames", frames, "frames per sequence")->capture_default_str();
   synth->add_option("--out", out)->required();

   std::string feats;
   std::string algo;
   std::string task = "multi";
   Hyperparameters hyper;
   auto* trainc = app.add_subcommand("train", "train one model");
   trainc->add_option("--features", feats)->required();
   trainc->add_option("--algo", algo)->required()->check(CLI::IsMember({"knn", "tree", "forest", "gnb", "logreg"}));
   trainc->add_option("--task", task, "multi | binary:<Label>")->capture_default_str();
   trainc->add_option("--seed", seed)->capture_default_str();
   trainc->add_option("--out", out)->required();
   add_hyper_options(*trainc, hyper);

   std::string algos = "all";
   std::size_t folds = 5;
   std::string report;
   std::string text;
   auto* evalc = app.add_subcommand("eval", "split, cross-validate and test");
   evalc->add_option("--features", feats)->required();
   evalc->add_option("--algos", algos, "all or comma list")->capture_default_str();
   evalc->add_option("--task", task, "multi | binary:<Label> | all")->capture_default_str();
   evalc->add_option("--folds", folds)->capture_default_str();
   evalc->add_option("--seed", seed)->capture_default_str();
   evalc->add_option("--report", report, "JSON report path")->required();
   evalc->add_option("--text", text, "also write the text table here");
   add_hyper_options(*evalc, hyper);

   std::string model;
   auto* predictc = app.add_subcommand("predict", "apply a trained model");
   predictc->add_option("--model", model)->required();
   predictc->add_option("--features", feats)->required();
   predictc->add_option("--out", out)->required();

   try {
      app.parse(argc, argv);
   } catch(const CLI::ParseError& e) {
      const int rc = app.exit(e);
      return rc == 0 ? k_ok : k_input;
   }

   try {
      if(*extract) return run_extract(ex);
      if(*synth) return run_synth(counts, seed, frames, out);
      if(*trainc) return run_train(feats, algo, task, seed, hyper, out);
      if(*evalc) return run_eval(feats, algos, task, folds, seed, hyper, report, text);
      if(*predictc) return run_predict(model, feats, out);
   } catch(const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code(e);
   } catch(const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return k_input;
   } catch(const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return k_failure;
   }
   return k_failure;
}
