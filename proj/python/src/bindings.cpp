#include "gaitlab/classify.hpp"
#include "gaitlab/error.hpp"
#include "gaitlab/eval.hpp"
#include "gaitlab/frame_features.hpp"
#include "gaitlab/ingest.hpp"
#include "gaitlab/synth.hpp"
#include "gaitlab/table_io.hpp"
#include "gaitlab/video_features.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <stdexcept>

namespace py = pybind11;
using namespace gaitlab;

namespace {

GaitLabel to_label(const std::string& name)
{
   const auto l = label_from_name(name);
   if(!l) throw std::invalid_argument("unknown label: " + name);
   return *l;
}

Algorithm to_algorithm(const std::string& name)
{
   const auto a = algorithm_from_name(name);
   if(!a) throw std::invalid_argument("unknown algorithm: " + name);
   return *a;
}

FeatureConfig to_config(const std::string& norm_scope, const std::string& std_mode)
{
   return {parse_norm_scope(norm_scope), parse_std_mode(std_mode)};
}

std::vector<LabeledVideo> zip_labeled(const std::vector<VideoFeatures>& features, const std::vector<std::string>& labels)
{
   if(features.size() != labels.size()) throw std::invalid_argument("features and labels differ in length");
   std::vector<LabeledVideo> out;
   out.reserve(features.size());
   for(std::size_t i = 0; i < features.size(); ++i) out.push_back({features[i], to_label(labels[i])});
   return out;
}

PoseFrame frame_from_points(const std::vector<std::pair<double, double>>& points)
{
   if(points.size() != k_n_central)
      throw std::invalid_argument("expected 14 (x, y) points in keypoint order, got " + std::to_string(points.size()));
   PoseFrame f;
   for(std::size_t i = 0; i < points.size(); ++i) f.keypoints[i] = Keypoint{points[i].first, points[i].second, 1.0};
   return f;
}

std::vector<std::string> label_names(const std::vector<GaitLabel>& labels)
{
   std::vector<std::string> out;
   for(const auto l : labels) out.emplace_back(label_name(l));
   return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
   m.doc() = "gait feature extraction and abnormality classification";

   static py::exception<Error> base(m, "GaitlabError", PyExc_RuntimeError);
   static py::exception<Error> input(m, "InputError", base.ptr());
   static py::exception<Error> insufficient(m, "InsufficientDataError", base.ptr());
   static py::exception<Error> schema(m, "SchemaMismatchError", base.ptr());
   static py::exception<Error> geometry(m, "GeometryError", base.ptr());
   py::register_exception_translator([](std::exception_ptr p) {
      try {
         if(p) std::rethrow_exception(p);
      } catch(const Error& e) {
         switch(e.kind()) {
         case ErrorKind::Input: py::set_error(input, e.what()); return;
         case ErrorKind::InsufficientData: py::set_error(insufficient, e.what()); return;
         case ErrorKind::SchemaMismatch: py::set_error(schema, e.what()); return;
         case ErrorKind::Geometry: py::set_error(geometry, e.what()); return;
         }
         py::set_error(base, e.what());
      }
   });

   m.attr("FRAME_DIMS") = k_frame_dims;
   m.attr("VIDEO_DIMS") = k_video_dims;
   m.def("keypoint_names", [] {
      std::vector<std::string> out;
      for(const auto id : all_keypoints()) out.emplace_back(keypoint_name(id));
      return out;
   });
   m.def("labels", [] { return label_names({all_labels().begin(), all_labels().end()}); });
   m.def("algorithms", [] {
      std::vector<std::string> out;
      for(const auto a : k_all_algorithms) out.emplace_back(algorithm_name(a));
      return out;
   });
   m.def("frame_feature_names", &frame_feature_names);
   m.def("video_feature_names", &video_feature_names);
   m.def("schema_fingerprint",
         [](const std::string& norm_scope, const std::string& std_mode) {
            return schema_fingerprint(to_config(norm_scope, std_mode));
         },
         py::arg("norm_scope") = "frame", py::arg("std") = "population");

   py::class_<PoseSequence>(m, "PoseSequence")
       .def_readwrite("source_id", &PoseSequence::source_id)
       .def("__len__", [](const PoseSequence& s) { return s.frames.size(); })
       .def("frame_indices",
            [](const PoseSequence& s) {
               std::vector<std::int64_t> out;
               for(const auto& f : s.frames) out.push_back(f.frame_index);
               return out;
            })
       .def("to_jsonl", &serialize_keypoint_jsonl)
       .def("__repr__", [](const PoseSequence& s) {
          return "<PoseSequence '" + s.source_id + "' with " + std::to_string(s.frames.size()) + " frames>";
       });

   m.def("parse_keypoints", &parse_keypoint_jsonl, py::arg("text"), py::arg("source_id") = "");
   m.def("read_keypoints", &read_keypoint_file, py::arg("path"));
   m.def("write_keypoints", &write_keypoint_file, py::arg("path"), py::arg("sequence"));
   m.def("filter_valid",
         [](const PoseSequence& seq, double min_confidence, std::size_t min_frames) {
            auto [valid, report] = filter_valid(seq, min_confidence, min_frames);
            py::dict r;
            r["total_frames"]   = report.total_frames;
            r["valid_frames"]   = report.valid_frames;
            r["dropped_frames"] = report.dropped_frames;
            return py::make_tuple(std::move(valid), r);
         },
         py::arg("sequence"), py::arg("min_confidence") = k_default_min_confidence,
         py::arg("min_frames") = k_default_min_frames);

   m.def("frame_features",
         [](const std::vector<std::pair<double, double>>& points) {
            const auto a = extract_frame_features(frame_from_points(points)).to_array();
            return std::vector<double>(a.begin(), a.end());
         },
         py::arg("points"), "113 features of one frame given 14 (x, y) points in keypoint order.");

   py::class_<VideoFeatures>(m, "VideoFeatures")
       .def_readonly("source_id", &VideoFeatures::source_id)
       .def_readonly("schema_fingerprint", &VideoFeatures::schema_fingerprint)
       .def_readonly("n_frames_used", &VideoFeatures::n_frames_used)
       .def_property_readonly("mean", [](const VideoFeatures& v) { return std::vector<double>(v.mean.begin(), v.mean.end()); })
       .def_property_readonly("std", [](const VideoFeatures& v) { return std::vector<double>(v.std.begin(), v.std.end()); })
       .def("values",
            [](const VideoFeatures& v) {
               const auto a = v.values();
               return std::vector<double>(a.begin(), a.end());
            })
       .def("__repr__", [](const VideoFeatures& v) { return "<VideoFeatures '" + v.source_id + "'>"; });

   m.def("extract_video",
         [](const PoseSequence& seq, const std::string& norm_scope, const std::string& std_mode) {
            return extract_video(seq, to_config(norm_scope, std_mode)).features;
         },
         py::arg("sequence"), py::arg("norm_scope") = "frame", py::arg("std") = "population");

   m.def("synthesize",
         [](const std::string& label, std::uint64_t seed, std::size_t n_frames) {
            auto p     = default_params(to_label(label), seed);
            p.n_frames = n_frames;
            return generate(p);
         },
         py::arg("label"), py::arg("seed") = 0, py::arg("n_frames") = 90);
   m.def("generate_corpus",
         [](const std::optional<std::map<std::string, std::size_t>>& counts, std::uint64_t seed, std::size_t n_frames) {
            std::map<GaitLabel, std::size_t> c = reference_counts();
            if(counts) {
               c.clear();
               for(const auto& [name, n] : *counts) c[to_label(name)] = n;
            }
            py::list out;
            for(auto& item : generate_corpus(c, seed, n_frames))
               out.append(py::make_tuple(std::move(item.sequence), std::string(label_name(item.label))));
            return out;
         },
         py::arg("counts") = py::none(), py::arg("seed") = 0, py::arg("n_frames") = 90);

   m.def("read_video_csv",
         [](const std::filesystem::path& path) {
            py::list out;
            for(auto& r : read_video_csv_file(path)) {
               py::object label = py::none();
               if(r.label) label = py::str(std::string(label_name(*r.label)));
               out.append(py::make_tuple(std::move(r.features), label));
            }
            return out;
         },
         py::arg("path"));
   m.def("write_video_csv",
         [](const std::filesystem::path& path, const std::vector<VideoFeatures>& features,
            const std::optional<std::vector<std::string>>& labels) {
            std::vector<VideoRecord> rows;
            for(std::size_t i = 0; i < features.size(); ++i) {
               VideoRecord r{features[i], std::nullopt};
               if(labels) r.label = to_label(labels->at(i));
               rows.push_back(std::move(r));
            }
            write_video_csv_file(path, rows, labels.has_value());
         },
         py::arg("path"), py::arg("features"), py::arg("labels") = py::none());

   py::class_<Hyperparameters>(m, "Hyperparameters")
       .def(py::init<>())
       .def_readwrite("k", &Hyperparameters::k)
       .def_readwrite("max_depth", &Hyperparameters::max_depth)
       .def_readwrite("min_samples_leaf", &Hyperparameters::min_samples_leaf)
       .def_readwrite("n_trees", &Hyperparameters::n_trees)
       .def_readwrite("max_features", &Hyperparameters::max_features)
       .def_readwrite("bootstrap", &Hyperparameters::bootstrap)
       .def_readwrite("var_floor", &Hyperparameters::var_floor)
       .def_readwrite("learning_rate", &Hyperparameters::learning_rate)
       .def_readwrite("epochs", &Hyperparameters::epochs)
       .def_readwrite("batch_size", &Hyperparameters::batch_size)
       .def_readwrite("l2", &Hyperparameters::l2);

   py::class_<TrainedModel>(m, "Model")
       .def_property_readonly("algorithm", [](const TrainedModel& t) { return std::string(algorithm_name(t.algorithm)); })
       .def_property_readonly("classes", [](const TrainedModel& t) { return label_names(t.class_set); })
       .def_readonly("schema_fingerprint", &TrainedModel::schema_fingerprint)
       .def("predict",
            [](const TrainedModel& t, const VideoFeatures& f) {
               const auto p = predict(t, f);
               py::dict scores;
               for(std::size_t i = 0; i < t.class_set.size(); ++i)
                  scores[py::str(std::string(label_name(t.class_set[i])))] = p.scores[i];
               return py::make_tuple(std::string(label_name(p.label)), scores);
            },
            py::arg("features"), "(label, {label: score}) for one video.")
       .def("save", [](const TrainedModel& t, const std::filesystem::path& path) { save_model(path, t); }, py::arg("path"))
       .def("to_json", &serialize_model);

   m.def("train",
         [](const std::string& algorithm, const std::vector<VideoFeatures>& features,
            const std::vector<std::string>& labels, const Hyperparameters& hyper, std::uint64_t seed) {
            return train(to_algorithm(algorithm), zip_labeled(features, labels), hyper, seed);
         },
         py::arg("algorithm"), py::arg("features"), py::arg("labels"), py::arg("hyper") = Hyperparameters{},
         py::arg("seed") = 0);
   m.def("load_model", &load_model, py::arg("path"));

   m.def("evaluate_json",
         [](const std::vector<VideoFeatures>& features, const std::vector<std::string>& labels,
            const std::vector<std::string>& algorithms, const std::vector<std::string>& tasks, std::size_t folds,
            std::uint64_t seed, const Hyperparameters& hyper) {
            std::vector<Algorithm> algos;
            for(const auto& a : algorithms) algos.push_back(to_algorithm(a));
            const EvalConfig config{folds, hyper, seed};
            const auto data = stratified_split(zip_labeled(features, labels), seed);
            std::vector<TaskResult> results;
            for(const auto& t : tasks) results.push_back(run_task(parse_task(t), algos, data, config));
            return report_to_json(results, config).dump(2);
         },
         py::arg("features"), py::arg("labels"), py::arg("algorithms"), py::arg("tasks"), py::arg("folds") = 5,
         py::arg("seed") = 0, py::arg("hyper") = Hyperparameters{});
}
