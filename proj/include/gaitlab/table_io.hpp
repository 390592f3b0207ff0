#pragma once

#include "gaitlab/classify.hpp"
#include "gaitlab/pose.hpp"
#include "gaitlab/video_features.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaitlab {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

struct VideoRecord
{
   VideoFeatures features;
   std::optional<GaitLabel> label;
};

// Video-feature CSV:
//   # schema=<fingerprint>
//   source_id,label,mu1..mu113,sd1..sd113
// The label column is written only when with_labels is set.
std::string write_video_csv(std::span<const VideoRecord> rows, bool with_labels = true);
void write_video_csv_file(const std::filesystem::path& path,
                          std::span<const VideoRecord> rows,
                          bool with_labels = true);

// Accepts files with or without the label column and the schema comment
// (missing comment -> default fingerprint). Throws MalformedLine.
std::vector<VideoRecord> read_video_csv(std::string_view text);
std::vector<VideoRecord> read_video_csv_file(const std::filesystem::path& path);

// Rows with a label, as training data. Unlabeled rows are skipped.
std::vector<LabeledVideo> labeled_only(std::span<const VideoRecord> rows);

// manifest.csv: source_id,label,seed
struct ManifestEntry
{
   std::string source_id;
   GaitLabel label;
   std::uint64_t seed = 0;
};

std::string write_manifest(std::span<const ManifestEntry> entries);
std::vector<ManifestEntry> read_manifest(std::string_view text);

// source_id,predicted,score_<Label>... in model class order.
std::string write_predictions_csv(const TrainedModel& model,
                                  std::span<const std::string> source_ids,
                                  std::span<const Prediction> predictions);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace gaitlab
