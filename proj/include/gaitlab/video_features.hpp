#pragma once

#include "gaitlab/frame_features.hpp"
#include "gaitlab/pose.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaitlab {

inline constexpr std::size_t k_video_dims = 2 * k_frame_dims;

enum class NormScope { Frame, Video };
enum class StdMode { Population, Sample };

std::string_view to_string(NormScope s) noexcept;
std::string_view to_string(StdMode s) noexcept;
// Throw std::invalid_argument on unknown names.
NormScope parse_norm_scope(std::string_view s);
StdMode parse_std_mode(std::string_view s);

struct FeatureConfig
{
   NormScope norm_scope = NormScope::Frame;
   StdMode std_mode     = StdMode::Population;
};

// 16 hex digits; hash of the frame column order plus the config.
std::string schema_fingerprint(const FeatureConfig& config = {});

struct VideoFeatures
{
   std::array<double, k_frame_dims> mean{};
   std::array<double, k_frame_dims> std{};
   std::optional<std::size_t> n_frames_used; // unset when loaded from CSV
   std::string source_id;
   std::string schema_fingerprint;

   // [means..., stds...]
   std::vector<double> values() const;
};

// Column names mu1..mu113,sd1..sd113.
const std::vector<std::string>& video_feature_names();

// Per-dimension mean and std (population by default). Throws TooFewFrames.
VideoFeatures aggregate(std::span<const FrameFeatures> frames, const FeatureConfig& config = {});

struct VideoExtraction
{
   VideoFeatures features;
   std::vector<FrameFeatures> frames; // frames that survived extraction
   std::size_t frames_failed = 0;     // degenerate geometry
};

// Extracts frame features from every frame (all must be complete), skips
// frames with degenerate geometry, then aggregates. With NormScope::Video the
// distance blocks are divided by their maximum over the whole video.
VideoExtraction extract_video(const PoseSequence& seq, const FeatureConfig& config = {});

} // namespace gaitlab
