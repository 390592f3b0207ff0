#pragma once

#include "gaitlab/pose.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

namespace gaitlab {

inline constexpr double k_default_min_confidence   = 0.05;
inline constexpr std::size_t k_default_min_frames = 10;

struct IngestReport
{
   std::size_t total_frames   = 0;
   std::size_t valid_frames   = 0;
   std::size_t dropped_frames = 0;
   std::string source_id;
};

// Parse keypoint JSON-lines text. Each non-blank line is
//   {"frame": <int>, "t_ms": <int, optional>, "kp": {"<Name>": [x, y, conf], ...}}
// Unknown keypoint names are ignored; frames come back sorted by index.
// Throws MalformedLine, DuplicateFrame, EmptyInput.
PoseSequence parse_keypoint_jsonl(std::string_view text, std::string source_id = {});

// Reads a `.kp.jsonl` file; source_id is the file name without that suffix.
PoseSequence read_keypoint_file(const std::filesystem::path& path);

std::string serialize_keypoint_jsonl(const PoseSequence& seq);
void write_keypoint_file(const std::filesystem::path& path, const PoseSequence& seq);

// "walk_01.kp.jsonl" -> "walk_01"
std::string source_id_from_path(const std::filesystem::path& path);

// Keeps frames passing frame_is_valid, order preserved.
// Throws TooFewValidFrames when fewer than min_valid_frames survive.
std::pair<PoseSequence, IngestReport>
filter_valid(const PoseSequence& seq,
             double min_confidence        = k_default_min_confidence,
             std::size_t min_valid_frames = k_default_min_frames);

} // namespace gaitlab
