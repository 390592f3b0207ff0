#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaitlab {

// The 14 keypoints used for gait features. Values are the 1-based indices
// P_1..P_14; the ordering is frozen (feature layout depends on it).
enum class KeypointId : int {
   LeftEar = 1,
   RightEar,
   LeftShoulder,
   RightShoulder,
   LeftElbow,
   RightElbow,
   LeftWrist,
   RightWrist,
   LeftHip,
   RightHip,
   LeftKnee,
   RightKnee,
   LeftAnkle,
   RightAnkle,
};

inline constexpr int k_n_keypoints = 14;

constexpr int index(KeypointId id) noexcept { return static_cast<int>(id); }
// 0-based slot for array storage.
constexpr std::size_t slot(KeypointId id) noexcept { return std::size_t(index(id) - 1); }

// Throws std::out_of_range for i outside 1..14.
KeypointId keypoint_from_index(int i);
std::string_view keypoint_name(KeypointId id) noexcept;
std::optional<KeypointId> keypoint_from_name(std::string_view name) noexcept;
const std::array<KeypointId, k_n_keypoints>& all_keypoints() noexcept;

// Image-plane coordinates (pixels, y down) plus a detector score in [0,1].
struct Keypoint
{
   double x          = 0.0;
   double y          = 0.0;
   double confidence = 1.0;

   friend bool operator==(const Keypoint&, const Keypoint&) = default;
};

struct PoseFrame
{
   std::array<std::optional<Keypoint>, k_n_keypoints> keypoints{};
   std::int64_t frame_index = 0;
   std::optional<std::int64_t> timestamp_ms;

   const std::optional<Keypoint>& operator[](KeypointId id) const { return keypoints[slot(id)]; }
   std::optional<Keypoint>& operator[](KeypointId id) { return keypoints[slot(id)]; }

   bool is_complete() const noexcept;

   friend bool operator==(const PoseFrame&, const PoseFrame&) = default;
};

struct PoseSequence
{
   std::vector<PoseFrame> frames;
   std::string source_id;

   friend bool operator==(const PoseSequence&, const PoseSequence&) = default;
};

enum class GaitLabel : int { Choreiform = 0, Diplegia, Hemiplegia, Normal, Parkinson };

inline constexpr int k_n_labels = 5;

std::string_view label_name(GaitLabel label) noexcept;
std::optional<GaitLabel> label_from_name(std::string_view name) noexcept;
const std::array<GaitLabel, k_n_labels>& all_labels() noexcept;

// True iff all 14 keypoints are present with confidence >= min_confidence.
bool frame_is_valid(const PoseFrame& frame, double min_confidence) noexcept;

} // namespace gaitlab
