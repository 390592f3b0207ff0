#pragma once

#include "gaitlab/geometry.hpp"
#include "gaitlab/pose.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gaitlab {

inline constexpr std::size_t k_n_limb     = 4;
inline constexpr std::size_t k_n_handleg  = 2;
inline constexpr std::size_t k_n_central  = k_n_keypoints;
inline constexpr std::size_t k_n_mutual   = k_n_keypoints * (k_n_keypoints - 1) / 2;
inline constexpr std::size_t k_frame_dims = k_n_limb + k_n_handleg + 1 + 1 + k_n_central + k_n_mutual;
static_assert(k_frame_dims == 113);

// Frame-level gait features. Layout of to_array() (frozen):
//   [0,4)     limb straightness   left-hand, right-hand, left-leg, right-leg  (px)
//   [4,6)     hand-leg angle      (left-hand,right-leg), (right-hand,left-leg) (rad)
//   6         upper-body straightness (px)
//   7         body straightness (px)
//   [8,22)    central distances, keypoint order, normalized
//   [22,113)  mutual distances, (i,j) i<j lexicographic, normalized
struct FrameFeatures
{
   std::array<double, k_n_limb> limb_straightness{};
   std::array<double, k_n_handleg> hand_leg_coordination{};
   double upper_body_straightness = 0.0;
   double body_straightness       = 0.0;
   std::array<double, k_n_central> central_distances{};
   std::array<double, k_n_mutual> mutual_distances{};
   std::int64_t frame_index = 0;

   std::array<double, k_frame_dims> to_array() const noexcept;

   friend bool operator==(const FrameFeatures&, const FrameFeatures&) = default;
};

// Column names for the 113 frame dimensions: ls1..ls4,hl1,hl2,us,bs,cd1..cd14,md1..md91.
const std::vector<std::string>& frame_feature_names();

// Index into mutual_distances for keypoint slots i < j (0-based).
constexpr std::size_t mutual_index(std::size_t i, std::size_t j) noexcept
{
   return i * (2 * k_n_keypoints - i - 1) / 2 + (j - i - 1);
}

// All of these require a complete frame and throw IncompleteFrame otherwise.
std::array<double, k_n_limb> limb_straightness(const PoseFrame& frame);
std::array<double, k_n_handleg> hand_leg_coordination(const PoseFrame& frame);
double upper_body_straightness(const PoseFrame& frame);
double body_straightness(const PoseFrame& frame);

// Un-normalized distances, used when normalizing over a whole video.
std::array<double, k_n_central> raw_central_distances(const PoseFrame& frame);
std::array<double, k_n_mutual> raw_mutual_distances(const PoseFrame& frame);

// Per-frame normalized (max entry == 1). Throw DegeneratePose when every
// distance is below k_degenerate_eps.
std::array<double, k_n_central> central_distances(const PoseFrame& frame);
std::array<double, k_n_mutual> mutual_distances(const PoseFrame& frame);

// Geometry errors are rethrown tagged with the frame index.
FrameFeatures extract_frame_features(const PoseFrame& frame);

// Per-frame feature dump: header `frame,ls1,...,md91`, one row per frame.
std::string frame_features_csv(std::span<const FrameFeatures> rows);

} // namespace gaitlab
