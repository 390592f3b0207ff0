#include "gaitlab/pose.hpp"

#include <stdexcept>

namespace gaitlab {

namespace {

constexpr std::array<std::string_view, k_n_keypoints> k_keypoint_names = {
    "LeftEar",   "RightEar",  "LeftShoulder", "RightShoulder", "LeftElbow",
    "RightElbow", "LeftWrist", "RightWrist",   "LeftHip",       "RightHip",
    "LeftKnee",  "RightKnee", "LeftAnkle",    "RightAnkle"};

constexpr std::array<std::string_view, k_n_labels> k_label_names = {
    "Choreiform", "Diplegia", "Hemiplegia", "Normal", "Parkinson"};

} // namespace

KeypointId keypoint_from_index(int i)
{
   if(i < 1 || i > k_n_keypoints)
      throw std::out_of_range("keypoint index out of range: " + std::to_string(i));
   return static_cast<KeypointId>(i);
}

std::string_view keypoint_name(KeypointId id) noexcept { return k_keypoint_names[slot(id)]; }

std::optional<KeypointId> keypoint_from_name(std::string_view name) noexcept
{
   for(int i = 0; i < k_n_keypoints; ++i)
      if(k_keypoint_names[std::size_t(i)] == name) return static_cast<KeypointId>(i + 1);
   return std::nullopt;
}

const std::array<KeypointId, k_n_keypoints>& all_keypoints() noexcept
{
   static const auto ids = [] {
      std::array<KeypointId, k_n_keypoints> out{};
      for(int i = 0; i < k_n_keypoints; ++i) out[std::size_t(i)] = static_cast<KeypointId>(i + 1);
      return out;
   }();
   return ids;
}

bool PoseFrame::is_complete() const noexcept
{
   for(const auto& kp : keypoints)
      if(!kp) return false;
   return true;
}

std::string_view label_name(GaitLabel label) noexcept
{
   return k_label_names[std::size_t(static_cast<int>(label))];
}

std::optional<GaitLabel> label_from_name(std::string_view name) noexcept
{
   for(int i = 0; i < k_n_labels; ++i)
      if(k_label_names[std::size_t(i)] == name) return static_cast<GaitLabel>(i);
   return std::nullopt;
}

const std::array<GaitLabel, k_n_labels>& all_labels() noexcept
{
   static constexpr std::array<GaitLabel, k_n_labels> labels = {
       GaitLabel::Choreiform, GaitLabel::Diplegia, GaitLabel::Hemiplegia, GaitLabel::Normal,
       GaitLabel::Parkinson};
   return labels;
}

bool frame_is_valid(const PoseFrame& frame, double min_confidence) noexcept
{
   for(const auto& kp : frame.keypoints)
      if(!kp || kp->confidence < min_confidence) return false;
   return true;
}

} // namespace gaitlab
