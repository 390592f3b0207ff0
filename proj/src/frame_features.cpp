#include "gaitlab/frame_features.hpp"

#include "gaitlab/error.hpp"
#include "gaitlab/table_io.hpp"

#include <algorithm>
#include <cmath>

namespace gaitlab {

namespace {

using enum KeypointId;

// Complete-frame accessor.
struct Joints
{
   explicit Joints(const PoseFrame& frame)
   {
      if(!frame.is_complete()) throw IncompleteFrame(frame.frame_index);
      for(std::size_t i = 0; i < pts.size(); ++i) pts[i] = {frame.keypoints[i]->x, frame.keypoints[i]->y};
   }
   Point2 operator[](KeypointId id) const { return pts[slot(id)]; }
   Point2 mid(KeypointId a, KeypointId b) const { return midpoint((*this)[a], (*this)[b]); }

   std::array<Point2, k_n_keypoints> pts{};
};

template<std::size_t N> void normalize_block(std::array<double, N>& xs, const char* block)
{
   const double mx = *std::max_element(xs.begin(), xs.end());
   if(mx < k_degenerate_eps) throw DegeneratePose(block);
   for(auto& x : xs) x /= mx;
}

} // namespace

std::array<double, k_frame_dims> FrameFeatures::to_array() const noexcept
{
   std::array<double, k_frame_dims> out{};
   auto it = out.begin();
   it      = std::copy(limb_straightness.begin(), limb_straightness.end(), it);
   it      = std::copy(hand_leg_coordination.begin(), hand_leg_coordination.end(), it);
   *it++   = upper_body_straightness;
   *it++   = body_straightness;
   it      = std::copy(central_distances.begin(), central_distances.end(), it);
   std::copy(mutual_distances.begin(), mutual_distances.end(), it);
   return out;
}

const std::vector<std::string>& frame_feature_names()
{
   static const std::vector<std::string> names = [] {
      std::vector<std::string> v;
      for(int i = 1; i <= 4; ++i) v.push_back("ls" + std::to_string(i));
      v.push_back("hl1");
      v.push_back("hl2");
      v.push_back("us");
      v.push_back("bs");
      for(std::size_t i = 1; i <= k_n_central; ++i) v.push_back("cd" + std::to_string(i));
      for(std::size_t i = 1; i <= k_n_mutual; ++i) v.push_back("md" + std::to_string(i));
      return v;
   }();
   return names;
}

std::array<double, k_n_limb> limb_straightness(const PoseFrame& frame)
{
   const Joints j(frame);
   return {
       point_line_distance(j[LeftElbow], j[LeftShoulder], j[LeftWrist], "left-hand"),
       point_line_distance(j[RightElbow], j[RightShoulder], j[RightWrist], "right-hand"),
       point_line_distance(j[LeftKnee], j[LeftHip], j[LeftAnkle], "left-leg"),
       point_line_distance(j[RightKnee], j[RightHip], j[RightAnkle], "right-leg"),
   };
}

std::array<double, k_n_handleg> hand_leg_coordination(const PoseFrame& frame)
{
   const Joints j(frame);
   const Point2 left_hand  = j[LeftWrist] - j[LeftShoulder];
   const Point2 right_hand = j[RightWrist] - j[RightShoulder];
   const Point2 left_leg   = j[LeftAnkle] - j[LeftHip];
   const Point2 right_leg  = j[RightAnkle] - j[RightHip];
   return {
       undirected_angle(left_hand, right_leg, "left-hand", "right-leg"),
       undirected_angle(right_hand, left_leg, "right-hand", "left-leg"),
   };
}

double upper_body_straightness(const PoseFrame& frame)
{
   const Joints j(frame);
   return point_line_distance(j.mid(LeftShoulder, RightShoulder),
                              j.mid(LeftEar, RightEar),
                              j.mid(LeftHip, RightHip),
                              "upper-body axis");
}

double body_straightness(const PoseFrame& frame)
{
   const Joints j(frame);
   return point_line_distance(j.mid(LeftHip, RightHip),
                              j.mid(LeftShoulder, RightShoulder),
                              j.mid(LeftAnkle, RightAnkle),
                              "body axis");
}

std::array<double, k_n_central> raw_central_distances(const PoseFrame& frame)
{
   const Joints j(frame);
   Point2 centroid{};
   for(const auto& p : j.pts) centroid = centroid + p;
   centroid = (1.0 / double(k_n_keypoints)) * centroid;

   std::array<double, k_n_central> out{};
   for(std::size_t i = 0; i < out.size(); ++i) out[i] = distance(j.pts[i], centroid);
   return out;
}

std::array<double, k_n_mutual> raw_mutual_distances(const PoseFrame& frame)
{
   const Joints j(frame);
   std::array<double, k_n_mutual> out{};
   std::size_t n = 0;
   for(std::size_t a = 0; a < k_n_keypoints; ++a)
      for(std::size_t b = a + 1; b < k_n_keypoints; ++b) out[n++] = distance(j.pts[a], j.pts[b]);
   return out;
}

std::array<double, k_n_central> central_distances(const PoseFrame& frame)
{
   auto out = raw_central_distances(frame);
   normalize_block(out, "central distances");
   return out;
}

std::array<double, k_n_mutual> mutual_distances(const PoseFrame& frame)
{
   auto out = raw_mutual_distances(frame);
   normalize_block(out, "mutual distances");
   return out;
}

FrameFeatures extract_frame_features(const PoseFrame& frame)
{
   FrameFeatures f;
   f.frame_index = frame.frame_index;
   try {
      f.limb_straightness      = limb_straightness(frame);
      f.hand_leg_coordination  = hand_leg_coordination(frame);
      f.upper_body_straightness = upper_body_straightness(frame);
      f.body_straightness      = body_straightness(frame);
      f.central_distances      = central_distances(frame);
      f.mutual_distances       = mutual_distances(frame);
   } catch(const DegenerateLine& e) {
      throw DegenerateLine(e.what_line, frame.frame_index);
   } catch(const DegeneratePose& e) {
      throw DegeneratePose(e.block_name, frame.frame_index);
   }
   return f;
}

std::string frame_features_csv(std::span<const FrameFeatures> rows)
{
   std::string out = "frame";
   for(const auto& n : frame_feature_names()) out += "," + n;
   out += '\n';
   for(const auto& r : rows) {
      out += std::to_string(r.frame_index);
      for(const double v : r.to_array()) out += "," + format_double(v);
      out += '\n';
   }
   return out;
}

} // namespace gaitlab
