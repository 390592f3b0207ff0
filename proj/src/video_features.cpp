#include "gaitlab/video_features.hpp"

#include "gaitlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gaitlab {

std::string_view to_string(NormScope s) noexcept { return s == NormScope::Frame ? "frame" : "video"; }
std::string_view to_string(StdMode s) noexcept { return s == StdMode::Population ? "population" : "sample"; }

NormScope parse_norm_scope(std::string_view s)
{
   if(s == "frame") return NormScope::Frame;
   if(s == "video") return NormScope::Video;
   throw std::invalid_argument("unknown norm scope: " + std::string(s));
}

StdMode parse_std_mode(std::string_view s)
{
   if(s == "population") return StdMode::Population;
   if(s == "sample") return StdMode::Sample;
   throw std::invalid_argument("unknown std mode: " + std::string(s));
}

std::string schema_fingerprint(const FeatureConfig& config)
{
   std::string desc = "gaitlab-frame-v1|";
   for(const auto& n : frame_feature_names()) desc += n + ",";
   desc += "|agg=mean,std|norm=" + std::string(to_string(config.norm_scope));
   desc += "|std=" + std::string(to_string(config.std_mode));

   // FNV-1a 64
   std::uint64_t h = 0xcbf29ce484222325ULL;
   for(const unsigned char c : desc) {
      h ^= c;
      h *= 0x100000001b3ULL;
   }
   char buf[17];
   std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
   return buf;
}

std::vector<double> VideoFeatures::values() const
{
   std::vector<double> v(mean.begin(), mean.end());
   v.insert(v.end(), std.begin(), std.end());
   return v;
}

const std::vector<std::string>& video_feature_names()
{
   static const std::vector<std::string> names = [] {
      std::vector<std::string> v;
      for(std::size_t i = 1; i <= k_frame_dims; ++i) v.push_back("mu" + std::to_string(i));
      for(std::size_t i = 1; i <= k_frame_dims; ++i) v.push_back("sd" + std::to_string(i));
      return v;
   }();
   return names;
}

VideoFeatures aggregate(std::span<const FrameFeatures> frames, const FeatureConfig& config)
{
   const std::size_t n = frames.size();
   if(n < 2) throw TooFewFrames(n);

   std::vector<std::array<double, k_frame_dims>> rows;
   rows.reserve(n);
   for(const auto& f : frames) rows.push_back(f.to_array());

   VideoFeatures out;
   out.n_frames_used      = n;
   out.schema_fingerprint = schema_fingerprint(config);
   const double denom     = config.std_mode == StdMode::Population ? double(n) : double(n - 1);
   for(std::size_t d = 0; d < k_frame_dims; ++d) {
      double sum = 0.0;
      for(const auto& r : rows) sum += r[d];
      const double mu = sum / double(n);
      double ss       = 0.0;
      for(const auto& r : rows) ss += (r[d] - mu) * (r[d] - mu);
      out.mean[d] = mu;
      out.std[d]  = std::sqrt(ss / denom);
   }
   return out;
}

VideoExtraction extract_video(const PoseSequence& seq, const FeatureConfig& config)
{
   VideoExtraction out;
   if(config.norm_scope == NormScope::Frame) {
      for(const auto& frame : seq.frames) {
         try {
            out.frames.push_back(extract_frame_features(frame));
         } catch(const DegenerateLine&) {
            ++out.frames_failed;
         } catch(const DegeneratePose&) {
            ++out.frames_failed;
         }
      }
   } else {
      double cd_max = 0.0;
      double md_max = 0.0;
      for(const auto& frame : seq.frames) {
         FrameFeatures f;
         f.frame_index = frame.frame_index;
         try {
            f.limb_straightness       = limb_straightness(frame);
            f.hand_leg_coordination   = hand_leg_coordination(frame);
            f.upper_body_straightness = upper_body_straightness(frame);
            f.body_straightness       = body_straightness(frame);
         } catch(const DegenerateLine&) {
            ++out.frames_failed;
            continue;
         }
         f.central_distances = raw_central_distances(frame);
         f.mutual_distances  = raw_mutual_distances(frame);
         const double c = *std::max_element(f.central_distances.begin(), f.central_distances.end());
         const double m = *std::max_element(f.mutual_distances.begin(), f.mutual_distances.end());
         if(c < k_degenerate_eps || m < k_degenerate_eps) {
            ++out.frames_failed;
            continue;
         }
         cd_max = std::max(cd_max, c);
         md_max = std::max(md_max, m);
         out.frames.push_back(f);
      }
      for(auto& f : out.frames) {
         for(auto& v : f.central_distances) v /= cd_max;
         for(auto& v : f.mutual_distances) v /= md_max;
      }
   }

   out.features           = aggregate(out.frames, config);
   out.features.source_id = seq.source_id;
   return out;
}

} // namespace gaitlab
