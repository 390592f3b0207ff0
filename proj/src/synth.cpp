#include "gaitlab/synth.hpp"

#include "gaitlab/geometry.hpp"
#include "gaitlab/rng.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace gaitlab {

namespace {

using enum KeypointId;

constexpr double deg2rad(double d) noexcept { return d * std::numbers::pi / 180.0; }

// Body proportions in torso lengths.
constexpr double k_neck       = 0.35;
constexpr double k_ear_half   = 0.08;
constexpr double k_shoulder_half = 0.25;
constexpr double k_hip_half   = 0.18;
constexpr double k_upper_arm  = 0.4;
constexpr double k_forearm    = 0.4;
constexpr double k_leg        = 1.0;
constexpr double k_drift      = 0.02; // forward travel per frame
constexpr double k_confidence = 0.95;

Point2 down(double angle) noexcept { return {std::sin(angle), std::cos(angle)}; }

} // namespace

GaitParams default_params(GaitLabel label, std::uint64_t seed)
{
   GaitParams p;
   p.label = label;
   p.seed  = seed;
   switch(label) {
   case GaitLabel::Normal: break;
   case GaitLabel::Parkinson:
      p.forward_lean_deg     = 25.0;
      p.arm_bend_deg         = 60.0;
      p.swing_deg            = 10.0;
      p.stride_period_frames = 45.0;
      break;
   case GaitLabel::Hemiplegia: p.circumduct_right = 0.35; break;
   case GaitLabel::Diplegia:
      p.circumduct_left  = 0.35;
      p.circumduct_right = 0.35;
      break;
   case GaitLabel::Choreiform: p.jitter_std = 0.15; break;
   }
   return p;
}

PoseSequence generate(const GaitParams& params)
{
   Rng rng(params.seed);
   const double phase0 = rng.uniform(0.0, 2.0 * std::numbers::pi);
   const Point2 origin{rng.uniform(150.0, 250.0), rng.uniform(120.0, 180.0)};
   const double scale = params.body_scale_px;

   const double omega = 2.0 * std::numbers::pi / params.stride_period_frames;
   const double swing = deg2rad(params.swing_deg);
   const double lean  = deg2rad(params.forward_lean_deg);
   const double bend  = deg2rad(params.arm_bend_deg);

   PoseSequence seq;
   seq.frames.reserve(params.n_frames);
   for(std::size_t t = 0; t < params.n_frames; ++t) {
      const double ph = omega * double(t) + phase0;
      const double sw = std::sin(ph);

      std::array<Point2, k_n_keypoints> u{};
      auto at = [&](KeypointId id) -> Point2& { return u[slot(id)]; };

      // y grows downward; +x is the subject's left and the walking direction.
      const Point2 hip{k_drift * double(t), 1.35 + 0.02 * std::cos(2.0 * ph)};
      const Point2 shoulder = hip + Point2{std::sin(lean), -std::cos(lean)};
      const Point2 ear      = shoulder + k_neck * Point2{std::sin(2.0 * lean), -std::cos(2.0 * lean)};

      at(LeftEar)       = ear + Point2{k_ear_half, 0.0};
      at(RightEar)      = ear - Point2{k_ear_half, 0.0};
      at(LeftShoulder)  = shoulder + Point2{k_shoulder_half, 0.0};
      at(RightShoulder) = shoulder - Point2{k_shoulder_half, 0.0};
      at(LeftHip)       = hip + Point2{k_hip_half, 0.0};
      at(RightHip)      = hip - Point2{k_hip_half, 0.0};

      // Legs swing in antiphase; circumduction pushes the ankle outward
      // during that leg's half of the stride with the knee kept straight.
      const double leg_l   = swing * sw;
      const double leg_r   = -swing * sw;
      const double out_l   = params.circumduct_left * 0.5 * (1.0 + std::cos(ph));
      const double out_r   = params.circumduct_right * 0.5 * (1.0 - std::cos(ph));
      at(LeftAnkle)        = at(LeftHip) + k_leg * down(leg_l) + Point2{out_l, 0.0};
      at(RightAnkle)       = at(RightHip) + k_leg * down(leg_r) - Point2{out_r, 0.0};
      at(LeftKnee)         = midpoint(at(LeftHip), at(LeftAnkle));
      at(RightKnee)        = midpoint(at(RightHip), at(RightAnkle));

      // Each arm swings with the opposite leg.
      at(LeftElbow)  = at(LeftShoulder) + k_upper_arm * down(leg_r);
      at(LeftWrist)  = at(LeftElbow) + k_forearm * down(leg_r + bend);
      at(RightElbow) = at(RightShoulder) + k_upper_arm * down(leg_l);
      at(RightWrist) = at(RightElbow) + k_forearm * down(leg_l + bend);

      PoseFrame frame;
      frame.frame_index  = std::int64_t(t);
      frame.timestamp_ms = std::llround(double(t) * 1000.0 / 30.0);
      for(std::size_t i = 0; i < u.size(); ++i) {
         Point2 p = u[i];
         if(params.jitter_std > 0.0) {
            const double jx = rng.normal();
            const double jy = rng.normal();
            p               = p + params.jitter_std * Point2{jx, jy};
         }
         frame.keypoints[i] = Keypoint{origin.x + scale * p.x, origin.y + scale * p.y, k_confidence};
      }
      seq.frames.push_back(std::move(frame));
   }

   std::string tag(label_name(params.label));
   for(auto& c : tag) c = char(std::tolower(static_cast<unsigned char>(c)));
   seq.source_id = tag + "_" + std::to_string(params.seed);
   return seq;
}

std::map<GaitLabel, std::size_t> reference_counts()
{
   return {{GaitLabel::Choreiform, 51},
           {GaitLabel::Diplegia, 55},
           {GaitLabel::Hemiplegia, 70},
           {GaitLabel::Normal, 31},
           {GaitLabel::Parkinson, 51}};
}

std::vector<SynthItem>
generate_corpus(const std::map<GaitLabel, std::size_t>& counts, std::uint64_t seed, std::size_t n_frames)
{
   std::vector<SynthItem> out;
   for(const auto& [label, count] : counts)
      if(count < 1) throw std::invalid_argument("corpus counts must be >= 1");
   for(const auto& [label, count] : counts) {
      std::string tag(label_name(label));
      for(auto& c : tag) c = char(std::tolower(static_cast<unsigned char>(c)));

      for(std::size_t i = 0; i < count; ++i) {
         const auto s = derive_seed(seed, std::uint64_t(static_cast<int>(label)) * 1'000'000ULL + i);
         GaitParams p = default_params(label, s);
         p.n_frames   = n_frames;

         Rng jitter(derive_seed(s, 1));
         const auto wiggle = [&](double lo, double hi) { return jitter.uniform(lo, hi); };
         p.forward_lean_deg *= wiggle(0.8, 1.2);
         p.arm_bend_deg *= wiggle(0.8, 1.2);
         p.circumduct_left *= wiggle(0.8, 1.2);
         p.circumduct_right *= wiggle(0.8, 1.2);
         p.jitter_std *= wiggle(0.8, 1.2);
         p.swing_deg *= wiggle(0.8, 1.2);
         p.stride_period_frames *= wiggle(0.8, 1.2);
         p.body_scale_px *= wiggle(0.9, 1.1);

         auto seq = generate(p);
         char id[16];
         std::snprintf(id, sizeof(id), "_%03zu", i);
         seq.source_id = tag + id;
         out.push_back({std::move(seq), label, s});
      }
   }
   return out;
}

} // namespace gaitlab
