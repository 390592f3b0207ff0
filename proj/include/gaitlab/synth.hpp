#pragma once

#include "gaitlab/pose.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace gaitlab {

// Stick-figure walking model. Distances are in body units (torso length =
// 1.0), rendered at body_scale_px pixels per unit.
//
// This is a test and benchmark harness, not a biomechanical model: each
// abnormality is a single knob chosen so it shows up in the frame features.
struct GaitParams
{
   GaitLabel label                = GaitLabel::Normal;
   std::size_t n_frames           = 90;
   double stride_period_frames    = 30.0;
   double swing_deg               = 20.0; // peak hip/shoulder swing angle
   double forward_lean_deg        = 0.0;  // trunk flexion; head leans twice as far
   double arm_bend_deg            = 0.0;  // elbow flexion
   double circumduct_left         = 0.0;  // lateral ankle excursion, body units
   double circumduct_right        = 0.0;
   double jitter_std              = 0.0;  // per-joint gaussian noise, body units
   double body_scale_px           = 100.0;
   std::uint64_t seed             = 0;
};

GaitParams default_params(GaitLabel label, std::uint64_t seed);

// n_frames complete frames, deterministic in params.
PoseSequence generate(const GaitParams& params);

// Per-class counts of the original clinical video set.
std::map<GaitLabel, std::size_t> reference_counts();

struct SynthItem
{
   PoseSequence sequence;
   GaitLabel label;
   std::uint64_t seed;
};

// Per-sequence seeds are derived from `seed`; amplitudes are perturbed by up
// to +-20% per sequence. Output is grouped by label in enum order.
std::vector<SynthItem> generate_corpus(const std::map<GaitLabel, std::size_t>& counts,
                                       std::uint64_t seed,
                                       std::size_t n_frames = 90);

} // namespace gaitlab
