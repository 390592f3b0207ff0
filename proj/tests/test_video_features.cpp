#include "gaitlab/error.hpp"
#include "gaitlab/synth.hpp"
#include "gaitlab/video_features.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace gaitlab;

namespace {

std::vector<FrameFeatures> random_features(Rng& rng, std::size_t n)
{
   std::vector<FrameFeatures> out;
   for(std::size_t i = 0; i < n; ++i) out.push_back(extract_frame_features(oracle::random_frame(rng, std::int64_t(i))));
   return out;
}

void check_close(const VideoFeatures& a, const VideoFeatures& b, double tol)
{
   for(std::size_t d = 0; d < k_frame_dims; ++d) {
      CHECK(a.mean[d] == doctest::Approx(b.mean[d]).epsilon(tol));
      CHECK(a.std[d] == doctest::Approx(b.std[d]).epsilon(tol).scale(1e-6));
   }
}

} // namespace

TEST_CASE("aggregate: identical frames have zero spread")
{
   const auto f = extract_frame_features(oracle::frame_of(oracle::t_pose()));
   const std::vector<FrameFeatures> frames(4, f);
   const auto v = aggregate(frames);
   const auto a = f.to_array();
   for(std::size_t d = 0; d < k_frame_dims; ++d) {
      CHECK(v.mean[d] == doctest::Approx(a[d]));
      CHECK(v.std[d] == doctest::Approx(0.0));
   }
   CHECK(v.values().size() == 226);
   CHECK(v.n_frames_used == 4u);
   CHECK(v.schema_fingerprint == schema_fingerprint());
}

TEST_CASE("aggregate: population std of {1,3} is 1")
{
   std::vector<FrameFeatures> frames(2);
   frames[0].body_straightness = 1.0;
   frames[1].body_straightness = 3.0;
   const auto v = aggregate(frames);
   CHECK(v.mean[7] == 2.0);
   CHECK(v.std[7] == 1.0);

   const auto s = aggregate(frames, {NormScope::Frame, StdMode::Sample});
   CHECK(s.std[7] == doctest::Approx(std::sqrt(2.0)));
   CHECK(s.schema_fingerprint != v.schema_fingerprint);
}

TEST_CASE("aggregate needs two frames")
{
   std::vector<FrameFeatures> one(1);
   try {
      aggregate(one);
      FAIL("expected TooFewFrames");
   } catch(const TooFewFrames& e) {
      CHECK(e.n == 1);
   }
   CHECK_THROWS_AS(aggregate(std::span<const FrameFeatures>{}), TooFewFrames);
}

TEST_CASE("aggregate is permutation and replication invariant")
{
   Rng rng(8);
   for(int trial = 0; trial < 10; ++trial) {
      auto frames  = random_features(rng, 2 + rng.index(15));
      const auto v = aggregate(frames);

      auto shuffled = frames;
      rng.shuffle(std::span(shuffled));
      check_close(aggregate(shuffled), v, 1e-12);

      std::vector<FrameFeatures> copies;
      const auto k = 1 + rng.index(4);
      for(std::size_t c = 0; c < k; ++c) copies.insert(copies.end(), frames.begin(), frames.end());
      check_close(aggregate(copies), v, 1e-12);
   }
}

TEST_CASE("video-level extraction")
{
   const auto seq = generate(default_params(GaitLabel::Normal, 4));
   SUBCASE("frame scope")
   {
      const auto x = extract_video(seq);
      CHECK(x.frames.size() == seq.frames.size());
      CHECK(x.frames_failed == 0);
      CHECK(x.features.source_id == seq.source_id);
      CHECK(x.features.values().size() == k_video_dims);
   }
   SUBCASE("video scope normalizes over the whole clip")
   {
      const FeatureConfig cfg{NormScope::Video, StdMode::Population};
      const auto x = extract_video(seq, cfg);
      CHECK(x.features.schema_fingerprint == schema_fingerprint(cfg));
      double mx = 0.0;
      for(const auto& f : x.frames)
         for(const double v : f.mutual_distances) {
            CHECK(v <= 1.0);
            mx = std::max(mx, v);
         }
      CHECK(mx == 1.0);
   }
   SUBCASE("degenerate frames are skipped")
   {
      auto bad = seq;
      for(auto& kp : bad.frames[3].keypoints) kp = bad.frames[3].keypoints[0];
      bad.frames[5][KeypointId::LeftWrist] = bad.frames[5][KeypointId::LeftShoulder];
      const auto x = extract_video(bad);
      CHECK(x.frames_failed == 2);
      CHECK(x.frames.size() == seq.frames.size() - 2);
   }
   SUBCASE("too few surviving frames")
   {
      PoseSequence tiny = seq;
      tiny.frames.resize(3);
      for(auto& kp : tiny.frames[1].keypoints) kp = Keypoint{1, 1, 1};
      for(auto& kp : tiny.frames[2].keypoints) kp = Keypoint{1, 1, 1};
      CHECK_THROWS_AS(extract_video(tiny), TooFewFrames);
   }
}

TEST_CASE("config names")
{
   CHECK(parse_norm_scope("video") == NormScope::Video);
   CHECK(parse_std_mode("sample") == StdMode::Sample);
   CHECK_THROWS_AS(parse_norm_scope("clip"), std::invalid_argument);
   CHECK(schema_fingerprint().size() == 16);
   CHECK(schema_fingerprint() == schema_fingerprint({}));
   CHECK(schema_fingerprint({NormScope::Video, StdMode::Population}) != schema_fingerprint());
   CHECK(video_feature_names().front() == "mu1");
   CHECK(video_feature_names().back() == "sd113");
}
