// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails or overruns its time budget.

#include "gaitlab/classify.hpp"
#include "gaitlab/eval.hpp"
#include "gaitlab/frame_features.hpp"
#include "gaitlab/ingest.hpp"
#include "gaitlab/rng.hpp"
#include "gaitlab/synth.hpp"
#include "gaitlab/table_io.hpp"
#include "gaitlab/video_features.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace gaitlab;
using oracle::XY;
using enum KeypointId;

namespace {

struct Outcome
{
   bool ok = true;
   std::string detail;
};

// Collects failures without stopping at the first one.
class Checker
{
 public:
   void expect(bool cond, const std::string& what)
   {
      if(!cond) {
         ++failures_;
         if(first_.empty()) first_ = what;
      }
   }
   bool ok() const { return failures_ == 0; }
   std::string summary() const
   {
      if(ok()) return {};
      return std::to_string(failures_) + " failure(s), first: " + first_;
   }

 private:
   std::size_t failures_ = 0;
   std::string first_;
};

double rel_err(double a, double b)
{
   const double m = std::max(std::abs(a), std::abs(b));
   return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

std::string fmt(double v, int prec = 3)
{
   std::ostringstream os;
   os.precision(prec);
   os << v;
   return os.str();
}

XY at(const PoseFrame& f, KeypointId id) { return {f[id]->x, f[id]->y}; }

PoseFrame transformed(const PoseFrame& f, const std::function<XY(XY)>& g)
{
   PoseFrame out = f;
   for(auto& kp : out.keypoints) {
      const XY p = g({kp->x, kp->y});
      kp->x      = p.x;
      kp->y      = p.y;
   }
   return out;
}

// ------------------------------------------------------------ criterion 1

Outcome dimension_fidelity()
{
   Checker c;
   Rng rng(101);
   c.expect(frame_feature_names().size() == 113, "frame names");
   c.expect(video_feature_names().size() == 226, "video names");

   std::vector<PoseSequence> sequences;
   for(const auto label : all_labels()) {
      auto p     = default_params(label, 5);
      p.n_frames = 40;
      sequences.push_back(generate(p));
   }
   for(std::size_t n : {2, 3, 10, 57}) {
      PoseSequence s;
      for(std::size_t i = 0; i < n; ++i) s.frames.push_back(oracle::random_frame(rng, std::int64_t(i)));
      sequences.push_back(std::move(s));
   }

   for(const auto& seq : sequences)
      for(const auto scope : {NormScope::Frame, NormScope::Video})
         for(const auto mode : {StdMode::Population, StdMode::Sample}) {
            const auto ex = extract_video(seq, {scope, mode});
            c.expect(ex.frames.size() == seq.frames.size(), "frames kept");
            for(const auto& f : ex.frames) c.expect(f.to_array().size() == 113, "frame dims");
            c.expect(ex.features.mean.size() == 113 && ex.features.std.size() == 113, "mean/std dims");
            c.expect(ex.features.values().size() == 226, "video dims");
         }

   // through the keypoint file format as well
   const auto round = parse_keypoint_jsonl(serialize_keypoint_jsonl(sequences.front()), "x");
   const auto [valid, report] = filter_valid(round);
   c.expect(extract_video(valid).features.values().size() == 226, "video dims after ingest");
   return {c.ok(), c.ok() ? "113 frame dims, 226 video dims on " + std::to_string(sequences.size()) + " sequences"
                          : c.summary()};
}

// ------------------------------------------------------------ criterion 2

Outcome geometry_oracle()
{
   Checker c;
   Rng rng(202);
   double worst   = 0.0;
   std::size_t n_compared = 0;

   const auto compare = [&](double got, double want, const char* what) {
      const double e = rel_err(got, want);
      worst          = std::max(worst, e);
      ++n_compared;
      c.expect(e <= 1e-6, std::string(what) + " rel err " + fmt(e));
   };

   for(int i = 0; i < 1000; ++i) {
      const auto f  = oracle::random_frame(rng, i);
      const auto ls = limb_straightness(f);
      const std::array<std::array<KeypointId, 3>, 4> limbs{{{LeftShoulder, LeftElbow, LeftWrist},
                                                            {RightShoulder, RightElbow, RightWrist},
                                                            {LeftHip, LeftKnee, LeftAnkle},
                                                            {RightHip, RightKnee, RightAnkle}}};
      for(std::size_t l = 0; l < 4; ++l) {
         const XY a = at(f, limbs[l][0]), m = at(f, limbs[l][1]), b = at(f, limbs[l][2]);
         if(a.x != b.x) compare(ls[l], oracle::slope_distance(m, a, b), "limb");
      }
      const XY le = at(f, LeftEar), re = at(f, RightEar);
      const XY lsh = at(f, LeftShoulder), rsh = at(f, RightShoulder);
      const XY lh = at(f, LeftHip), rh = at(f, RightHip);
      const XY la = at(f, LeftAnkle), ra = at(f, RightAnkle);
      if(le.x + re.x != lh.x + rh.x)
         compare(upper_body_straightness(f), oracle::summed_midpoint_distance(lsh, rsh, le, re, lh, rh), "upper body");
      if(lsh.x + rsh.x != la.x + ra.x)
         compare(body_straightness(f), oracle::summed_midpoint_distance(lh, rh, lsh, rsh, la, ra), "body");
   }

   // Vertical reference lines, where the slope form is undefined.
   std::size_t n_vertical = 0;
   for(int i = 0; i < 200; ++i) {
      auto f         = oracle::random_frame(rng, i);
      const double x = rng.uniform(0, 640);
      // left arm: shoulder and wrist share x
      f[LeftShoulder]->x = x;
      f[LeftWrist]->x    = x;
      c.expect(std::abs(limb_straightness(f)[0] - std::abs(f[LeftElbow]->x - x)) <= 1e-9 * 640, "vertical limb");
      // body: mid-shoulder and mid-ankle share x
      f[RightShoulder]->x = 2 * x - f[LeftShoulder]->x;
      f[LeftAnkle]->x     = rng.uniform(0, 640);
      f[RightAnkle]->x    = 2 * x - f[LeftAnkle]->x;
      const double mid_hip_x = 0.5 * (f[LeftHip]->x + f[RightHip]->x);
      c.expect(std::abs(body_straightness(f) - std::abs(mid_hip_x - x)) <= 1e-9 * 640, "vertical body");
      // upper body: mid-ear and mid-hip share x
      const double ux = rng.uniform(0, 640);
      f[LeftEar]->x   = rng.uniform(0, 640);
      f[RightEar]->x  = 2 * ux - f[LeftEar]->x;
      f[LeftHip]->x   = rng.uniform(0, 640);
      f[RightHip]->x  = 2 * ux - f[LeftHip]->x;
      const double mid_sh_x = 0.5 * (f[LeftShoulder]->x + f[RightShoulder]->x);
      c.expect(std::abs(upper_body_straightness(f) - std::abs(mid_sh_x - ux)) <= 1e-9 * 640, "vertical upper body");
      n_vertical += 3;
   }
   // exact analytic case
   c.expect(point_line_distance({5, 3}, {2, 0}, {2, 10}) == 3.0, "x=2 line");

   return {c.ok(), std::to_string(n_compared) + " slope-form comparisons, worst rel err " + fmt(worst) + ", "
                       + std::to_string(n_vertical) + " vertical cases" + (c.ok() ? "" : "; " + c.summary())};
}

// ------------------------------------------------------------ criterion 3

Outcome invariance()
{
   Checker c;
   Rng rng(303);
   double worst_t = 0.0, worst_r = 0.0, worst_s = 0.0;

   for(int i = 0; i < 200; ++i) {
      const auto f    = oracle::random_frame(rng, i);
      const auto base = extract_frame_features(f).to_array();

      const double tx = rng.uniform(-1000, 1000), ty = rng.uniform(-1000, 1000);
      const auto tr   = extract_frame_features(transformed(f, [&](XY p) { return XY{p.x + tx, p.y + ty}; })).to_array();
      for(std::size_t d = 0; d < k_frame_dims; ++d) {
         const double e = std::abs(tr[d] - base[d]);
         worst_t        = std::max(worst_t, e);
         c.expect(e <= 1e-9, "translation dim " + std::to_string(d));
      }

      const double th = rng.uniform(0, 2 * std::numbers::pi);
      const XY o{rng.uniform(0, 640), rng.uniform(0, 480)};
      const double cs = std::cos(th), sn = std::sin(th);
      const auto rot  = extract_frame_features(transformed(f, [&](XY p) {
                          const double dx = p.x - o.x, dy = p.y - o.y;
                          return XY{o.x + cs * dx - sn * dy, o.y + sn * dx + cs * dy};
                       })).to_array();
      for(std::size_t d = 0; d < k_frame_dims; ++d) {
         const double e = rel_err(rot[d], base[d]);
         worst_r        = std::max(worst_r, e);
         c.expect(e <= 1e-6, "rotation dim " + std::to_string(d));
      }

      const double s = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
      const auto sc  = extract_frame_features(transformed(f, [&](XY p) { return XY{s * p.x, s * p.y}; })).to_array();
      for(std::size_t d = 0; d < k_frame_dims; ++d) {
         // [0,4) limbs, 6 upper body, 7 body scale linearly; the rest are invariant
         const bool linear = d < 4 || d == 6 || d == 7;
         const double e    = rel_err(sc[d], linear ? s * base[d] : base[d]);
         worst_s           = std::max(worst_s, e);
         c.expect(e <= 1e-6, "scale dim " + std::to_string(d));
      }
   }
   return {c.ok(), "200 frames; worst translation abs " + fmt(worst_t) + ", rotation rel " + fmt(worst_r)
                       + ", scale rel " + fmt(worst_s) + (c.ok() ? "" : "; " + c.summary())};
}

// ------------------------------------------------------------ criterion 4

std::vector<LabeledVideo> dummy_items(const std::map<GaitLabel, std::size_t>& counts)
{
   std::vector<LabeledVideo> out;
   for(const auto& [label, n] : counts)
      for(std::size_t i = 0; i < n; ++i) {
         LabeledVideo v;
         v.label                       = label;
         v.features.source_id          = std::string(label_name(label)) + "_" + std::to_string(i);
         v.features.schema_fingerprint = schema_fingerprint();
         out.push_back(std::move(v));
      }
   return out;
}

Outcome split_fidelity()
{
   Checker c;
   const std::map<GaitLabel, std::size_t> want_train{{GaitLabel::Choreiform, 38}, {GaitLabel::Diplegia, 41},
                                                     {GaitLabel::Hemiplegia, 52}, {GaitLabel::Normal, 23},
                                                     {GaitLabel::Parkinson, 38}};
   const std::map<GaitLabel, std::size_t> want_test{{GaitLabel::Choreiform, 13}, {GaitLabel::Diplegia, 14},
                                                    {GaitLabel::Hemiplegia, 18}, {GaitLabel::Normal, 8},
                                                    {GaitLabel::Parkinson, 13}};
   const std::map<GaitLabel, std::size_t> counts{{GaitLabel::Choreiform, 51}, {GaitLabel::Diplegia, 55},
                                                 {GaitLabel::Hemiplegia, 70}, {GaitLabel::Normal, 31},
                                                 {GaitLabel::Parkinson, 51}};
   const auto items = dummy_items(counts);
   for(std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto ds = stratified_split(items, seed);
      std::map<GaitLabel, std::size_t> train, test;
      for(std::size_t i = 0; i < ds.items.size(); ++i)
         ++(ds.split[i] == Partition::Train ? train : test)[ds.items[i].label];
      c.expect(train == want_train, "train counts, seed " + std::to_string(seed));
      c.expect(test == want_test, "test counts, seed " + std::to_string(seed));
   }
   return {c.ok(), c.ok() ? "train 38/41/52/23/38, test 13/14/18/8/13 over 20 seeds" : c.summary()};
}

// ------------------------------------------------------------ criterion 5

VideoFeatures video_from(const std::vector<double>& head)
{
   VideoFeatures v;
   v.schema_fingerprint = schema_fingerprint();
   for(std::size_t i = 0; i < head.size(); ++i) (i < k_frame_dims ? v.mean[i] : v.std[i - k_frame_dims]) = head[i];
   return v;
}

std::vector<LabeledVideo> random_points(Rng& rng, std::size_t n, std::size_t dims, std::size_t n_classes)
{
   std::vector<LabeledVideo> out;
   for(std::size_t i = 0; i < n; ++i) {
      std::vector<double> x(dims);
      for(std::size_t d = 0; d < dims; ++d) x[d] = rng.normal() * double(d + 1) + double(d);
      const auto label = all_labels()[i < n_classes * 2 ? i % n_classes : rng.index(n_classes)];
      out.push_back({video_from(x), label});
   }
   return out;
}

// Plain exhaustive kNN: z-score with population statistics, full sort by
// (distance, index), majority vote with ties to the smaller label.
GaitLabel naive_knn(const std::vector<LabeledVideo>& train, const VideoFeatures& q, std::size_t k)
{
   const std::size_t d = k_video_dims;
   std::vector<double> mean(d, 0.0), sd(d, 0.0);
   for(const auto& t : train) {
      const auto v = t.features.values();
      for(std::size_t j = 0; j < d; ++j) mean[j] += v[j];
   }
   for(auto& m : mean) m /= double(train.size());
   for(const auto& t : train) {
      const auto v = t.features.values();
      for(std::size_t j = 0; j < d; ++j) sd[j] += (v[j] - mean[j]) * (v[j] - mean[j]);
   }
   for(auto& s : sd) {
      s = std::sqrt(s / double(train.size()));
      if(s == 0.0) s = 1.0;
   }
   const auto qv = q.values();
   std::vector<std::pair<double, std::size_t>> dist;
   for(std::size_t i = 0; i < train.size(); ++i) {
      const auto v = train[i].features.values();
      double acc   = 0.0;
      for(std::size_t j = 0; j < d; ++j) {
         const double diff = (qv[j] - mean[j]) / sd[j] - (v[j] - mean[j]) / sd[j];
         acc += diff * diff;
      }
      dist.emplace_back(acc, i);
   }
   std::sort(dist.begin(), dist.end());
   std::map<GaitLabel, std::size_t> votes;
   for(std::size_t i = 0; i < std::min(k, dist.size()); ++i) ++votes[train[dist[i].second].label];
   GaitLabel best = votes.begin()->first;
   for(const auto& [label, n] : votes)
      if(n > votes[best]) best = label;
   return best;
}

int walk(const DecisionTree& tree, std::span<const double> x)
{
   std::size_t node = 0;
   while(tree.nodes[node].feature >= 0) {
      const auto& n = tree.nodes[node];
      node          = std::size_t(x[std::size_t(n.feature)] <= n.threshold ? n.left : n.right);
   }
   const auto& freq = tree.nodes[node].class_freq;
   return int(std::max_element(freq.begin(), freq.end()) - freq.begin());
}

Outcome classifier_oracles()
{
   Checker c;
   Rng rng(505);
   std::size_t knn_queries = 0;
   for(int ds = 0; ds < 8; ++ds) {
      const std::size_t dims = 3 + std::size_t(ds) * 2, classes = 2 + std::size_t(ds) % 4;
      const auto data = random_points(rng, 200, dims, classes);
      for(const std::size_t k : {1, 3, 5, 8}) {
         Hyperparameters h;
         h.k          = k;
         const auto m = train(Algorithm::KNN, data, h, 0);
         for(int q = 0; q < 50; ++q) {
            const auto query = random_points(rng, 1, dims, 1)[0].features;
            const auto want  = naive_knn(data, query, k);
            c.expect(predict(m, query).label == want, "kNN vs naive");
            c.expect(knn_brute_force_oracle(data, query, k) == want, "library oracle vs naive");
            ++knn_queries;
         }
         // the training points themselves, where exact ties of distance 0 occur
         for(int q = 0; q < 20; ++q) {
            const auto& query = data[rng.index(data.size())].features;
            c.expect(predict(m, query).label == naive_knn(data, query, k), "kNN vs naive on training point");
            ++knn_queries;
         }
      }
   }

   double worst_grad = 0.0;
   for(int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 30, d = 6, k = 2 + std::size_t(trial) % 4;
      Matrix x(n, std::vector<double>(d));
      for(auto& r : x)
         for(auto& v : r) v = rng.normal();
      std::vector<int> y(n);
      for(auto& v : y) v = int(rng.index(k));
      Matrix w(k, std::vector<double>(d));
      for(auto& r : w)
         for(auto& v : r) v = rng.normal();
      std::vector<double> b(k);
      for(auto& v : b) v = rng.normal();
      const double l2 = 1e-3 * double(trial);
      const auto g    = logreg_loss_gradient(w, b, x, y, l2);
      const double hstep = 1e-5;
      const auto check = [&](double analytic, double fd) {
         const double e = rel_err(analytic, fd);
         worst_grad     = std::max(worst_grad, e);
         c.expect(e <= 1e-4, "logreg gradient rel err " + fmt(e));
      };
      for(std::size_t a = 0; a < k; ++a) {
         for(std::size_t j = 0; j < d; ++j) {
            auto wp = w, wm = w;
            wp[a][j] += hstep;
            wm[a][j] -= hstep;
            check(g.d_weights[a][j],
                  (logreg_loss_gradient(wp, b, x, y, l2).loss - logreg_loss_gradient(wm, b, x, y, l2).loss) / (2 * hstep));
         }
         auto bp = b, bm = b;
         bp[a] += hstep;
         bm[a] -= hstep;
         check(g.d_bias[a],
               (logreg_loss_gradient(w, bp, x, y, l2).loss - logreg_loss_gradient(w, bm, x, y, l2).loss) / (2 * hstep));
      }
   }

   std::size_t rf_queries = 0;
   for(int ds = 0; ds < 4; ++ds) {
      const auto data = random_points(rng, 200, 8, 3 + std::size_t(ds) % 3);
      Hyperparameters h;
      h.n_trees    = 31;
      const auto m = train(Algorithm::RandomForest, data, h, std::uint64_t(ds));
      const auto& forest = std::get<ForestParams>(m.parameters);
      c.expect(forest.trees.size() == 31, "tree count");
      for(int q = 0; q < 100; ++q) {
         const auto query  = random_points(rng, 1, 8, 1)[0].features;
         const auto values = query.values();
         std::vector<std::size_t> votes(m.class_set.size(), 0);
         for(const auto& t : forest.trees) ++votes[std::size_t(walk(t, values))];
         std::size_t best = 0;
         for(std::size_t i = 1; i < votes.size(); ++i)
            if(votes[i] > votes[best]) best = i;
         c.expect(predict(m, query).label == m.class_set[best], "forest majority");
         ++rf_queries;
      }
   }

   double worst_nb = 0.0;
   for(int ds = 0; ds < 5; ++ds) {
      const auto data = random_points(rng, 200, 10, 2 + std::size_t(ds));
      const auto m    = train(Algorithm::GaussianNB, data, {}, 0);
      for(int q = 0; q < 100; ++q) {
         // include far-away queries where raw likelihoods underflow
         auto query = random_points(rng, 1, 10, 1)[0].features;
         if(q % 4 == 0)
            for(std::size_t j = 0; j < 10; ++j) query.mean[j] *= 1e3;
         const auto p = predict(m, query);
         double sum   = 0.0;
         for(const double s : p.scores) {
            c.expect(std::isfinite(s) && s >= 0.0 && s <= 1.0, "nb score range");
            sum += s;
         }
         worst_nb = std::max(worst_nb, std::abs(sum - 1.0));
         c.expect(std::abs(sum - 1.0) <= 1e-9, "nb normalization");
      }
   }

   return {c.ok(), std::to_string(knn_queries) + " kNN queries exact, gradient worst rel " + fmt(worst_grad) + ", "
                       + std::to_string(rf_queries) + " forest votes, NB worst |sum-1| " + fmt(worst_nb)
                       + (c.ok() ? "" : "; " + c.summary())};
}

// ------------------------------------------------------------ criterion 6

Outcome end_to_end()
{
   Checker c;
   std::vector<LabeledVideo> items;
   for(const auto& it : generate_corpus(reference_counts(), 2024)) {
      auto features         = extract_video(filter_valid(it.sequence).first).features;
      items.push_back({std::move(features), it.label});
   }
   c.expect(items.size() == 258, "corpus size");

   const EvalConfig config{5, {}, 2024};
   const auto data = stratified_split(items, config.seed);
   std::ostringstream detail;

   std::vector<Task> tasks{Task::multi()};
   for(const auto l : all_labels())
      if(l != GaitLabel::Normal) tasks.push_back(Task::binary(l));
   for(const auto& task : tasks) {
      const auto res   = run_task(task, k_all_algorithms, data, config);
      double best_test = 0.0;
      std::string who;
      for(const auto& r : res.reports)
         if(!r.error && r.test_accuracy > best_test) {
            best_test = r.test_accuracy;
            who       = std::string(algorithm_name(r.algorithm));
         }
      const double need = task.kind == Task::Kind::MultiClass ? 0.90 : 0.95;
      c.expect(best_test >= need, to_string(task) + " best test " + fmt(best_test));
      detail << to_string(task) << " " << fmt(best_test) << " (" << who << "), ";
   }

   // chance control: same pipeline, labels permuted
   auto permuted = items;
   std::vector<GaitLabel> labels;
   for(const auto& it : permuted) labels.push_back(it.label);
   Rng rng(derive_seed(config.seed, 999));
   rng.shuffle(std::span(labels));
   for(std::size_t i = 0; i < permuted.size(); ++i) permuted[i].label = labels[i];
   const auto perm_res = run_task(Task::multi(), k_all_algorithms, stratified_split(permuted, config.seed), config);
   double cv_lo = 1.0, cv_hi = 0.0, test_lo = 1.0, test_hi = 0.0;
   for(const auto& r : perm_res.reports) {
      c.expect(!r.error, "permuted run error");
      cv_lo   = std::min(cv_lo, r.cv_accuracy);
      cv_hi   = std::max(cv_hi, r.cv_accuracy);
      test_lo = std::min(test_lo, r.test_accuracy);
      test_hi = std::max(test_hi, r.test_accuracy);
      c.expect(r.cv_accuracy >= 0.1 && r.cv_accuracy <= 0.3,
               "permuted " + std::string(algorithm_name(r.algorithm)) + " cv " + fmt(r.cv_accuracy));
   }
   detail << "permuted multi cv in [" << fmt(cv_lo) << ", " << fmt(cv_hi) << "] (test in [" << fmt(test_lo) << ", "
          << fmt(test_hi) << "])";
   return {c.ok(), detail.str() + (c.ok() ? "" : "; " + c.summary())};
}

// ------------------------------------------------------------ criterion 7

int run_cli(const std::string& args)
{
   const std::string cmd = std::string(GAITLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
   const int status      = std::system(cmd.c_str());
   return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism()
{
   Checker c;
   namespace fs  = std::filesystem;
   const fs::path dir = fs::temp_directory_path() / ("gaitlab_accept_" + std::to_string(::getpid()));
   fs::remove_all(dir);
   fs::create_directories(dir);
   const auto p = [&](const char* name) { return (dir / name).string(); };

   c.expect(run_cli("synth --seed 77 --out " + p("corpus")) == 0, "synth");
   c.expect(run_cli("extract --in " + p("corpus") + " --out " + p("f.csv")) == 0, "extract");
   const std::string eval = "eval --features " + p("f.csv") + " --algos all --task all --folds 5 --seed 77 --report ";
   c.expect(run_cli(eval + p("r1.json")) == 0, "eval 1");
   c.expect(run_cli(eval + p("r2.json")) == 0, "eval 2");

   std::size_t bytes = 0;
   if(c.ok()) {
      const auto a = read_text_file(p("r1.json"));
      const auto b = read_text_file(p("r2.json"));
      bytes        = a.size();
      c.expect(!a.empty() && a == b, "report bytes differ");
   }
   fs::remove_all(dir);
   return {c.ok(), c.ok() ? "two eval runs gave identical " + std::to_string(bytes) + "-byte reports" : c.summary()};
}

} // namespace

int main()
{
   struct Criterion
   {
      int id;
      const char* name;
      double budget_s;
      Outcome (*run)();
   };
   const Criterion criteria[] = {
       {1, "dimension fidelity", 1.0, dimension_fidelity},
       {2, "geometry oracle", 5.0, geometry_oracle},
       {3, "invariance", 5.0, invariance},
       {4, "split fidelity", 1.0, split_fidelity},
       {5, "classifier oracles", 30.0, classifier_oracles},
       {6, "end-to-end synthetic benchmark", 300.0, end_to_end},
       {7, "determinism", 300.0, determinism},
   };

   int failed = 0;
   for(const auto& cr : criteria) {
      const auto t0 = std::chrono::steady_clock::now();
      Outcome out;
      try {
         out = cr.run();
      } catch(const std::exception& e) {
         out = {false, std::string("exception: ") + e.what()};
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const bool in_time = secs <= cr.budget_s;
      const bool ok      = out.ok && in_time;
      failed += !ok;
      std::printf("%s %d %s: %s [%.2fs / %.0fs budget%s]\n", ok ? "PASS" : "FAIL", cr.id, cr.name, out.detail.c_str(),
                  secs, cr.budget_s, in_time ? "" : ", over budget");
      std::fflush(stdout);
   }
   return failed == 0 ? 0 : 1;
}
