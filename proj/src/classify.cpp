#include "gaitlab/classify.hpp"

#include "gaitlab/error.hpp"
#include "gaitlab/rng.hpp"
#include "gaitlab/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace gaitlab {

namespace {

using json = nlohmann::json;

// ------------------------------------------------------------- data prep

struct Design
{
   Matrix rows;
   std::vector<int> y; // class_set positions
   std::vector<GaitLabel> class_set;
   std::string fingerprint;
};

Design make_design(std::span<const LabeledVideo> data)
{
   if(data.empty()) throw InsufficientData("empty training set");

   Design d;
   d.fingerprint = data.front().features.schema_fingerprint;
   std::map<GaitLabel, std::size_t> per_class;
   for(const auto& item : data) {
      if(item.features.schema_fingerprint != d.fingerprint)
         throw SchemaMismatch(d.fingerprint, item.features.schema_fingerprint);
      ++per_class[item.label];
   }
   if(per_class.size() < 2) throw InsufficientData("need at least 2 classes");
   for(const auto& [label, n] : per_class) {
      if(n < 2)
         throw InsufficientData("class " + std::string(label_name(label)) + " has "
                                + std::to_string(n) + " example(s), need 2");
      d.class_set.push_back(label);
   }

   d.rows.reserve(data.size());
   d.y.reserve(data.size());
   for(const auto& item : data) {
      d.rows.push_back(item.features.values());
      const auto pos = std::lower_bound(d.class_set.begin(), d.class_set.end(), item.label);
      d.y.push_back(int(pos - d.class_set.begin()));
   }
   return d;
}

std::size_t argmax_first(std::span<const double> xs)
{
   std::size_t best = 0;
   for(std::size_t i = 1; i < xs.size(); ++i)
      if(xs[i] > xs[best]) best = i;
   return best;
}

double squared_distance(std::span<const double> a, std::span<const double> b)
{
   double s = 0.0;
   for(std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
   return s;
}

void softmax_inplace(std::vector<double>& z)
{
   const double mx = *std::max_element(z.begin(), z.end());
   double sum      = 0.0;
   for(auto& v : z) sum += (v = std::exp(v - mx));
   for(auto& v : z) v /= sum;
}

// ------------------------------------------------------------------ tree

struct TreeBuilder
{
   const Matrix& rows;
   const std::vector<int>& y;
   std::size_t n_classes;
   std::size_t max_depth;  // 0 = unlimited
   std::size_t min_leaf;
   std::size_t max_features; // 0 = all
   Rng* rng;               // feature subsampling, may be null when max_features == 0
   std::vector<TreeNode> nodes;

   std::vector<double> counts_of(std::span<const std::size_t> idx) const
   {
      std::vector<double> c(n_classes, 0.0);
      for(const auto i : idx) c[std::size_t(y[i])] += 1.0;
      return c;
   }

   int make_leaf(std::span<const std::size_t> idx)
   {
      TreeNode leaf;
      leaf.class_freq = counts_of(idx);
      for(auto& v : leaf.class_freq) v /= double(idx.size());
      nodes.push_back(std::move(leaf));
      return int(nodes.size() - 1);
   }

   int build(std::vector<std::size_t> idx, std::size_t depth)
   {
      const auto counts = counts_of(idx);
      const bool pure   = std::count_if(counts.begin(), counts.end(), [](double c) { return c > 0; }) <= 1;
      if(pure || (max_depth > 0 && depth >= max_depth) || idx.size() < 2 * min_leaf) return make_leaf(idx);

      const std::size_t n_dims = rows.front().size();
      std::vector<std::size_t> features(n_dims);
      std::iota(features.begin(), features.end(), 0);
      std::size_t n_try = n_dims;
      if(max_features > 0 && max_features < n_dims) {
         // partial Fisher-Yates; candidates are then scanned in index order
         for(std::size_t i = 0; i < max_features; ++i) std::swap(features[i], features[i + rng->index(n_dims - i)]);
         n_try = max_features;
         std::sort(features.begin(), features.begin() + std::ptrdiff_t(n_try));
      }

      // Minimize sum over children of n_c * gini_c = n_c - sum_k count_k^2 / n_c.
      double best_score = std::numeric_limits<double>::infinity();
      int best_feature  = -1;
      double best_threshold = 0.0;
      std::vector<std::size_t> order(idx);
      const auto scan = [&](std::size_t f) {
         std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rows[a][f] < rows[b][f] || (rows[a][f] == rows[b][f] && a < b);
         });
         std::vector<double> left(n_classes, 0.0);
         std::vector<double> right = counts;
         double left_sq  = 0.0;
         double right_sq = 0.0;
         for(const double c : right) right_sq += c * c;
         const std::size_t n = order.size();
         for(std::size_t i = 0; i + 1 < n; ++i) {
            const auto k = std::size_t(y[order[i]]);
            left_sq += 2.0 * left[k] + 1.0;
            left[k] += 1.0;
            right_sq -= 2.0 * right[k] - 1.0;
            right[k] -= 1.0;

            const double v0 = rows[order[i]][f];
            const double v1 = rows[order[i + 1]][f];
            const std::size_t nl = i + 1;
            const std::size_t nr = n - nl;
            if(!(v0 < v1) || nl < min_leaf || nr < min_leaf) continue;
            const double score = (double(nl) - left_sq / double(nl)) + (double(nr) - right_sq / double(nr));
            if(score < best_score) {
               best_score     = score;
               best_feature   = int(f);
               best_threshold = 0.5 * (v0 + v1);
               if(!(best_threshold < v1)) best_threshold = v0;
            }
         }
      };
      for(std::size_t fi = 0; fi < n_try; ++fi) scan(features[fi]);
      // Every sampled feature was constant here: keep drawing until one splits.
      for(std::size_t fi = n_try; best_feature < 0 && fi < n_dims; ++fi) {
         std::swap(features[fi], features[fi + rng->index(n_dims - fi)]);
         scan(features[fi]);
      }
      if(best_feature < 0) return make_leaf(idx);

      std::vector<std::size_t> li;
      std::vector<std::size_t> ri;
      for(const auto i : idx) (rows[i][std::size_t(best_feature)] <= best_threshold ? li : ri).push_back(i);

      const int me = int(nodes.size());
      nodes.push_back(TreeNode{best_feature, best_threshold, -1, -1, {}});
      const int l      = build(std::move(li), depth + 1);
      const int r      = build(std::move(ri), depth + 1);
      nodes[std::size_t(me)].left  = l;
      nodes[std::size_t(me)].right = r;
      return me;
   }
};

DecisionTree grow_tree(const Matrix& rows,
                       const std::vector<int>& y,
                       std::vector<std::size_t> idx,
                       std::size_t n_classes,
                       const Hyperparameters& h,
                       std::size_t max_features,
                       Rng* rng)
{
   TreeBuilder b{rows, y, n_classes, h.max_depth, std::max<std::size_t>(1, h.min_samples_leaf), max_features, rng, {}};
   b.build(std::move(idx), 0);
   return DecisionTree{std::move(b.nodes)};
}

// ------------------------------------------------------------- trainers

KnnParams train_knn(const Design& d)
{
   KnnParams p;
   p.scaler = Standardizer::fit(d.rows);
   for(const auto& r : d.rows) p.points.push_back(p.scaler.transform(r));
   p.labels = d.y;
   return p;
}

GnbParams train_gnb(const Design& d, const Hyperparameters& h)
{
   const std::size_t c = d.class_set.size();
   const std::size_t m = d.rows.front().size();
   GnbParams p;
   p.means.assign(c, std::vector<double>(m, 0.0));
   p.variances.assign(c, std::vector<double>(m, 0.0));
   p.priors.assign(c, 0.0);
   for(std::size_t i = 0; i < d.rows.size(); ++i) {
      const auto k = std::size_t(d.y[i]);
      p.priors[k] += 1.0;
      for(std::size_t j = 0; j < m; ++j) p.means[k][j] += d.rows[i][j];
   }
   for(std::size_t k = 0; k < c; ++k)
      for(auto& v : p.means[k]) v /= p.priors[k];
   for(std::size_t i = 0; i < d.rows.size(); ++i) {
      const auto k = std::size_t(d.y[i]);
      for(std::size_t j = 0; j < m; ++j) {
         const double e = d.rows[i][j] - p.means[k][j];
         p.variances[k][j] += e * e;
      }
   }
   for(std::size_t k = 0; k < c; ++k) {
      for(auto& v : p.variances[k]) v = std::max(v / p.priors[k], h.var_floor);
      p.priors[k] /= double(d.rows.size());
   }
   return p;
}

std::vector<double> logits(const Matrix& w, std::span<const double> b, std::span<const double> x)
{
   std::vector<double> z(b.begin(), b.end());
   for(std::size_t k = 0; k < w.size(); ++k)
      for(std::size_t j = 0; j < x.size(); ++j) z[k] += w[k][j] * x[j];
   return z;
}

LogRegParams train_logreg(const Design& d, const Hyperparameters& h, std::uint64_t seed)
{
   const std::size_t c = d.class_set.size();
   const std::size_t m = d.rows.front().size();
   const std::size_t n = d.rows.size();

   LogRegParams p;
   p.scaler = Standardizer::fit(d.rows);
   Matrix z;
   for(const auto& r : d.rows) z.push_back(p.scaler.transform(r));
   p.weights.assign(c, std::vector<double>(m, 0.0));
   p.bias.assign(c, 0.0);

   Rng rng(seed);
   std::vector<std::size_t> order(n);
   std::iota(order.begin(), order.end(), 0);
   const std::size_t batch = std::max<std::size_t>(1, h.batch_size);
   Matrix gw(c, std::vector<double>(m));
   std::vector<double> gb(c);
   for(std::size_t epoch = 0; epoch < h.epochs; ++epoch) {
      rng.shuffle(std::span(order));
      for(std::size_t start = 0; start < n; start += batch) {
         const std::size_t end = std::min(n, start + batch);
         for(auto& row : gw) std::fill(row.begin(), row.end(), 0.0);
         std::fill(gb.begin(), gb.end(), 0.0);
         for(std::size_t bi = start; bi < end; ++bi) {
            const auto& x = z[order[bi]];
            auto prob     = logits(p.weights, p.bias, x);
            softmax_inplace(prob);
            prob[std::size_t(d.y[order[bi]])] -= 1.0;
            for(std::size_t k = 0; k < c; ++k) {
               gb[k] += prob[k];
               for(std::size_t j = 0; j < m; ++j) gw[k][j] += prob[k] * x[j];
            }
         }
         const double inv = 1.0 / double(end - start);
         for(std::size_t k = 0; k < c; ++k) {
            p.bias[k] -= h.learning_rate * gb[k] * inv;
            for(std::size_t j = 0; j < m; ++j)
               p.weights[k][j] -= h.learning_rate * (gw[k][j] * inv + h.l2 * p.weights[k][j]);
         }
      }
   }
   return p;
}

std::vector<double> tree_scores(const DecisionTree& t, std::span<const double> x) { return t.leaf_for(x).class_freq; }

// ------------------------------------------------------------------ json

json matrix_json(const Matrix& m)
{
   json a = json::array();
   for(const auto& r : m) a.push_back(r);
   return a;
}

Matrix matrix_from(const json& j) { return j.get<Matrix>(); }

json standardizer_json(const Standardizer& s) { return {{"mean", s.mean}, {"scale", s.scale}}; }
Standardizer standardizer_from(const json& j)
{
   return {j.at("mean").get<std::vector<double>>(), j.at("scale").get<std::vector<double>>()};
}

json tree_json(const DecisionTree& t)
{
   json nodes = json::array();
   for(const auto& n : t.nodes) {
      if(n.feature < 0)
         nodes.push_back({{"leaf", n.class_freq}});
      else
         nodes.push_back({{"feature", n.feature}, {"threshold", n.threshold}, {"left", n.left}, {"right", n.right}});
   }
   return nodes;
}

DecisionTree tree_from(const json& j)
{
   DecisionTree t;
   for(const auto& n : j) {
      TreeNode node;
      if(n.contains("leaf")) {
         node.class_freq = n.at("leaf").get<std::vector<double>>();
      } else {
         node.feature   = n.at("feature").get<int>();
         node.threshold = n.at("threshold").get<double>();
         node.left      = n.at("left").get<int>();
         node.right     = n.at("right").get<int>();
      }
      t.nodes.push_back(std::move(node));
   }
   const auto n_nodes = int(t.nodes.size());
   for(const auto& node : t.nodes)
      if(node.feature >= 0 && (node.left <= 0 || node.right <= 0 || node.left >= n_nodes || node.right >= n_nodes))
         throw Error(ErrorKind::Input, "model file: tree child index out of range");
   if(t.nodes.empty()) throw Error(ErrorKind::Input, "model file: empty tree");
   return t;
}

json hyper_json(const Hyperparameters& h)
{
   return {{"k", h.k},
           {"max_depth", h.max_depth},
           {"min_samples_leaf", h.min_samples_leaf},
           {"n_trees", h.n_trees},
           {"max_features", h.max_features},
           {"bootstrap", h.bootstrap},
           {"var_floor", h.var_floor},
           {"learning_rate", h.learning_rate},
           {"epochs", h.epochs},
           {"batch_size", h.batch_size},
           {"l2", h.l2}};
}

Hyperparameters hyper_from(const json& j)
{
   Hyperparameters h;
   h.k                = j.at("k").get<std::size_t>();
   h.max_depth        = j.at("max_depth").get<std::size_t>();
   h.min_samples_leaf = j.at("min_samples_leaf").get<std::size_t>();
   h.n_trees          = j.at("n_trees").get<std::size_t>();
   h.max_features     = j.at("max_features").get<std::size_t>();
   h.bootstrap        = j.at("bootstrap").get<bool>();
   h.var_floor        = j.at("var_floor").get<double>();
   h.learning_rate    = j.at("learning_rate").get<double>();
   h.epochs           = j.at("epochs").get<std::size_t>();
   h.batch_size       = j.at("batch_size").get<std::size_t>();
   h.l2               = j.at("l2").get<double>();
   return h;
}

} // namespace

// ----------------------------------------------------------------- public

std::string_view algorithm_name(Algorithm a) noexcept
{
   switch(a) {
   case Algorithm::KNN: return "knn";
   case Algorithm::DecisionTree: return "tree";
   case Algorithm::RandomForest: return "forest";
   case Algorithm::GaussianNB: return "gnb";
   case Algorithm::LogRegSGD: return "logreg";
   }
   return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) noexcept
{
   for(const auto a : k_all_algorithms)
      if(algorithm_name(a) == name) return a;
   return std::nullopt;
}

Standardizer Standardizer::fit(const Matrix& rows)
{
   Standardizer s;
   if(rows.empty()) return s;
   const std::size_t m = rows.front().size();
   const double n      = double(rows.size());
   s.mean.assign(m, 0.0);
   s.scale.assign(m, 0.0);
   for(const auto& r : rows)
      for(std::size_t j = 0; j < m; ++j) s.mean[j] += r[j];
   for(auto& v : s.mean) v /= n;
   for(const auto& r : rows)
      for(std::size_t j = 0; j < m; ++j) s.scale[j] += (r[j] - s.mean[j]) * (r[j] - s.mean[j]);
   for(std::size_t j = 0; j < m; ++j) {
      const double sd = std::sqrt(s.scale[j] / n);
      // relative floor keeps the test scale-free
      s.scale[j] = (sd == 0.0 || sd <= 1e-10 * std::abs(s.mean[j])) ? 1.0 : sd;
   }
   return s;
}

std::vector<double> Standardizer::transform(std::span<const double> x) const
{
   std::vector<double> z(x.size());
   for(std::size_t j = 0; j < x.size(); ++j) z[j] = (x[j] - mean[j]) / scale[j];
   return z;
}

const TreeNode& DecisionTree::leaf_for(std::span<const double> x) const
{
   std::size_t i = 0;
   while(nodes[i].feature >= 0)
      i = std::size_t(x[std::size_t(nodes[i].feature)] <= nodes[i].threshold ? nodes[i].left : nodes[i].right);
   return nodes[i];
}

TrainedModel train(Algorithm algorithm, std::span<const LabeledVideo> data, const Hyperparameters& hyper, std::uint64_t seed)
{
   const Design d = make_design(data);

   TrainedModel model;
   model.algorithm          = algorithm;
   model.hyper              = hyper;
   model.class_set          = d.class_set;
   model.schema_fingerprint = d.fingerprint;
   model.n_features         = d.rows.front().size();
   model.seed               = seed;

   const std::size_t n_classes = d.class_set.size();
   std::vector<std::size_t> all(d.rows.size());
   std::iota(all.begin(), all.end(), 0);

   switch(algorithm) {
   case Algorithm::KNN:
      if(hyper.k < 1) throw std::invalid_argument("k must be >= 1");
      model.parameters = train_knn(d);
      break;
   case Algorithm::DecisionTree:
      model.parameters = TreeParams{grow_tree(d.rows, d.y, all, n_classes, hyper, 0, nullptr)};
      break;
   case Algorithm::RandomForest: {
      if(hyper.n_trees < 1) throw std::invalid_argument("n_trees must be >= 1");
      const std::size_t mf = hyper.max_features > 0
                                 ? hyper.max_features
                                 : std::max<std::size_t>(1, std::size_t(std::sqrt(double(model.n_features))));
      ForestParams fp;
      for(std::size_t t = 0; t < hyper.n_trees; ++t) {
         const auto ts = derive_seed(seed, t);
         Rng rng(ts);
         std::vector<std::size_t> sample = all;
         if(hyper.bootstrap)
            for(auto& s : sample) s = rng.index(all.size());
         std::sort(sample.begin(), sample.end());
         fp.trees.push_back(grow_tree(d.rows, d.y, std::move(sample), n_classes, hyper, mf, &rng));
         fp.tree_seeds.push_back(ts);
      }
      model.parameters = std::move(fp);
      break;
   }
   case Algorithm::GaussianNB: model.parameters = train_gnb(d, hyper); break;
   case Algorithm::LogRegSGD: model.parameters = train_logreg(d, hyper, seed); break;
   }
   return model;
}

Prediction predict(const TrainedModel& model, const VideoFeatures& features)
{
   if(features.schema_fingerprint != model.schema_fingerprint)
      throw SchemaMismatch(model.schema_fingerprint, features.schema_fingerprint);
   return predict_values(model, features.values());
}

Prediction predict_values(const TrainedModel& model, std::span<const double> x)
{
   if(x.size() != model.n_features)
      throw std::invalid_argument("expected " + std::to_string(model.n_features) + " features, got "
                                  + std::to_string(x.size()));
   const std::size_t c = model.class_set.size();
   Prediction out;
   out.scores.assign(c, 0.0);

   std::visit(
       [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr(std::is_same_v<P, KnnParams>) {
             const auto z = p.scaler.transform(x);
             std::vector<std::pair<double, std::size_t>> dist(p.points.size());
             for(std::size_t i = 0; i < p.points.size(); ++i) dist[i] = {squared_distance(z, p.points[i]), i};
             const std::size_t k = std::min(model.hyper.k, dist.size());
             std::partial_sort(dist.begin(), dist.begin() + std::ptrdiff_t(k), dist.end());
             for(std::size_t i = 0; i < k; ++i) out.scores[std::size_t(p.labels[dist[i].second])] += 1.0;
             for(auto& s : out.scores) s /= double(k);
          } else if constexpr(std::is_same_v<P, TreeParams>) {
             out.scores = tree_scores(p.tree, x);
          } else if constexpr(std::is_same_v<P, ForestParams>) {
             for(const auto& t : p.trees) out.scores[argmax_first(t.leaf_for(x).class_freq)] += 1.0;
             for(auto& s : out.scores) s /= double(p.trees.size());
          } else if constexpr(std::is_same_v<P, GnbParams>) {
             for(std::size_t k = 0; k < c; ++k) {
                double lp = std::log(p.priors[k]);
                for(std::size_t j = 0; j < x.size(); ++j) {
                   const double v = p.variances[k][j];
                   const double e = x[j] - p.means[k][j];
                   lp -= 0.5 * std::log(2.0 * std::numbers::pi * v) + e * e / (2.0 * v);
                }
                out.scores[k] = lp;
             }
             softmax_inplace(out.scores);
          } else {
             out.scores = logits(p.weights, p.bias, p.scaler.transform(x));
             softmax_inplace(out.scores);
          }
       },
       model.parameters);

   out.label = model.class_set[argmax_first(out.scores)];
   return out;
}

GaitLabel predict_tree(const TrainedModel& forest, std::size_t tree, std::span<const double> x)
{
   const auto* p = std::get_if<ForestParams>(&forest.parameters);
   if(!p) throw std::invalid_argument("not a random forest model");
   return forest.class_set[argmax_first(p->trees.at(tree).leaf_for(x).class_freq)];
}

GaitLabel knn_brute_force_oracle(std::span<const LabeledVideo> train,
                                 const VideoFeatures& query,
                                 std::size_t k,
                                 bool standardize)
{
   Matrix rows;
   std::vector<GaitLabel> classes;
   for(const auto& item : train) {
      rows.push_back(item.features.values());
      if(std::find(classes.begin(), classes.end(), item.label) == classes.end()) classes.push_back(item.label);
   }
   std::sort(classes.begin(), classes.end());

   std::vector<double> q = query.values();
   if(standardize) {
      const auto scaler = Standardizer::fit(rows);
      for(auto& r : rows) r = scaler.transform(r);
      q = scaler.transform(q);
   }

   std::vector<double> dist;
   for(const auto& r : rows) dist.push_back(squared_distance(q, r));

   // k passes of a full scan; strict < keeps the lowest index among ties
   std::vector<bool> taken(rows.size(), false);
   std::map<GaitLabel, std::size_t> votes;
   for(std::size_t step = 0; step < k && step < rows.size(); ++step) {
      std::size_t best = rows.size();
      for(std::size_t i = 0; i < rows.size(); ++i)
         if(!taken[i] && (best == rows.size() || dist[i] < dist[best])) best = i;
      taken[best] = true;
      ++votes[train[best].label];
   }

   GaitLabel winner      = classes.front();
   std::size_t top_votes = 0;
   for(const auto c : classes)
      if(votes[c] > top_votes) {
         top_votes = votes[c];
         winner    = c;
      }
   return winner;
}

LogRegGradient logreg_loss_gradient(const Matrix& weights,
                                    std::span<const double> bias,
                                    const Matrix& rows,
                                    std::span<const int> labels,
                                    double l2)
{
   const std::size_t c = weights.size();
   const std::size_t m = weights.empty() ? 0 : weights.front().size();
   LogRegGradient g;
   g.d_weights.assign(c, std::vector<double>(m, 0.0));
   g.d_bias.assign(c, 0.0);
   const double inv = 1.0 / double(rows.size());
   for(std::size_t i = 0; i < rows.size(); ++i) {
      auto p       = logits(weights, bias, rows[i]);
      const auto y = std::size_t(labels[i]);
      const double mx = *std::max_element(p.begin(), p.end());
      double lse      = 0.0;
      for(const double v : p) lse += std::exp(v - mx);
      g.loss += (mx + std::log(lse) - p[y]) * inv;
      softmax_inplace(p);
      p[y] -= 1.0;
      for(std::size_t k = 0; k < c; ++k) {
         g.d_bias[k] += p[k] * inv;
         for(std::size_t j = 0; j < m; ++j) g.d_weights[k][j] += p[k] * rows[i][j] * inv;
      }
   }
   for(std::size_t k = 0; k < c; ++k)
      for(std::size_t j = 0; j < m; ++j) {
         g.loss += 0.5 * l2 * weights[k][j] * weights[k][j];
         g.d_weights[k][j] += l2 * weights[k][j];
      }
   return g;
}

json model_to_json(const TrainedModel& model)
{
   json params;
   std::visit(
       [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr(std::is_same_v<P, KnnParams>) {
             params = {{"scaler", standardizer_json(p.scaler)}, {"points", matrix_json(p.points)}, {"labels", p.labels}};
          } else if constexpr(std::is_same_v<P, TreeParams>) {
             params = {{"tree", tree_json(p.tree)}};
          } else if constexpr(std::is_same_v<P, ForestParams>) {
             json trees = json::array();
             for(const auto& t : p.trees) trees.push_back(tree_json(t));
             params = {{"trees", trees}, {"tree_seeds", p.tree_seeds}};
          } else if constexpr(std::is_same_v<P, GnbParams>) {
             params = {{"means", matrix_json(p.means)}, {"variances", matrix_json(p.variances)}, {"priors", p.priors}};
          } else {
             params = {{"scaler", standardizer_json(p.scaler)}, {"weights", matrix_json(p.weights)}, {"bias", p.bias}};
          }
       },
       model.parameters);

   json classes = json::array();
   for(const auto l : model.class_set) classes.push_back(std::string(label_name(l)));
   return {{"format", "gaitmodel"},
           {"version", k_model_format_version},
           {"algorithm", std::string(algorithm_name(model.algorithm))},
           {"class_set", classes},
           {"schema_fingerprint", model.schema_fingerprint},
           {"n_features", model.n_features},
           {"seed", model.seed},
           {"hyperparameters", hyper_json(model.hyper)},
           {"parameters", params}};
}

TrainedModel model_from_json(const json& doc)
{
   try {
      if(doc.at("format").get<std::string>() != "gaitmodel") throw Error(ErrorKind::Input, "not a gaitmodel document");
      if(doc.at("version").get<int>() != k_model_format_version)
         throw Error(ErrorKind::Input, "unsupported gaitmodel version " + doc.at("version").dump());

      TrainedModel m;
      const auto algo = algorithm_from_name(doc.at("algorithm").get<std::string>());
      if(!algo) throw Error(ErrorKind::Input, "unknown algorithm " + doc.at("algorithm").dump());
      m.algorithm = *algo;
      for(const auto& name : doc.at("class_set")) {
         const auto l = label_from_name(name.get<std::string>());
         if(!l) throw Error(ErrorKind::Input, "unknown label " + name.dump());
         m.class_set.push_back(*l);
      }
      if(m.class_set.empty()) throw Error(ErrorKind::Input, "model has an empty class set");
      m.schema_fingerprint = doc.at("schema_fingerprint").get<std::string>();
      m.n_features         = doc.at("n_features").get<std::size_t>();
      m.seed               = doc.at("seed").get<std::uint64_t>();
      m.hyper              = hyper_from(doc.at("hyperparameters"));

      const auto& p = doc.at("parameters");
      switch(m.algorithm) {
      case Algorithm::KNN:
         m.parameters = KnnParams{standardizer_from(p.at("scaler")), matrix_from(p.at("points")),
                                  p.at("labels").get<std::vector<int>>()};
         break;
      case Algorithm::DecisionTree: m.parameters = TreeParams{tree_from(p.at("tree"))}; break;
      case Algorithm::RandomForest: {
         ForestParams fp;
         for(const auto& t : p.at("trees")) fp.trees.push_back(tree_from(t));
         fp.tree_seeds = p.at("tree_seeds").get<std::vector<std::uint64_t>>();
         if(fp.trees.empty()) throw Error(ErrorKind::Input, "forest without trees");
         m.parameters = std::move(fp);
         break;
      }
      case Algorithm::GaussianNB:
         m.parameters = GnbParams{matrix_from(p.at("means")), matrix_from(p.at("variances")),
                                  p.at("priors").get<std::vector<double>>()};
         break;
      case Algorithm::LogRegSGD:
         m.parameters = LogRegParams{standardizer_from(p.at("scaler")), matrix_from(p.at("weights")),
                                     p.at("bias").get<std::vector<double>>()};
         break;
      }
      return m;
   } catch(const json::exception& e) {
      throw Error(ErrorKind::Input, std::string("malformed model file: ") + e.what());
   }
}

std::string serialize_model(const TrainedModel& model) { return model_to_json(model).dump(1) + "\n"; }

void save_model(const std::filesystem::path& path, const TrainedModel& model)
{
   write_text_file(path, serialize_model(model));
}

TrainedModel load_model(const std::filesystem::path& path)
{
   json doc;
   try {
      doc = json::parse(read_text_file(path));
   } catch(const json::parse_error& e) {
      throw Error(ErrorKind::Input, "model file " + path.string() + ": " + e.what());
   }
   return model_from_json(doc);
}

} // namespace gaitlab
