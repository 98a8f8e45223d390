// Copyright 2026 The kurev Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kurev/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "kurev/error.hpp"

namespace kurev {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double median_of(std::vector<double> v) { return quantile(std::move(v), 0.5); }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Uniform real in [0, 1) from the raw engine so results do not depend on the
// standard library's distribution implementations.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Run {
  std::vector<int> labels;
  Eigen::MatrixXd centroids;
  double inertia = 0.0;
  std::vector<double> trace;
};

Eigen::MatrixXd seed_plus_plus(const Eigen::MatrixXd& x, int k, std::mt19937_64& rng) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd c(k, x.cols());
  c.row(0) = x.row(static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n)));
  Eigen::VectorXd d2(n);
  for (Eigen::Index i = 0; i < n; ++i) d2(i) = (x.row(i) - c.row(0)).squaredNorm();
  for (int j = 1; j < k; ++j) {
    const double total = d2.sum();
    Eigen::Index pick = 0;
    if (total <= 0.0) {
      pick = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n));
    } else {
      double r = unit(rng) * total;
      pick = n - 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        r -= d2(i);
        if (r < 0.0) {
          pick = i;
          break;
        }
      }
    }
    c.row(j) = x.row(pick);
    for (Eigen::Index i = 0; i < n; ++i) {
      d2(i) = std::min(d2(i), (x.row(i) - c.row(j)).squaredNorm());
    }
  }
  return c;
}

double objective(const Eigen::MatrixXd& x, const std::vector<int>& labels,
                 const Eigen::MatrixXd& c) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) s += (x.row(i) - c.row(labels[i])).squaredNorm();
  return s;
}

Run lloyd(const Eigen::MatrixXd& x, int k, std::mt19937_64& rng, int max_iter) {
  const Eigen::Index n = x.rows();
  Run run;
  run.centroids = seed_plus_plus(x, k, rng);
  run.labels.assign(static_cast<std::size_t>(n), -1);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int j = 0; j < k; ++j) {
        const double d = (x.row(i) - run.centroids.row(j)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = j;
        }
      }
      if (run.labels[i] != best) {
        run.labels[i] = best;
        changed = true;
      }
    }
    // Empty clusters take the point farthest from its centroid, never
    // emptying another cluster.
    for (int j = 0; j < k; ++j) {
      std::vector<int> sizes(static_cast<std::size_t>(k), 0);
      for (int l : run.labels) ++sizes[l];
      if (sizes[j] > 0) continue;
      Eigen::Index far = -1;
      double far_d = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (sizes[run.labels[i]] < 2) continue;
        const double d = (x.row(i) - run.centroids.row(run.labels[i])).squaredNorm();
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      if (far < 0) continue;
      run.labels[far] = j;
      run.centroids.row(j) = x.row(far);
      changed = true;
    }
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(k, x.cols());
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      next.row(run.labels[i]) += x.row(i);
      ++sizes[run.labels[i]];
    }
    for (int j = 0; j < k; ++j) {
      if (sizes[j] > 0) next.row(j) /= sizes[j];
      else next.row(j) = run.centroids.row(j);
    }
    run.centroids = next;
    run.trace.push_back(objective(x, run.labels, run.centroids));
    if (!changed && iter > 0) break;
  }
  run.inertia = run.trace.empty() ? 0.0 : run.trace.back();
  return run;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SetupError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw SetupError("cannot write " + path.string());
}

}  // namespace

PcaResult pca(const Eigen::MatrixXd& data, double variance_threshold) {
  if (data.rows() < 2) throw ParameterError("PCA needs at least two rows");
  if (!(variance_threshold > 0.0 && variance_threshold <= 1.0)) {
    throw ParameterError("variance threshold must lie in (0, 1]");
  }
  PcaResult r;
  r.mean = data.colwise().mean().transpose();
  const Eigen::MatrixXd centered = data.rowwise() - r.mean.transpose();
  const Eigen::MatrixXd cov =
      centered.transpose() * centered / static_cast<double>(data.rows() - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw InternalError("eigen decomposition failed");
  const Eigen::Index d = data.cols();
  r.components.resize(d, d);
  r.explained_variance.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Eigen::Index src = d - 1 - i;
    r.explained_variance(i) = std::max(0.0, solver.eigenvalues()(src));
    Eigen::VectorXd v = solver.eigenvectors().col(src);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0) v = -v;
    r.components.col(i) = v;
  }
  const double total = r.explained_variance.sum();
  if (!(total > 0.0) || centered.cwiseAbs().maxCoeff() == 0.0) {
    throw DegenerateDataError("all rows are identical; no variance to explain");
  }
  double cum = 0.0;
  r.retained = static_cast<int>(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    cum += r.explained_variance(i);
    if (cum / total >= variance_threshold - 1e-12) {
      r.retained = static_cast<int>(i + 1);
      break;
    }
  }
  r.projected = centered * r.components.leftCols(r.retained);
  return r;
}

Eigen::MatrixXd pca_reduce(const Eigen::MatrixXd& data, double variance_threshold) {
  return pca(data, variance_threshold).projected;
}

Clustering kmeans(const Eigen::MatrixXd& data, int k, std::uint64_t seed,
                  const KmeansOptions& options) {
  if (k < 2) throw ParameterError("k must be at least 2");
  if (k > data.rows()) {
    throw ParameterError("k = " + std::to_string(k) + " exceeds the " +
                         std::to_string(data.rows()) + " points");
  }
  if (options.max_iter < 1 || options.restarts < 1) {
    throw ParameterError("max_iter and restarts must be positive");
  }
  std::mt19937_64 rng(seed);
  Run best;
  bool have = false;
  for (int r = 0; r < options.restarts; ++r) {
    Run run = lloyd(data, k, rng, options.max_iter);
    if (!have || run.inertia < best.inertia) {
      best = std::move(run);
      have = true;
    }
  }
  Clustering c;
  c.k = k;
  c.labels = std::move(best.labels);
  c.centroids = std::move(best.centroids);
  c.inertia = best.inertia;
  c.inertia_trace = std::move(best.trace);
  return c;
}

double median_silhouette(const Eigen::MatrixXd& data, const std::vector<int>& labels) {
  if (labels.size() != static_cast<std::size_t>(data.rows())) {
    throw ParameterError("label count differs from row count");
  }
  const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<int> sizes(static_cast<std::size_t>(std::max(k, 0)), 0);
  for (int l : labels) {
    if (l < 0) throw ParameterError("negative cluster label");
    ++sizes[l];
  }
  const auto populated = std::count_if(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
  if (populated < 2) throw UndefinedMetricError("silhouette needs at least two clusters");
  const Eigen::Index n = data.rows();
  std::vector<double> s(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int own = labels[i];
    if (sizes[own] < 2) continue;
    std::vector<double> sum(static_cast<std::size_t>(k), 0.0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) sum[labels[j]] += (data.row(i) - data.row(j)).norm();
    }
    const double a = sum[own] / (sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      if (c != own && sizes[c] > 0) b = std::min(b, sum[c] / sizes[c]);
    }
    const double m = std::max(a, b);
    s[i] = m > 0.0 ? (b - a) / m : 0.0;
  }
  return median_of(std::move(s));
}

KSelection select_k(const Eigen::MatrixXd& data, int k_min, int k_max, double threshold,
                    std::uint64_t seed, const KmeansOptions& options) {
  const int lo = std::max(2, k_min);
  const int hi = std::min<int>(k_max, static_cast<int>(data.rows()));
  if (lo > hi) {
    throw ParameterError("no K in [" + std::to_string(k_min) + ", " + std::to_string(k_max) +
                         "] fits " + std::to_string(data.rows()) + " points");
  }
  KSelection sel;
  std::vector<Clustering> runs;
  for (int k = lo; k <= hi; ++k) {
    Clustering c = kmeans(data, k, splitmix(seed ^ static_cast<std::uint64_t>(k)), options);
    c.median_silhouette = median_silhouette(data, c.labels);
    sel.curve.emplace_back(k, c.median_silhouette);
    runs.push_back(std::move(c));
  }
  const Clustering* pick = nullptr;
  for (const auto& c : runs) {
    if (c.median_silhouette >= threshold) pick = &c;
  }
  if (!pick) {
    sel.below_threshold = true;
    pick = &runs.front();
    for (const auto& c : runs) {
      if (c.median_silhouette > pick->median_silhouette) pick = &c;
    }
  }
  sel.best = *pick;
  return sel;
}

double gini(const std::vector<double>& sizes) {
  if (sizes.empty()) throw ParameterError("gini of an empty list");
  double total = 0.0;
  for (double v : sizes) {
    if (!(v > 0.0)) throw ParameterError("gini sizes must be positive");
    total += v;
  }
  double diff = 0.0;
  for (double a : sizes) {
    for (double b : sizes) diff += std::abs(a - b);
  }
  const double n = static_cast<double>(sizes.size());
  return diff / (2.0 * n * total);
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw ParameterError("quantile of an empty list");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<DiffValueRecord> diff_values(const Eigen::MatrixXd& p_ku,
                                         const std::vector<int>& labels, int k) {
  if (p_ku.cols() != kKuCount) throw ParameterError("P_ku must have 28 columns");
  if (labels.size() != static_cast<std::size_t>(p_ku.rows()) || p_ku.rows() == 0) {
    throw ParameterError("label count differs from row count");
  }
  std::vector<DiffValueRecord> out;
  for (int j = 0; j < kKuCount; ++j) {
    std::vector<double> column(p_ku.col(j).data(), p_ku.col(j).data() + p_ku.rows());
    const double med = quantile(column, 0.5);
    const double q1 = quantile(column, 0.25);
    const double q3 = quantile(column, 0.75);
    for (int c = 0; c < k; ++c) {
      std::vector<double> sub;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == c) sub.push_back(column[i]);
      }
      if (sub.empty()) continue;
      DiffValueRecord r;
      r.cluster = c;
      r.ku = KuId::from_slot(static_cast<std::size_t>(j));
      r.cluster_median = quantile(std::move(sub), 0.5);
      r.overall_median = med;
      r.q1 = q1;
      r.q3 = q3;
      r.diff_value = r.cluster_median - med;
      r.flagged = r.cluster_median < q1 || r.cluster_median > q3;
      out.push_back(r);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.cluster < b.cluster; });
  return out;
}

void write_cluster_outputs(const std::filesystem::path& dir,
                           const std::vector<std::string>& developers, const KSelection& sel,
                           const std::vector<DiffValueRecord>& diffs, int pca_components) {
  std::filesystem::create_directories(dir);
  std::ostringstream labels;
  labels << "developer\tcluster\n";
  for (std::size_t i = 0; i < developers.size(); ++i) {
    labels << developers[i] << '\t' << sel.best.labels.at(i) << '\n';
  }
  write_text(dir / "labels.tsv", labels.str());

  std::ostringstream curve;
  curve << "k\tmedian_silhouette\n";
  for (const auto& [k, s] : sel.curve) curve << k << '\t' << num(s) << '\n';
  write_text(dir / "silhouette.tsv", curve.str());

  std::vector<double> sizes(static_cast<std::size_t>(sel.best.k), 0.0);
  for (int l : sel.best.labels) sizes[l] += 1.0;
  std::ostringstream summary;
  summary << "key\tvalue\n"
          << "developers\t" << developers.size() << '\n'
          << "pca_components\t" << pca_components << '\n'
          << "k\t" << sel.best.k << '\n'
          << "median_silhouette\t" << num(sel.best.median_silhouette) << '\n'
          << "below_threshold\t" << (sel.below_threshold ? "yes" : "no") << '\n'
          << "gini\t" << num(gini(sizes)) << '\n';
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    summary << "size_" << c << '\t' << sizes[c] << '\n';
  }
  write_text(dir / "summary.tsv", summary.str());

  std::ostringstream dv;
  dv << "cluster\tku\tcluster_median\toverall_median\tq1\tq3\tdiff_value\tflagged\n";
  for (const auto& r : diffs) {
    dv << r.cluster << '\t' << r.ku.label() << '\t' << num(r.cluster_median) << '\t'
       << num(r.overall_median) << '\t' << num(r.q1) << '\t' << num(r.q3) << '\t'
       << num(r.diff_value) << '\t' << (r.flagged ? "yes" : "no") << '\n';
  }
  write_text(dir / "diff_values.tsv", dv.str());
}

}  // namespace kurev
