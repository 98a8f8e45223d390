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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kurev/ku.hpp"

namespace kurev {

struct PcaResult {
  Eigen::VectorXd mean;
  /// Unit-norm principal axes as columns, by decreasing variance.
  Eigen::MatrixXd components;
  Eigen::VectorXd explained_variance;
  /// Smallest count whose cumulative explained-variance ratio reaches the threshold.
  int retained = 0;
  /// Centered rows projected onto the retained axes.
  Eigen::MatrixXd projected;
};

/// Throws ParameterError for fewer than two rows or a threshold outside
/// (0, 1], DegenerateDataError when every row is identical.
PcaResult pca(const Eigen::MatrixXd& data, double variance_threshold = 0.95);
Eigen::MatrixXd pca_reduce(const Eigen::MatrixXd& data, double variance_threshold = 0.95);

struct Clustering {
  int k = 0;
  std::vector<int> labels;  // per row, dense in 0..k-1
  Eigen::MatrixXd centroids;
  double inertia = 0.0;
  /// Objective after each Lloyd iteration of the retained run.
  std::vector<double> inertia_trace;
  double median_silhouette = 0.0;
};

struct KmeansOptions {
  int max_iter = 300;
  int restarts = 10;
};

/// Lloyd iterations from k-means++ seeds; keeps the best of `restarts` runs.
/// Throws ParameterError unless 2 <= k <= rows. The silhouette is not filled.
Clustering kmeans(const Eigen::MatrixXd& data, int k, std::uint64_t seed,
                  const KmeansOptions& options = {});

/// Median over rows of (b - a) / max(a, b). Points alone in their cluster, or
/// with a = b = 0, score 0. Throws UndefinedMetricError for fewer than two
/// clusters.
double median_silhouette(const Eigen::MatrixXd& data, const std::vector<int>& labels);

struct KSelection {
  Clustering best;
  bool below_threshold = false;
  std::vector<std::pair<int, double>> curve;  // (K, median silhouette)
};

/// Largest K in [k_min, min(k_max, rows)] whose median silhouette reaches
/// `threshold`; otherwise the K with the highest median, flagged.
KSelection select_k(const Eigen::MatrixXd& data, int k_min, int k_max, double threshold,
                    std::uint64_t seed, const KmeansOptions& options = {});

/// Mean absolute difference over twice the mean. Throws ParameterError on
/// empty input or a non-positive size.
double gini(const std::vector<double>& sizes);

/// Linear-interpolation quantile ("type 7") of unsorted values.
double quantile(std::vector<double> values, double p);

struct DiffValueRecord {
  int cluster = 0;
  KuId ku = KuId::of(1);
  double cluster_median = 0.0;
  double overall_median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double diff_value = 0.0;
  bool flagged = false;  // cluster median outside [q1, q3]
};

/// One record per (cluster, KU) over the rows of an n x 28 P_ku matrix.
std::vector<DiffValueRecord> diff_values(const Eigen::MatrixXd& p_ku,
                                         const std::vector<int>& labels, int k);

/// labels.tsv, silhouette.tsv, summary.tsv and diff_values.tsv.
void write_cluster_outputs(const std::filesystem::path& dir,
                           const std::vector<std::string>& developers, const KSelection& sel,
                           const std::vector<DiffValueRecord>& diffs, int pca_components);

}  // namespace kurev
