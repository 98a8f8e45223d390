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

#include "kurev/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "kurev/catalog.hpp"
#include "kurev/cluster.hpp"
#include "kurev/error.hpp"
#include "kurev/evaluation.hpp"
#include "kurev/git.hpp"
#include "kurev/hash.hpp"
#include "kurev/history.hpp"
#include "kurev/log.hpp"
#include "kurev/profiles.hpp"
#include "kurev/pull_requests.hpp"

namespace kurev {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SetupError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SetupError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw SetupError("cannot write " + path.string());
}

const json& field(const json& j, const char* name) {
  static const json kNull;
  const auto it = j.find(name);
  return it == j.end() ? kNull : *it;
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path raw(p);
  return (raw.is_absolute() ? raw : base / raw).lexically_normal();
}

// Reruns a stage only when its input hash differs from the stamp on disk or
// an expected output is missing.
class Stage {
 public:
  // The stamp holds the input key and a digest of the outputs, so a stage
  // whose outputs were edited or removed runs again.
  Stage(const fs::path& out, std::string name, std::string key, std::vector<fs::path> outputs,
        bool force)
      : stamp_(out / "stamps" / (name + ".sha256")),
        name_(std::move(name)),
        key_(std::move(key)),
        outputs_(std::move(outputs)) {
    cached_ = !force && fs::exists(stamp_);
    for (const auto& o : outputs_) cached_ = cached_ && fs::exists(o);
    if (cached_) cached_ = read_file(stamp_) == stamp_text();
  }

  bool cached() const { return cached_; }
  void done() const { write_file(stamp_, stamp_text()); }
  StageResult result() const { return {name_, cached_}; }

 private:
  std::string stamp_text() const { return key_ + "\n" + hash_files(outputs_) + "\n"; }

  fs::path stamp_;
  std::string name_;
  std::string key_;
  std::vector<fs::path> outputs_;
  bool cached_ = false;
};

std::vector<fs::path> store_files(const fs::path& dir) {
  return {dir / "index.json", dir / "commits.jsonl", dir / "files.jsonl"};
}

}  // namespace

std::string hash_files(const std::vector<fs::path>& files) {
  Sha256 h;
  for (const auto& f : files) {
    h.update_field(f.filename().string());
    h.update_field(read_file(f));
  }
  return h.hex_digest();
}

AliasMap load_aliases(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw DataError(path.string() + ": expected an object of aliases");
  AliasMap m;
  for (const auto& [alias, canonical] : j.items()) {
    if (!canonical.is_string()) throw DataError(path.string() + ": alias values must be strings");
    m.add(alias, canonical.get<std::string>());
  }
  return m;
}

ProjectConfig load_config(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError(path.string() + ": config must be an object");
  static const std::vector<std::string> kKnown = {
      "project", "repo", "prs", "catalog", "aliases", "cache_dir", "output_dir", "seed",
      "train_fraction", "rf_mode", "k_max", "all_commits", "workers"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw UsageError(path.string() + ": unknown setting '" + key + "'");
    }
  }
  const fs::path base = fs::absolute(path).parent_path();
  const auto str = [&](const char* name, bool required) -> std::optional<std::string> {
    const json& v = field(j, name);
    if (v.is_null()) {
      if (required) throw UsageError(path.string() + ": missing setting '" + name + "'");
      return std::nullopt;
    }
    if (!v.is_string() || v.get<std::string>().empty()) {
      throw UsageError(path.string() + ": '" + name + "' must be a non-empty string");
    }
    return v.get<std::string>();
  };
  ProjectConfig c;
  c.repo = resolve(base, *str("repo", true));
  c.prs = resolve(base, *str("prs", true));
  if (auto v = str("catalog", false)) c.catalog = resolve(base, *v);
  if (auto v = str("aliases", false)) c.aliases = resolve(base, *v);
  c.cache_dir = resolve(base, str("cache_dir", false).value_or("cache"));
  c.output_dir = resolve(base, str("output_dir", false).value_or("out"));
  c.project = str("project", false).value_or(c.repo.filename().string());
  if (const json& v = field(j, "seed"); !v.is_null()) {
    if (!v.is_number_unsigned()) throw UsageError(path.string() + ": 'seed' must be a non-negative integer");
    c.seed = v.get<std::uint64_t>();
  }
  if (const json& v = field(j, "train_fraction"); !v.is_null()) {
    if (!v.is_number()) throw UsageError(path.string() + ": 'train_fraction' must be a number");
    c.train_fraction = v.get<double>();
    if (!(c.train_fraction > 0.0 && c.train_fraction < 1.0)) {
      throw UsageError(path.string() + ": 'train_fraction' must lie in (0, 1)");
    }
  }
  if (auto v = str("rf_mode", false)) {
    if (*v == "reviewed_prs") c.rf_mode = RfMode::kReviewedPrs;
    else if (*v == "review_comments") c.rf_mode = RfMode::kReviewComments;
    else throw UsageError(path.string() + ": 'rf_mode' must be reviewed_prs or review_comments");
  }
  if (const json& v = field(j, "k_max"); !v.is_null()) {
    if (!v.is_number_integer() || v.get<int>() < 2) {
      throw UsageError(path.string() + ": 'k_max' must be an integer of at least 2");
    }
    c.k_max = v.get<int>();
  }
  if (const json& v = field(j, "all_commits"); !v.is_null()) {
    if (!v.is_boolean()) throw UsageError(path.string() + ": 'all_commits' must be true or false");
    c.all_commits = v.get<bool>();
  }
  if (const json& v = field(j, "workers"); !v.is_null()) {
    if (!v.is_number_unsigned()) throw UsageError(path.string() + ": 'workers' must be a non-negative integer");
    c.workers = v.get<unsigned>();
  }

  // Every input is checked before any stage runs.
  if (!fs::is_directory(c.repo)) throw SetupError("repository not found: " + c.repo.string());
  if (!fs::is_regular_file(c.prs)) throw SetupError("PR export not found: " + c.prs.string());
  if (c.catalog && !fs::is_regular_file(*c.catalog)) {
    throw SetupError("catalog not found: " + c.catalog->string());
  }
  if (c.aliases && !fs::is_regular_file(*c.aliases)) {
    throw SetupError("alias file not found: " + c.aliases->string());
  }
  return c;
}

std::vector<StageResult> run_pipeline(const ProjectConfig& config,
                                      const PipelineOptions& options) {
  const fs::path out = config.output_dir;
  std::vector<StageResult> results;
  const auto report = [&](const Stage& s) {
    results.push_back(s.result());
    if (options.on_stage) options.on_stage(results.back());
  };

  const CapabilityCatalog catalog = load_catalog(config.catalog);
  const AliasMap aliases = config.aliases ? load_aliases(*config.aliases) : AliasMap{};
  std::string alias_text;
  for (const auto& [a, c] : aliases.entries()) alias_text += a + "\t" + c + "\n";

  // mine
  const fs::path store_dir = out / "store";
  git::Repository repo(config.repo);
  std::string head = repo.has_head() ? repo.head() : "";
  Sha256 mine_key;
  mine_key.update_field("mine/1").update_field(catalog.hash()).update_field(head)
      .update_field(config.all_commits ? "all" : "first-parent").update_field(alias_text);
  Stage mine(out, "mine", mine_key.hex_digest(), store_files(store_dir), options.force);
  KuStore store;
  if (mine.cached()) {
    store = read_store(store_dir);
  } else {
    StoreOptions so;
    so.mine.all_commits = config.all_commits;
    so.mine.aliases = aliases;
    so.cache_dir = config.cache_dir;
    so.workers = config.workers;
    store = build_ku_store(config.repo, catalog, so);
    write_store(store, store_dir);
    mine.done();
  }
  report(mine);

  // prs
  const fs::path prs_dir = out / "prs";
  const std::vector<fs::path> pr_files = {prs_dir / "filtered.jsonl", prs_dir / "train.jsonl",
                                          prs_dir / "test.jsonl"};
  Sha256 prs_key;
  prs_key.update_field("prs/1").update_field(read_file(config.prs)).update_field(alias_text)
      .update_field(std::to_string(config.train_fraction));
  Stage prs(out, "prs", prs_key.hex_digest(), pr_files, options.force);
  PrDataset filtered, train, test;
  if (prs.cached()) {
    filtered = load_prs(pr_files[0]);
    train = load_prs(pr_files[1]);
    test = load_prs(pr_files[2]);
  } else {
    const FilterResult f = filter_prs(load_prs(config.prs, aliases));
    filtered = f.kept;
    if (filtered.project.empty()) filtered.project = config.project;
    std::tie(train, test) = chronological_split(filtered, config.train_fraction);
    if (!f.eligible) {
      log_warning(config.project + " has " + std::to_string(filtered.prs.size()) +
                  " eligible PRs, below the " + std::to_string(kMinEligiblePrs) +
                  " normally required");
    }
    fs::create_directories(prs_dir);
    save_prs(filtered, pr_files[0]);
    save_prs(train, pr_files[1]);
    save_prs(test, pr_files[2]);
    prs.done();
  }
  report(prs);

  const std::string store_hash = hash_files(store_files(store_dir));
  const std::string prs_hash = hash_files(pr_files);

  // profiles, as of the first test PR
  const fs::path prof_dir = out / "profiles";
  const std::vector<fs::path> prof_files = {prof_dir / "dev_expertise.tsv",
                                            prof_dir / "dev_last_touch.tsv",
                                            prof_dir / "rev_expertise.tsv",
                                            prof_dir / "rev_last_touch.tsv"};
  Sha256 prof_key;
  prof_key.update_field("profiles/1").update_field(store_hash).update_field(prs_hash);
  Stage profiles(out, "profiles", prof_key.hex_digest(), prof_files, options.force);
  if (!profiles.cached()) {
    const Timestamp cutoff = test.prs.front().opened_at;
    const Profile dev = dev_exp_matrix(store, cutoff);
    const Profile rev = rev_exp_matrix(filtered, store, cutoff);
    std::set<std::string> all(dev.matrix.developers().begin(), dev.matrix.developers().end());
    all.insert(rev.matrix.developers().begin(), rev.matrix.developers().end());
    const std::vector<std::string> devs(all.begin(), all.end());
    fs::create_directories(prof_dir);
    write_matrix_tsv(dev.matrix, prof_files[0], devs);
    write_last_touch_tsv(dev.last, prof_files[1], devs);
    write_matrix_tsv(rev.matrix, prof_files[2], devs);
    write_last_touch_tsv(rev.last, prof_files[3], devs);
    profiles.done();
  }
  report(profiles);

  // evaluate
  const fs::path report_dir = out / "report";
  Sha256 eval_key;
  eval_key.update_field("evaluate/1").update_field(store_hash).update_field(prs_hash)
      .update_field(std::to_string(config.seed))
      .update_field(config.rf_mode == RfMode::kReviewedPrs ? "prs" : "comments")
      .update_field(config.project);
  Stage evaluate_stage(out, "evaluate", eval_key.hex_digest(),
                       {report_dir / "report.tsv", report_dir / "reasonableness.tsv",
                        report_dir / "per_pr.tsv"},
                       options.force);
  if (!evaluate_stage.cached()) {
    EvalOptions eo;
    eo.seed = config.seed;
    eo.recommender.rf_mode = config.rf_mode;
    const EvalReport r = evaluate(config.project, store, filtered.prs, test.prs, eo);
    write_report(r, report_dir);
    evaluate_stage.done();
  }
  report(evaluate_stage);

  // cluster
  const fs::path cluster_dir = out / "cluster";
  Sha256 cluster_key;
  cluster_key.update_field("cluster/1").update_field(store_hash)
      .update_field(std::to_string(config.seed)).update_field(std::to_string(config.k_max));
  Stage cluster(out, "cluster", cluster_key.hex_digest(),
                {cluster_dir / "labels.tsv", cluster_dir / "silhouette.tsv",
                 cluster_dir / "summary.tsv", cluster_dir / "diff_values.tsv"},
                options.force);
  if (!cluster.cached()) {
    const ExpertiseMatrix p = global_ku_profiles(store);
    const auto& devs = p.developers();
    if (devs.size() < 3) {
      throw DataError("clustering needs at least three developers, found " +
                      std::to_string(devs.size()));
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(devs.size()), kKuCount);
    for (std::size_t i = 0; i < devs.size(); ++i) {
      for (int k = 0; k < kKuCount; ++k) m(static_cast<Eigen::Index>(i), k) = p.values()[i][k];
    }
    const PcaResult reduced = pca(m, 0.95);
    const KSelection sel = select_k(reduced.projected, 2, config.k_max, 0.90, config.seed);
    write_cluster_outputs(cluster_dir, devs, sel, diff_values(m, sel.best.labels, sel.best.k),
                          reduced.retained);
    cluster.done();
  }
  report(cluster);
  return results;
}

}  // namespace kurev
