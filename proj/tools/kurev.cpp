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

// kurev: command-line front end.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kurev/catalog.hpp"
#include "kurev/cluster.hpp"
#include "kurev/combiner.hpp"
#include "kurev/detector.hpp"
#include "kurev/error.hpp"
#include "kurev/evaluation.hpp"
#include "kurev/history.hpp"
#include "kurev/java/parser.hpp"
#include "kurev/pipeline.hpp"
#include "kurev/profiles.hpp"
#include "kurev/pull_requests.hpp"
#include "kurev/recommenders.hpp"

namespace {

namespace fs = std::filesystem;
using namespace kurev;

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SetupError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

RfMode parse_rf_mode(const std::string& text) {
  if (text == "reviewed_prs") return RfMode::kReviewedPrs;
  if (text == "review_comments") return RfMode::kReviewComments;
  throw UsageError("--rf-mode must be reviewed_prs or review_comments");
}

std::optional<fs::path> optional_path(const std::string& p) {
  if (p.empty()) return std::nullopt;
  return fs::path(p);
}

AliasMap aliases_from(const std::string& p) {
  return p.empty() ? AliasMap{} : load_aliases(p);
}

// detect ---------------------------------------------------------------

struct DetectArgs {
  std::vector<std::string> files;
  std::string catalog;
  bool capabilities = false;
};

int run_detect(const DetectArgs& a) {
  const CapabilityCatalog catalog = load_catalog(optional_path(a.catalog));
  if (a.capabilities) {
    std::cout << "file\tcapability\thits\n";
  } else {
    std::cout << "file";
    for (int k = 1; k <= kKuCount; ++k) std::cout << "\tK" << k;
    std::cout << '\n';
  }
  int status = 0;
  for (const auto& f : a.files) {
    try {
      const java::SyntaxTree tree = java::parse_java(read_text(f));
      const CapabilityHits hits = detect_capabilities(tree, catalog);
      if (a.capabilities) {
        for (const auto& [id, n] : hits) {
          const CapabilityRule* rule = catalog.find(id);
          std::cout << f << '\t' << (rule ? capability_label(*rule) : id.ku.label()) << '\t' << n
                    << '\n';
        }
      } else {
        const KuVector v = aggregate_hits(hits);
        std::cout << f;
        for (auto c : v.counts) std::cout << '\t' << c;
        std::cout << '\n';
      }
    } catch (const ParseError& e) {
      std::cerr << "error: " << f << ": " << e.what() << '\n';
      status = static_cast<int>(ExitCode::kData);
    }
  }
  return status;
}

// mine -----------------------------------------------------------------

struct MineArgs {
  std::string repo, out, catalog, cache, aliases;
  bool all_commits = false;
  unsigned workers = 0;
};

int run_mine(const MineArgs& a) {
  const CapabilityCatalog catalog = load_catalog(optional_path(a.catalog));
  StoreOptions so;
  so.mine.all_commits = a.all_commits;
  so.mine.aliases = aliases_from(a.aliases);
  so.cache_dir = optional_path(a.cache);
  so.workers = a.workers;
  const KuStore store = build_ku_store(a.repo, catalog, so);
  write_store(store, a.out);
  std::cout << "commits\t" << store.commits().size() << "\nfiles\t" << store.files().size()
            << "\nskipped_commits\t" << store.skipped_commits() << '\n';
  return 0;
}

// prs ------------------------------------------------------------------

struct PrsArgs {
  std::string file, out_train, out_test, aliases;
  double fraction = 0.8;
  bool no_filter = false;
};

int run_prs_validate(const PrsArgs& a) {
  const PrDataset ds = load_prs(a.file, aliases_from(a.aliases));
  const FilterResult f = filter_prs(ds);
  std::cout << "prs\t" << ds.prs.size() << "\nkept\t" << f.kept.prs.size() << "\neligible\t"
            << (f.eligible ? "yes" : "no") << '\n';
  return 0;
}

int run_prs_split(const PrsArgs& a) {
  PrDataset ds = load_prs(a.file, aliases_from(a.aliases));
  if (!a.no_filter) ds = filter_prs(ds).kept;
  const auto [train, test] = chronological_split(ds, a.fraction);
  save_prs(train, a.out_train);
  save_prs(test, a.out_test);
  std::cout << "train\t" << train.prs.size() << "\ntest\t" << test.prs.size() << '\n';
  return 0;
}

// profiles -------------------------------------------------------------

struct ProfilesArgs {
  std::string store, prs, cutoff, out;
};

int run_profiles(const ProfilesArgs& a) {
  const KuStore store = read_store(a.store);
  const PrDataset prs = load_prs(a.prs);
  const Timestamp cutoff = Timestamp::parse_rfc3339(a.cutoff);
  const Profile dev = dev_exp_matrix(store, cutoff);
  const Profile rev = rev_exp_matrix(prs, store, cutoff);
  std::set<std::string> all(dev.matrix.developers().begin(), dev.matrix.developers().end());
  all.insert(rev.matrix.developers().begin(), rev.matrix.developers().end());
  const std::vector<std::string> devs(all.begin(), all.end());
  fs::create_directories(a.out);
  write_matrix_tsv(dev.matrix, fs::path(a.out) / "dev_expertise.tsv", devs);
  write_last_touch_tsv(dev.last, fs::path(a.out) / "dev_last_touch.tsv", devs);
  write_matrix_tsv(rev.matrix, fs::path(a.out) / "rev_expertise.tsv", devs);
  write_last_touch_tsv(rev.last, fs::path(a.out) / "rev_last_touch.tsv", devs);
  std::cout << "developers\t" << devs.size() << '\n';
  return 0;
}

// recommend ------------------------------------------------------------

struct RecommendArgs {
  std::string store, prs, which = "kurec", rf_mode = "reviewed_prs";
  std::int64_t pr = 0;
  std::size_t top = 5;
  std::uint64_t seed = 0;
};

int run_recommend(const RecommendArgs& a) {
  const auto kind = parse_recommender(a.which);
  if (!kind) throw UsageError("unknown recommender '" + a.which + "'");
  const KuStore store = read_store(a.store);
  const PrDataset ds = load_prs(a.prs);
  const PullRequest* target = ds.find(a.pr);
  if (!target) throw DataError("PR " + std::to_string(a.pr) + " is not in " + a.prs);
  RecommenderOptions ro;
  ro.rf_mode = parse_rf_mode(a.rf_mode);
  BaseRecommenders base(store, ds.prs, ro);

  Recommendation rec;
  std::string note;
  if (recommender_type(*kind) != "Combined") {
    rec = base.recommend(*kind, *target);
  } else {
    // Replay every earlier closed PR so the table reflects the full history.
    const BrstVariant variant = *kind == RecommenderKind::kAdFreq  ? BrstVariant::kFreq
                                : *kind == RecommenderKind::kAdRec ? BrstVariant::kRec
                                                                   : BrstVariant::kHybrid;
    CombinerReplay replay(variant, a.seed);
    for (const auto& pr : filter_prs(ds).kept.prs) {
      if (pr.opened_at > target->opened_at ||
          (pr.opened_at == target->opened_at && pr.id >= target->id)) {
        break;
      }
      replay.step(pr, run_base_recommenders(base, pr));
    }
    const BaseResults results = run_base_recommenders(base, *target);
    const CombinedStep step = replay.step(*target, results);
    rec = step.recommendation;
    note = std::string(recommender_name(step.used));
  }
  std::cout << "rank\tdeveloper\tscore\n";
  for (std::size_t i = 0; i < rec.ranked.size() && i < a.top; ++i) {
    std::cout << i + 1 << '\t' << rec.ranked[i].developer << '\t' << number(rec.ranked[i].score)
              << '\n';
  }
  if (!note.empty()) std::cerr << "delegate: " << note << '\n';
  return 0;
}

// evaluate -------------------------------------------------------------

struct EvaluateArgs {
  std::string train, test, store, out, recommenders = "all", project, rf_mode = "reviewed_prs";
  std::uint64_t seed = 0;
};

int run_evaluate(const EvaluateArgs& a) {
  const KuStore store = read_store(a.store);
  const PrDataset train = load_prs(a.train);
  const PrDataset test = load_prs(a.test);
  std::vector<PullRequest> history = train.prs;
  history.insert(history.end(), test.prs.begin(), test.prs.end());
  EvalOptions eo;
  eo.seed = a.seed;
  eo.recommender.rf_mode = parse_rf_mode(a.rf_mode);
  std::string project = a.project;
  if (project.empty()) project = !test.project.empty() ? test.project : "project";
  EvalReport report = evaluate(project, store, history, test.prs, eo);

  if (a.recommenders != "all") {
    std::set<RecommenderKind> keep;
    std::stringstream ss(a.recommenders);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto k = parse_recommender(item);
      if (!k) throw UsageError("unknown recommender '" + item + "'");
      keep.insert(*k);
    }
    for (auto k : kReportKinds) {
      if (keep.count(k)) continue;
      report.accuracy.erase(k);
      report.map.erase(k);
      report.reasonableness.erase(k);
    }
    report.per_pr.erase(std::remove_if(report.per_pr.begin(), report.per_pr.end(),
                                       [&](const auto& o) { return !keep.count(o.kind); }),
                        report.per_pr.end());
  }
  write_report(report, a.out);
  std::cout << read_text(fs::path(a.out) / "report.tsv");
  return 0;
}

// cluster --------------------------------------------------------------

struct ClusterArgs {
  std::string store, out;
  int k_max = 100;
  std::uint64_t seed = 0;
  double threshold = 0.90;
  double variance = 0.95;
};

int run_cluster(const ClusterArgs& a) {
  const KuStore store = read_store(a.store);
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
  const PcaResult reduced = pca(m, a.variance);
  const KSelection sel = select_k(reduced.projected, 2, a.k_max, a.threshold, a.seed);
  write_cluster_outputs(a.out, devs, sel, diff_values(m, sel.best.labels, sel.best.k),
                        reduced.retained);
  std::cout << read_text(fs::path(a.out) / "summary.tsv");
  return 0;
}

// pipeline -------------------------------------------------------------

struct PipelineArgs {
  std::string config;
  bool force = false;
};

int run_pipeline_cmd(const PipelineArgs& a) {
  const ProjectConfig config = load_config(a.config);
  PipelineOptions po;
  po.force = a.force;
  po.on_stage = [](const StageResult& r) {
    std::cout << r.name << '\t' << (r.cached ? "cached" : "done") << '\n' << std::flush;
  };
  run_pipeline(config, po);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-unit detection and code reviewer recommendation for Java projects"};
  app.require_subcommand(1);
  std::function<int()> action;

  DetectArgs detect;
  auto* d = app.add_subcommand("detect", "Count knowledge units in Java source files");
  d->add_option("files", detect.files, "Java files")->required()->check(CLI::ExistingFile);
  d->add_option("--catalog", detect.catalog, "Capability catalog JSON (default: built in)");
  d->add_flag("--capabilities", detect.capabilities, "Print per-capability hits");
  d->callback([&] { action = [&] { return run_detect(detect); }; });

  MineArgs mine;
  auto* mi = app.add_subcommand("mine", "Mine a git repository into a KU store");
  mi->add_option("--repo", mine.repo, "Repository path")->required();
  mi->add_option("--out", mine.out, "Store directory")->required();
  mi->add_option("--catalog", mine.catalog, "Capability catalog JSON");
  mi->add_option("--cache", mine.cache, "Blob cache directory");
  mi->add_option("--aliases", mine.aliases, "Identity alias JSON");
  mi->add_flag("--all-commits", mine.all_commits, "Include commits off the first-parent line");
  mi->add_option("--workers", mine.workers, "Parser threads (0: all cores)");
  mi->callback([&] { action = [&] { return run_mine(mine); }; });

  PrsArgs prs;
  auto* p = app.add_subcommand("prs", "Validate or split a PR export");
  p->require_subcommand(1);
  auto* pv = p->add_subcommand("validate", "Check a PR export against the schema");
  pv->add_option("file", prs.file, "PR export")->required();
  pv->add_option("--aliases", prs.aliases, "Identity alias JSON");
  pv->callback([&] { action = [&] { return run_prs_validate(prs); }; });
  auto* ps = p->add_subcommand("split", "Chronological train/test split");
  ps->add_option("file", prs.file, "PR export")->required();
  ps->add_option("--out-train", prs.out_train, "Training output")->required();
  ps->add_option("--out-test", prs.out_test, "Test output")->required();
  ps->add_option("--fraction", prs.fraction, "Training fraction")->capture_default_str();
  ps->add_option("--aliases", prs.aliases, "Identity alias JSON");
  ps->add_flag("--no-filter", prs.no_filter, "Split without dropping ineligible PRs");
  ps->callback([&] { action = [&] { return run_prs_split(prs); }; });

  ProfilesArgs prof;
  auto* pr = app.add_subcommand("profiles", "Write expertise matrices as of a cutoff");
  pr->add_option("--store", prof.store, "KU store directory")->required();
  pr->add_option("--prs", prof.prs, "PR export")->required();
  pr->add_option("--cutoff", prof.cutoff, "RFC 3339 timestamp")->required();
  pr->add_option("--out", prof.out, "Output directory")->required();
  pr->callback([&] { action = [&] { return run_profiles(prof); }; });

  RecommendArgs rec;
  auto* r = app.add_subcommand("recommend", "Rank reviewers for one PR");
  r->add_option("--store", rec.store, "KU store directory")->required();
  r->add_option("--prs", rec.prs, "PR export holding the PR and its history")->required();
  r->add_option("--pr", rec.pr, "PR id")->required();
  r->add_option("--which", rec.which,
                "kurec, cf, rf, er, chrev, ad_freq, ad_rec or ad_hybrid")
      ->capture_default_str();
  r->add_option("--top", rec.top, "Candidates to print")->capture_default_str();
  r->add_option("--seed", rec.seed, "Seed for the combined recommenders")->capture_default_str();
  r->add_option("--rf-mode", rec.rf_mode, "reviewed_prs or review_comments")
      ->capture_default_str();
  r->callback([&] { action = [&] { return run_recommend(rec); }; });

  EvaluateArgs ev;
  auto* e = app.add_subcommand("evaluate", "Score all recommenders on a test split");
  e->add_option("--train", ev.train, "Training PRs")->required();
  e->add_option("--test", ev.test, "Test PRs")->required();
  e->add_option("--store", ev.store, "KU store directory")->required();
  e->add_option("--out", ev.out, "Report directory")->required();
  e->add_option("--recommenders", ev.recommenders, "all, or a comma list")->capture_default_str();
  e->add_option("--project", ev.project, "Project name for the report");
  e->add_option("--seed", ev.seed, "Seed for the combined recommenders")->capture_default_str();
  e->add_option("--rf-mode", ev.rf_mode, "reviewed_prs or review_comments")
      ->capture_default_str();
  e->callback([&] { action = [&] { return run_evaluate(ev); }; });

  ClusterArgs cl;
  auto* c = app.add_subcommand("cluster", "Cluster developers by KU profile");
  c->add_option("--store", cl.store, "KU store directory")->required();
  c->add_option("--out", cl.out, "Output directory")->required();
  c->add_option("--k-max", cl.k_max, "Largest K tried")->capture_default_str();
  c->add_option("--seed", cl.seed, "Master seed")->capture_default_str();
  c->add_option("--threshold", cl.threshold, "Median silhouette needed")->capture_default_str();
  c->add_option("--variance", cl.variance, "PCA explained variance kept")->capture_default_str();
  c->callback([&] { action = [&] { return run_cluster(cl); }; });

  PipelineArgs pa;
  auto* pl = app.add_subcommand("pipeline", "Run every stage from a project config");
  pl->add_option("config", pa.config, "Project config JSON")->required();
  pl->add_flag("--force", pa.force, "Rerun stages even when inputs are unchanged");
  pl->callback([&] { action = [&] { return run_pipeline_cmd(pa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return static_cast<int>(ExitCode::kUsage);
  }

  try {
    return action ? action() : static_cast<int>(ExitCode::kUsage);
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return static_cast<int>(ex.code());
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return static_cast<int>(ExitCode::kInternal);
  }
}
