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

#include "kurev/synth.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "kurev/error.hpp"
#include "kurev/identity.hpp"
#include "kurev/subprocess.hpp"

namespace kurev {
namespace {

struct Snippet {
  std::vector<std::string> imports;
  std::string body;  // one or more members; %N% is replaced by a unique suffix
};

const std::vector<Snippet>& snippets() {
  static const std::vector<Snippet> kSnippets = {
      {{}, R"(  int sum%N%(int[] values) {
    int total = 0;
    for (int i = 0; i < values.length; i++) {
      if (values[i] > 0 && values[i] != 7) {
        total += values[i];
      } else {
        continue;
      }
    }
    return total;
  }
)"},
      {{}, R"(  long countdown%N%(int start) {
    long steps = 0;
    while (start > 0) {
      start--;
      steps++;
    }
    do {
      steps += 2;
    } while (steps < 10);
    return steps;
  }
)"},
      {{"java.util.List", "java.util.ArrayList", "java.util.Map", "java.util.TreeMap"},
       R"(  Map<String, Integer> tally%N%(List<String> words) {
    Map<String, Integer> counts = new TreeMap<>();
    List<String> seen = new ArrayList<>();
    for (String w : words) {
      counts.merge(w, 1, Integer::sum);
      seen.add(w);
    }
    return counts;
  }
)"},
      {{"java.util.List", "java.util.stream.Collectors", "java.util.Optional"},
       R"(  List<String> upper%N%(List<String> names) {
    Optional<String> first = names.stream().filter(n -> !n.isEmpty()).findFirst();
    return names.stream().map(String::toUpperCase).sorted().collect(Collectors.toList());
  }
)"},
      {{"java.io.BufferedReader", "java.io.FileReader", "java.io.IOException"},
       R"(  String readFirst%N%(String path) throws IOException {
    try (BufferedReader reader = new BufferedReader(new FileReader(path))) {
      return reader.readLine();
    } catch (IOException e) {
      System.err.println("cannot read " + path);
      throw e;
    } finally {
      System.out.println("done");
    }
  }
)"},
      {{"java.nio.file.Files", "java.nio.file.Path", "java.nio.file.Paths", "java.io.IOException"},
       R"(  long size%N%(String name) throws IOException {
    Path p = Paths.get(name);
    return Files.exists(p) ? Files.size(p) : 0L;
  }
)"},
      {{"java.util.concurrent.ExecutorService", "java.util.concurrent.Executors",
        "java.util.concurrent.atomic.AtomicInteger"},
       R"(  int parallel%N%(int tasks) throws InterruptedException {
    ExecutorService pool = Executors.newFixedThreadPool(2);
    AtomicInteger done = new AtomicInteger();
    for (int i = 0; i < tasks; i++) {
      pool.submit(() -> done.incrementAndGet());
    }
    pool.shutdown();
    synchronized (this) {
      notifyAll();
    }
    return done.get();
  }
)"},
      {{"java.sql.Connection", "java.sql.PreparedStatement", "java.sql.ResultSet",
        "java.sql.SQLException"},
       R"(  int rows%N%(Connection conn) throws SQLException {
    try (PreparedStatement st = conn.prepareStatement("select count(*) from t")) {
      ResultSet rs = st.executeQuery();
      return rs.next() ? rs.getInt(1) : 0;
    }
  }
)"},
      {{"java.time.LocalDate", "java.time.Duration", "java.time.Instant"},
       R"(  long age%N%(LocalDate born) {
    Duration d = Duration.between(Instant.EPOCH, Instant.now());
    return LocalDate.now().getYear() - born.getYear() + d.toDays() * 0;
  }
)"},
      {{"java.util.function.Function", "java.util.function.Predicate"},
       R"(  Function<Integer, Integer> twice%N%() {
    Predicate<Integer> positive = x -> x > 0;
    Function<Integer, Integer> f = x -> positive.test(x) ? x * 2 : 0;
    return f.andThen(y -> y + 1);
  }
)"},
      {{}, R"(  String label%N%(Object o) {
    StringBuilder sb = new StringBuilder();
    if (o instanceof String s) {
      sb.append(s.trim().toLowerCase());
    }
    switch (sb.length()) {
      case 0:
        return "empty";
      default:
        return String.format("%s!", sb.toString());
    }
  }
)"},
      {{"javax.persistence.Entity", "javax.persistence.Id", "javax.persistence.Column"},
       R"(  @Entity
  static class Record%N% {
    @Id
    private long id;
    @Column(name = "title")
    private String title;

    public long getId() {
      return id;
    }

    public void setId(long id) {
      this.id = id;
    }
  }
)"},
      {{}, R"(  static class Shape%N% {
    double area() {
      return 0.0;
    }
  }

  static class Square%N% extends Shape%N% {
    private final double side;

    Square%N%(double side) {
      super();
      this.side = side;
    }

    @Override
    double area() {
      return side * side;
    }
  }
)"},
      {{}, R"(  static class ValidationError%N% extends RuntimeException {
    ValidationError%N%(String message) {
      super(message);
    }
  }

  void check%N%(int value) {
    assert value >= 0 : "negative";
    if (value > 100) {
      throw new ValidationError%N%("too large: " + value);
    }
  }
)"},
      {{"java.util.Locale", "java.util.ResourceBundle"},
       R"(  String greet%N%(Locale locale) {
    ResourceBundle bundle = ResourceBundle.getBundle("messages", locale);
    return bundle.getString("hello");
  }
)"},
      {{}, R"(  enum Mode%N% { FAST, SLOW }

  int[][] grid%N%(int n) {
    int[][] g = new int[n][n];
    g[0][0] = (int) 3.5;
    return g;
  }
)"},
  };
  return kSnippets;
}

// Raw engine draws keep output identical across standard libraries.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine() % n); }
  bool chance(int percent) { return below(100) < static_cast<std::size_t>(percent); }
};

std::string file_path(int index) {
  static const char* kPackages[] = {"core", "io", "util", "web"};
  return "src/main/java/org/example/" + std::string(kPackages[index % 4]) + "/Unit" +
         std::to_string(index) + ".java";
}

std::string class_name(int index) { return "Unit" + std::to_string(index); }

std::string render_file(int file, const std::vector<std::size_t>& chosen, int revision) {
  const auto& lib = snippets();
  std::set<std::string> imports;
  for (auto s : chosen) imports.insert(lib[s].imports.begin(), lib[s].imports.end());
  static const char* kPackages[] = {"core", "io", "util", "web"};
  std::string out = "package org.example." + std::string(kPackages[file % 4]) + ";\n\n";
  for (const auto& i : imports) out += "import " + i + ";\n";
  if (!imports.empty()) out += "\n";
  out += "/** Revision " + std::to_string(revision) + ". */\n";
  out += "public class " + class_name(file) + " {\n";
  for (std::size_t n = 0; n < chosen.size(); ++n) {
    std::string body = lib[chosen[n]].body;
    const std::string tag = std::to_string(n);
    for (std::size_t pos; (pos = body.find("%N%")) != std::string::npos;) {
      body.replace(pos, 3, tag);
    }
    if (n) out += "\n";
    out += body;
  }
  out += "}\n";
  return out;
}

void git(const std::filesystem::path& repo, const std::vector<std::string>& args,
         std::vector<std::pair<std::string, std::string>> env = {}) {
  std::vector<std::string> argv = {"git", "-C", repo.string(), "-c", "commit.gpgsign=false",
                                   "-c", "core.autocrlf=false"};
  argv.insert(argv.end(), args.begin(), args.end());
  env.emplace_back("GIT_CONFIG_NOSYSTEM", "1");
  env.emplace_back("GIT_CONFIG_GLOBAL", "/dev/null");
  env.emplace_back("LC_ALL", "C");
  ProcessOptions opts;
  opts.env = std::move(env);
  const ProcessResult r = run_process(argv, opts);
  if (r.exit_code != 0) {
    throw SetupError("git " + args.front() + " failed: " + r.err);
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SetupError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw SetupError("cannot write " + path.string());
}

}  // namespace

std::string synth_developer_name(int index) { return "dev" + std::to_string(index); }

std::string synth_developer_email(int index) {
  return "dev" + std::to_string(index) + "@example.org";
}

std::string synth_identity(int index) {
  return commit_identity(synth_developer_name(index), synth_developer_email(index));
}

SynthProject generate_project(const SynthSpec& spec) {
  if (spec.developers < 2 || spec.commits < 1 || spec.prs < 0 || spec.files < 1 ||
      spec.open_prs < 0 || spec.open_prs > spec.prs) {
    throw ParameterError("synthetic project needs at least two developers, one commit and one file");
  }
  Rng rng(spec.seed);
  const std::size_t lib = snippets().size();
  SynthProject p;
  p.spec = spec;

  // Each developer favours a band of snippets and a home set of files.
  auto favourite = [&](int dev) {
    const std::size_t base = static_cast<std::size_t>(dev) * 3 % lib;
    return rng.chance(75) ? (base + rng.below(4)) % lib : rng.below(lib);
  };
  auto home_file = [&](int dev) {
    if (rng.chance(70)) {
      return static_cast<int>((static_cast<std::size_t>(dev) * 2 + rng.below(2)) %
                              static_cast<std::size_t>(spec.files));
    }
    return static_cast<int>(rng.below(static_cast<std::size_t>(spec.files)));
  };

  std::map<int, std::vector<std::size_t>> content;
  std::map<int, int> revision;
  std::vector<std::vector<int>> touched_by(static_cast<std::size_t>(spec.files));
  for (int c = 0; c < spec.commits; ++c) {
    SynthCommit commit;
    commit.developer = c < spec.developers ? c : static_cast<int>(rng.below(spec.developers));
    commit.when = spec.start.plus_days(c).plus_seconds(
        static_cast<std::int64_t>(rng.below(8 * 3600)));
    const int edits = 1 + static_cast<int>(rng.below(2));
    std::set<int> files;
    for (int e = 0; e < edits; ++e) files.insert(home_file(commit.developer));
    if (c == 0) {
      for (int f = 0; f < spec.files; ++f) files.insert(f);
    }
    for (int f : files) {
      auto& chosen = content[f];
      if (chosen.size() > 3) chosen.erase(chosen.begin() + static_cast<long>(rng.below(chosen.size())));
      chosen.push_back(favourite(commit.developer));
      commit.writes.push_back({file_path(f), render_file(f, chosen, ++revision[f])});
      touched_by[static_cast<std::size_t>(f)].push_back(commit.developer);
    }
    if (rng.chance(20)) {
      commit.writes.push_back({"NOTES.md", "notes revision " + std::to_string(c) + "\n"});
    }
    commit.message = "Change " + std::to_string(c + 1);
    p.commits.push_back(std::move(commit));
  }

  const std::int64_t span = static_cast<std::int64_t>(spec.commits) * Timestamp::kSecondsPerDay;
  for (int j = 0; j < spec.prs; ++j) {
    SynthPr pr;
    pr.id = 100 + j;
    pr.open = j >= spec.prs - spec.open_prs;
    pr.author = static_cast<int>(rng.below(static_cast<std::size_t>(spec.developers)));
    // PRs open in the afternoon, after that day's commit.
    const std::int64_t offset = span * (j + 1) / (spec.prs + 1);
    pr.opened_at = Timestamp(spec.start.epoch_seconds() +
                             offset / Timestamp::kSecondsPerDay * Timestamp::kSecondsPerDay)
                       .plus_seconds(9 * 3600 + static_cast<std::int64_t>(rng.below(3600)));
    std::set<std::string> files;
    std::set<int> file_ids;
    const int n = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < n; ++k) file_ids.insert(home_file(pr.author));
    for (int f : file_ids) files.insert(file_path(f));
    if (rng.chance(25)) files.insert("NOTES.md");
    pr.changed_files.assign(files.begin(), files.end());

    // Reviewers lean towards recent committers on the same files.
    std::vector<int> pool;
    for (int f : file_ids) {
      for (int d : touched_by[static_cast<std::size_t>(f)]) {
        if (d != pr.author) pool.push_back(d);
      }
    }
    std::set<int> reviewers;
    if (!pool.empty() && rng.chance(80)) reviewers.insert(pool[rng.below(pool.size())]);
    while (reviewers.empty() || (reviewers.size() < 2 && rng.chance(35))) {
      const int d = static_cast<int>(rng.below(static_cast<std::size_t>(spec.developers)));
      if (d != pr.author) reviewers.insert(d);
    }
    pr.reviewers.assign(reviewers.begin(), reviewers.end());
    for (int r : pr.reviewers) {
      const int count = static_cast<int>(rng.below(3));
      for (int k = 0; k < count; ++k) {
        SynthPr::Comment c;
        c.reviewer = r;
        c.path = rng.chance(85) ? pr.changed_files[rng.below(pr.changed_files.size())] : "";
        c.when = pr.opened_at.plus_seconds(
            3600 + static_cast<std::int64_t>(rng.below(2 * Timestamp::kSecondsPerDay)));
        pr.comments.push_back(c);
      }
    }
    std::sort(pr.comments.begin(), pr.comments.end(), [](const auto& a, const auto& b) {
      return a.when != b.when ? a.when < b.when : a.reviewer < b.reviewer;
    });
    if (j % 3 == 1) {
      for (int c = 0; c < spec.commits; ++c) {
        if (p.commits[static_cast<std::size_t>(c)].when < pr.opened_at) pr.head_commit = c;
      }
    }
    p.prs.push_back(std::move(pr));
  }
  return p;
}

PrDataset synth_pr_dataset(const SynthProject& project,
                           const std::vector<std::string>& commit_hashes) {
  PrDataset ds;
  ds.project = project.spec.project;
  for (const auto& s : project.prs) {
    PullRequest pr;
    pr.id = s.id;
    pr.opened_at = s.opened_at;
    pr.state = s.open ? PrState::kOpen : PrState::kClosed;
    pr.author = synth_identity(s.author);
    pr.changed_files = s.changed_files;
    for (int r : s.reviewers) pr.reviewers.push_back(synth_identity(r));
    std::sort(pr.reviewers.begin(), pr.reviewers.end());
    for (const auto& c : s.comments) {
      ReviewComment rc;
      rc.reviewer = synth_identity(c.reviewer);
      if (!c.path.empty()) rc.path = c.path;
      rc.commented_at = c.when;
      pr.review_comments.push_back(rc);
    }
    if (s.head_commit >= 0 && static_cast<std::size_t>(s.head_commit) < commit_hashes.size()) {
      pr.head_commit = commit_hashes[static_cast<std::size_t>(s.head_commit)];
    }
    ds.prs.push_back(std::move(pr));
  }
  std::stable_sort(ds.prs.begin(), ds.prs.end(), [](const auto& a, const auto& b) {
    return a.opened_at != b.opened_at ? a.opened_at < b.opened_at : a.id < b.id;
  });
  return ds;
}

void write_project(const SynthProject& project, const std::filesystem::path& dir) {
  const std::filesystem::path repo = dir / "repo";
  if (std::filesystem::exists(repo)) throw SetupError(repo.string() + " already exists");
  std::filesystem::create_directories(repo);
  git(repo, {"init", "-q", "-b", "main"});

  std::vector<std::string> hashes;
  for (const auto& c : project.commits) {
    for (const auto& w : c.writes) {
      if (w.content.empty()) {
        std::filesystem::remove(repo / w.path);
      } else {
        write_file(repo / w.path, w.content);
      }
    }
    git(repo, {"add", "-A"});
    const std::string date = std::to_string(c.when.epoch_seconds()) + " +0000";
    const std::string name = synth_developer_name(c.developer);
    const std::string email = synth_developer_email(c.developer);
    git(repo, {"commit", "-q", "--allow-empty", "-m", c.message},
        {{"GIT_AUTHOR_NAME", name},
         {"GIT_AUTHOR_EMAIL", email},
         {"GIT_AUTHOR_DATE", date},
         {"GIT_COMMITTER_NAME", name},
         {"GIT_COMMITTER_EMAIL", email},
         {"GIT_COMMITTER_DATE", date}});
    ProcessOptions opts;
    opts.env = {{"GIT_CONFIG_NOSYSTEM", "1"}, {"GIT_CONFIG_GLOBAL", "/dev/null"}};
    const ProcessResult head = run_process({"git", "-C", repo.string(), "rev-parse", "HEAD"}, opts);
    if (head.exit_code != 0) throw SetupError("git rev-parse failed: " + head.err);
    hashes.push_back(head.out.substr(0, head.out.find('\n')));
  }

  save_prs(synth_pr_dataset(project, hashes), dir / "prs.jsonl");

  nlohmann::ordered_json config;
  config["project"] = project.spec.project;
  config["repo"] = "repo";
  config["prs"] = "prs.jsonl";
  config["catalog"] = nullptr;
  config["cache_dir"] = "cache";
  config["output_dir"] = "out";
  config["seed"] = project.spec.seed;
  config["train_fraction"] = 0.8;
  config["rf_mode"] = "reviewed_prs";
  config["k_max"] = 100;
  write_file(dir / "kurev.json", config.dump(2) + "\n");
}

}  // namespace kurev
