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

// kurev_synth: writes a deterministic synthetic project.

#include <iostream>

#include <CLI11.hpp>

#include "kurev/error.hpp"
#include "kurev/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic Java project with a PR export"};
  kurev::SynthSpec spec;
  std::string out;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--project", spec.project, "Project name")->capture_default_str();
  app.add_option("--developers", spec.developers, "Developers")->capture_default_str();
  app.add_option("--commits", spec.commits, "Commits")->capture_default_str();
  app.add_option("--prs", spec.prs, "Pull requests")->capture_default_str();
  app.add_option("--open-prs", spec.open_prs, "Trailing PRs left open")->capture_default_str();
  app.add_option("--files", spec.files, "Java files")->capture_default_str();
  app.add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return static_cast<int>(kurev::ExitCode::kUsage);
  }
  try {
    kurev::write_project(kurev::generate_project(spec), out);
  } catch (const kurev::Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return static_cast<int>(ex.code());
  }
  std::cout << out << '\n';
  return 0;
}
