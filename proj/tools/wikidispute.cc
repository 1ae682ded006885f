// Copyright 2026 The wikidispute Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: fetch, analyze, render, serve and fixtures.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wikidispute/analysis.h"
#include "wikidispute/api_server.h"
#include "wikidispute/config.h"
#include "wikidispute/fixtures.h"
#include "wikidispute/ingest.h"
#include "wikidispute/log.h"
#include "wikidispute/render.h"
#include "wikidispute/report_json.h"
#include "wikidispute/revision_store.h"

namespace fs = std::filesystem;
using namespace wikidispute;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Config ReadConfig(const std::string& path) {
  Config config = path.empty() ? Config{} : LoadConfig(path);
  ApplyEnvironment(config);
  return config;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

void WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct FetchArgs {
  std::string article;
  std::string lang = "en";
  std::string store;
  std::string dump;
  std::string config;
};

int RunFetch(const FetchArgs& args) {
  Config config = ReadConfig(args.config);
  RevisionStore store(args.store);
  if (!args.dump.empty()) {
    std::ifstream in = OpenInput(args.dump);
    ArticleHistory history = ParseDump(in, args.article, args.lang);
    history.source = HistorySource::kDump;
    store.Append(history, history.revisions);
    std::printf(
        "fetched %zu revisions of \"%s\" (%s) from dump into %s\n",
        history.revisions.size(), history.article_title.c_str(),
        history.language_code.c_str(),
        store.PathFor(history.language_code, history.article_title).c_str());
    return 0;
  }

  ApiOptions api;
  api.base_url = config.api_base_url;
  api.user_agent = config.user_agent;
  std::optional<int64_t> resume = store.LastRevId(args.lang, args.article);
  ArticleHistory meta;
  meta.article_title = NormalizeTitle(args.article);
  meta.language_code = args.lang;
  meta.source = HistorySource::kApi;
  meta.complete = false;
  size_t appended = 0;
  ArticleHistory history = FetchHistory(args.article, args.lang, resume, api,
                                        [&](std::span<const RawRevision> page) {
                                          meta.fetched_at =
                                              NowOrSourceDateEpoch();
                                          store.Append(meta, page);
                                          appended += page.size();
                                        });
  meta.fetched_at = history.fetched_at;
  meta.complete = history.complete;
  store.Append(meta, {});
  std::printf("fetched %zu new revisions of \"%s\" (%s)%s\n", appended,
              meta.article_title.c_str(), meta.language_code.c_str(),
              history.complete ? "" : "; history incomplete, rerun to resume");
  return history.complete ? 0 : kExitFailure;
}

struct AnalyzeArgs {
  std::string article;
  std::string lang = "en";
  std::string store;
  std::string dump;
  std::string out;
  std::string config;
  int threads = 0;
};

int RunAnalyze(const AnalyzeArgs& args) {
  Config config = ReadConfig(args.config);
  ArticleHistory history;
  if (!args.dump.empty()) {
    std::ifstream in = OpenInput(args.dump);
    history = ParseDump(in, args.article, args.lang);
    history.source = HistorySource::kDump;
  } else {
    RevisionStore store(args.store);
    if (!store.Contains(args.lang, args.article)) {
      throw InputError("no stored history for \"" + args.article + "\" (" +
                       args.lang + ") in " + args.store);
    }
    history = store.Load(args.lang, args.article);
  }
  if (!history.complete) {
    throw InputError("stored history is incomplete; rerun fetch first");
  }
  AnalyzeOptions options = AnalyzeOptions::FromConfig(config);
  options.diff.threads = args.threads;
  ArticleReport report = AnalyzeHistory(history, options);
  WriteOutput(args.out, SerializeReport(report));
  std::fprintf(stderr,
               "analyzed %d of %d revisions of \"%s\" (%s); %zu "
               "controversial links\n",
               report.analyzed_revisions, report.chain_stats.raw_revisions,
               report.article_title.c_str(), report.language_code.c_str(),
               report.links.size());
  return 0;
}

int RunRender(const std::string& report_path, const std::string& out) {
  nlohmann::ordered_json report =
      nlohmann::ordered_json::parse(ReadFile(report_path));
  WriteOutput(out, RenderReportHtml(report));
  std::fprintf(stderr, "rendered %s\n",
               out.empty() ? "to stdout" : out.c_str());
  return 0;
}

ApiServer* g_server = nullptr;

void HandleSignal(int) {
  if (g_server) g_server->Stop();
}

int RunServe(const std::string& dir, const std::string& host, int port) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  auto catalog =
      std::make_shared<const ReportCatalog>(ReportCatalog::LoadDirectory(dir));
  ApiServer server(catalog);
  int bound = server.Bind(host, port);
  if (bound < 0) {
    std::fprintf(stderr, "cannot bind %s:%d\n", host.c_str(), port);
    return kExitFailure;
  }
  g_server = &server;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  std::printf("serving %zu reports on http://%s:%d/\n", catalog->size(),
              host.c_str(), bound);
  std::fflush(stdout);
  bool ok = server.Run();
  g_server = nullptr;
  return ok ? 0 : kExitFailure;
}

struct FixtureArgs {
  uint64_t seed = 1;
  int revisions = 50;
  int links = 10;
  bool worked_example = false;
  std::string out;
};

int RunFixtures(const FixtureArgs& args) {
  ArticleHistory history;
  if (args.worked_example) {
    history = ConsensusEditsFixture();
  } else {
    synth::Options options;
    options.seed = args.seed;
    options.revisions = args.revisions;
    options.links = args.links;
    history = synth::Generate(options).history;
  }
  WriteOutput(args.out, DumpXml(history));
  std::fprintf(stderr, "wrote %zu revisions of \"%s\"\n",
               history.revisions.size(), history.article_title.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edit-history controversy analysis for wiki articles"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log progress to stderr");

  FetchArgs fetch;
  CLI::App* fetch_cmd =
      app.add_subcommand("fetch", "Fetch a revision history into the store");
  fetch_cmd->add_option("--article", fetch.article, "Article title")
      ->required();
  fetch_cmd->add_option("--lang", fetch.lang, "Language code")
      ->capture_default_str();
  fetch_cmd->add_option("--store", fetch.store, "Store directory")->required();
  fetch_cmd->add_option("--dump", fetch.dump, "Read an XML dump, not the API");
  fetch_cmd->add_option("--config", fetch.config, "Config file");

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Score a history and write a report");
  analyze_cmd->add_option("--article", analyze.article, "Article title")
      ->required();
  analyze_cmd->add_option("--lang", analyze.lang, "Language code")
      ->capture_default_str();
  auto* store_opt =
      analyze_cmd->add_option("--store", analyze.store, "Store directory");
  auto* dump_opt = analyze_cmd->add_option("--dump", analyze.dump, "XML dump");
  store_opt->excludes(dump_opt);
  analyze_cmd->add_option("--out", analyze.out, "Report path (default stdout)");
  analyze_cmd->add_option("--config", analyze.config, "Config file");
  analyze_cmd
      ->add_option("--threads", analyze.threads, "Diff threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string report_path;
  std::string html_out;
  CLI::App* render_cmd =
      app.add_subcommand("render", "Render a report as a standalone HTML page");
  render_cmd->add_option("--report", report_path, "Report JSON")->required();
  render_cmd->add_option("--out", html_out, "HTML path (default stdout)");

  std::string reports_dir;
  std::string host = "127.0.0.1";
  int port = 8080;
  CLI::App* serve_cmd =
      app.add_subcommand("serve", "Serve reports over the JSON API");
  serve_cmd->add_option("--reports", reports_dir, "Directory of *.report.json")
      ->required();
  serve_cmd->add_option("--host", host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--port", port, "Port (0 = any free port)")
      ->capture_default_str()
      ->check(CLI::Range(0, 65535));

  FixtureArgs fixtures;
  CLI::App* fixtures_cmd = app.add_subcommand(
      "fixtures", "Write a synthetic history as an XML dump");
  fixtures_cmd->add_option("--seed", fixtures.seed, "Generator seed")
      ->capture_default_str();
  fixtures_cmd->add_option("--revisions", fixtures.revisions, "Revisions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fixtures_cmd->add_option("--links", fixtures.links, "Distinct link targets")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  fixtures_cmd->add_flag("--worked-example", fixtures.worked_example,
                         "Write the three-revision worked example instead");
  fixtures_cmd->add_option("--out", fixtures.out, "XML path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (verbose) SetLogThreshold(LogLevel::kInfo);

  try {
    if (*fetch_cmd) return RunFetch(fetch);
    if (*analyze_cmd) {
      if (analyze.store.empty() && analyze.dump.empty()) {
        std::fprintf(stderr,
                     "analyze: one of --store or --dump is required\n"
                     "Run with --help for more information.\n");
        return kExitUsage;
      }
      return RunAnalyze(analyze);
    }
    if (*render_cmd) return RunRender(report_path, html_out);
    if (*serve_cmd) return RunServe(reports_dir, host, port);
    if (*fixtures_cmd) return RunFixtures(fixtures);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
