// Copyright 2026 The Framecast Authors.
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

#include "framecast/cli.h"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <memory>

#include "CLI11.hpp"

#include "framecast/interchange.h"
#include "framecast/service.h"
#include "framecast/stats.h"

namespace framecast {

namespace {

std::string DataDir() {
  if (const char *env = std::getenv("FRAMECAST_DATA_DIR"); env && *env) return env;
  return FRAMECAST_DATA_DIR;
}

void PrintError(std::ostream &err, const ApiError &e) {
  err << "error: " << ToString(e.code);
  if (!e.rule_id.empty()) err << " [" << e.rule_id << "]";
  err << ": " << e.message << "\n";
}

void PrintReport(std::ostream &out, const ValidationReport &report) {
  for (const Finding &f : report.findings) {
    out << f.entity << " " << ErrorCodeName(f.rule) << ": " << f.message << "\n";
  }
  out << report.findings.size()
      << (report.findings.size() == 1 ? " finding\n" : " findings\n");
}

void PrintSummaryTable(std::ostream &out, const CorpusSummary &s) {
  out << "documents " << s.documents << "\n"
      << "annotation_sets " << s.annotation_sets << "\n"
      << "visual_objects " << s.visual_objects << "\n"
      << "gestures " << s.gestures << "\n";
  for (const auto &[frame, n] : s.gestures_by_frame) {
    out << frame << " " << n << "\n";
  }
  out << "unclassified " << s.unclassified_gestures << "\n";
}

// Loads a store that must validate; findings go to `err`.
Store LoadStore(const std::string &path) {
  return ImportStore(ReadFile(ResolveStorePath(path)));
}

std::vector<Prototype> LoadPrototypes(const std::string &path) {
  return ImportPrototypes(ReadFile(path.empty() ? DefaultPrototypesPath() : path));
}

// Splits "host:port"; a bare port binds to localhost.
bool ParseBind(const std::string &bind, std::string &host, int &port) {
  const size_t colon = bind.rfind(':');
  std::string port_text = bind;
  host = "127.0.0.1";
  if (colon != std::string::npos) {
    host = bind.substr(0, colon);
    port_text = bind.substr(colon + 1);
  }
  try {
    size_t used = 0;
    port = std::stoi(port_text, &used);
    return used == port_text.size() && port > 0 && port < 65536 && !host.empty();
  } catch (const std::exception &) {
    return false;
  }
}

}  // namespace

std::string ResolveStorePath(std::string_view store) {
  if (store == "seed") return DataDir() + "/seed.json";
  if (store == "paper-fixture") return DataDir() + "/paper_fixture.json";
  return std::string(store);
}

std::string DefaultPrototypesPath() { return DataDir() + "/prototypes.json"; }

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app("Frame-semantic multimodal annotation workbench", "framecast");
  app.require_subcommand(1);

  std::string store, prototypes, format = "table", bind = "127.0.0.1:8080";
  std::string input, output, features;
  double tau = ClassifierOptions{}.tau;
  double delta = ClassifierOptions{}.delta;

  CLI::App *import_cmd = app.add_subcommand(
      "import", "Validate an interchange file and write it canonically to --store");
  import_cmd->add_option("input", input, "Interchange file to import")->required();
  import_cmd->add_option("--store", store, "Destination store file")->required();

  CLI::App *export_cmd =
      app.add_subcommand("export", "Write the canonical bytes of a store");
  export_cmd->add_option("--store", store, "Store file or alias")->required();
  export_cmd->add_option("--out", output, "Output file (default stdout)");

  CLI::App *validate_cmd = app.add_subcommand("validate", "Report store findings");
  validate_cmd->add_option("--store", store, "Store file or alias")->required();
  validate_cmd->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json", "json-like"}));

  CLI::App *stats_cmd = app.add_subcommand("stats", "Corpus summary");
  stats_cmd->add_option("--store", store, "Store file or alias")->required();
  stats_cmd->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json", "json-like"}));

  CLI::App *classify_cmd =
      app.add_subcommand("classify", "Classify one gesture feature record");
  classify_cmd->add_option("--features", features, "Feature record file")
      ->required();
  classify_cmd->add_option("--prototypes", prototypes, "Prototype table file");
  classify_cmd->add_option("--tau", tau, "Minimum top score");
  classify_cmd->add_option("--delta", delta, "Minimum margin");

  CLI::App *serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--store", store, "Store file or alias")->required();
  serve_cmd->add_option("--prototypes", prototypes, "Prototype table file");
  serve_cmd->add_option("--bind", bind, "HOST:PORT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*import_cmd) {
      const Store s = ImportStore(ReadFile(input));
      WriteFileAtomically(store, ExportStore(s));
      out << "imported " << s.documents().size() << " documents, "
          << s.gestures().size() << " gestures\n";
      return kExitOk;
    }
    if (*export_cmd) {
      const std::string bytes = ExportStore(LoadStore(store));
      if (output.empty() || output == "-") {
        out << bytes;
      } else {
        WriteFileAtomically(output, bytes);
      }
      return kExitOk;
    }
    if (*validate_cmd) {
      const ValidationReport report =
          ParseStore(ReadFile(ResolveStorePath(store))).Validate();
      if (format == "table") {
        PrintReport(out, report);
      } else {
        out << CanonicalDump(ToJson(report));
      }
      return report.ok() ? kExitOk : kExitFindings;
    }
    if (*stats_cmd) {
      const CorpusSummary summary = Summarize(LoadStore(store));
      if (format == "table") {
        PrintSummaryTable(out, summary);
      } else {
        out << CanonicalDump(ToJson(summary));
      }
      return kExitOk;
    }
    if (*classify_cmd) {
      const GestureFeatures f = FeaturesFromJson(ParseJson(ReadFile(features)));
      const ClassificationResult r =
          ClassifyTurnFrame(f, LoadPrototypes(prototypes), {tau, delta});
      out << CanonicalDump(ToJson(r));
      return kExitOk;
    }
    if (*serve_cmd) {
      std::string host;
      int port = 0;
      if (!ParseBind(bind, host, port)) {
        PrintError(err, {ApiErrorCode::kBadRequest, "InvalidArgument",
                         "--bind must be HOST:PORT"});
        return kExitUsage;
      }
      std::unique_ptr<Service> service =
          Service::Open(ResolveStorePath(store), LoadPrototypes(prototypes));
      out << "serving " << ResolveStorePath(store) << " on " << host << ":" << port
          << std::endl;
      if (!service->Listen(host, port)) {
        PrintError(err, {ApiErrorCode::kBadRequest, "IoError",
                         "cannot bind " + bind});
        return kExitUsage;
      }
      return kExitOk;
    }
  } catch (const ValidationError &e) {
    PrintReport(err, e.report());
    return kExitFindings;
  } catch (const Error &e) {
    PrintError(err, ToApiError(e));
    return kExitUsage;
  } catch (const Json::exception &e) {
    PrintError(err, {ApiErrorCode::kBadRequest, "ParseError", e.what()});
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace framecast
