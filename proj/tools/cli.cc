// Copyright 2026 The msokg Authors.
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


#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "msokg/dataset.h"
#include "msokg/json_io.h"
#include "msokg/query.h"
#include "msokg/service.h"
#include "msokg/traversal.h"
#include "msokg/turtle.h"

namespace msokg {

namespace {

struct Flags {
  bool json = false;
  std::optional<std::string> schema;
  std::vector<std::string> files;
  std::string query;
  std::string from;
  std::string search;
  std::size_t limit = kDefaultPageSize;
  std::string output;
  ServeOptions serve;
};

// Maps library failures onto exit codes; the message goes to `err`.
class Runner {
 public:
  Runner(const Flags& flags, std::ostream& out, std::ostream& err)
      : flags_(flags), out_(out), err_(err) {}

  int Run(const std::string& command) {
    try {
      if (command == "validate") return Validate();
      if (command == "load") return Load();
      if (command == "query") return Query();
      if (command == "chain") return ChainCmd();
      if (command == "search") return Search();
      if (command == "export") return Export();
      if (command == "serve") return ServeCmd();
      err_ << "kg: unknown command " << command << "\n";
      return kExitUsage;
    } catch (const LoadError& e) {
      return Report(e);
    }
  }

 private:
  LoadedDataset LoadAll() { return LoadDataset(flags_.files, flags_.schema); }

  int Report(const LoadError& e) {
    if (flags_.json) {
      out_ << ToJson(e, StandardPrefixes()).dump(2) << "\n";
    }
    err_ << "kg: " << e.what() << "\n";
    if (e.report) err_ << FormatReport(*e.report, StandardPrefixes());
    return e.kind() == LoadErrorKind::kIoFailed ? kExitIo : kExitDomain;
  }

  int Validate() {
    Dataset ds = ReadDataset(flags_.files, flags_.schema);
    ValidationReport report = msokg::Validate(ds.asserted, ds.schema);
    if (flags_.json) {
      out_ << ToJson(report, ds.prefixes).dump(2) << "\n";
    } else {
      out_ << FormatReport(report, ds.prefixes);
    }
    return report.ok() ? kExitOk : kExitDomain;
  }

  int Load() {
    LoadedDataset ds = LoadAll();
    const InferenceStats& st = ds.graph.stats();
    if (flags_.json) {
      out_ << ToJson(st).dump(2) << "\n";
      return kExitOk;
    }
    out_ << "asserted: " << st.asserted_count << "\n"
         << "inferred: " << st.inferred_count << "\n"
         << "total: " << ds.graph.snapshot().size() << "\n"
         << "iterations: " << st.iterations << "\n";
    for (const auto& [rule, n] : st.rule_counts) {
      out_ << rule << ": " << n << "\n";
    }
    out_ << FormatReport(ds.report, ds.graph.snapshot().prefixes());
    return kExitOk;
  }

  int Query() {
    QueryAst ast;
    try {
      ast = ParseQuery(flags_.query);
    } catch (const QueryParseError& e) {
      if (flags_.json) out_ << ToJson(ToApiError(e)).dump(2) << "\n";
      err_ << "kg: query:" << e.line() << ":" << e.column() << ": "
           << ToString(e.kind()) << ": " << e.message() << "\n";
      return kExitDomain;
    }
    LoadedDataset ds = LoadAll();
    const GraphSnapshot& snap = ds.graph.snapshot();
    try {
      BindingTable table = Evaluate(ast, snap);
      if (flags_.json) {
        out_ << ToJson(table, snap.prefixes()).dump(2) << "\n";
      } else {
        out_ << FormatTable(table, snap.prefixes());
      }
    } catch (const EvaluationError& e) {
      err_ << "kg: " << e.what() << "\n";
      return kExitDomain;
    }
    return kExitOk;
  }

  int ChainCmd() {
    LoadedDataset ds = LoadAll();
    const GraphSnapshot& snap = ds.graph.snapshot();
    std::string start = ExpandIri(flags_.from, snap.prefixes());
    if (start.empty()) {
      err_ << "kg: cannot resolve --from " << flags_.from << "\n";
      return kExitUsage;
    }
    std::vector<Chain> chains;
    try {
      chains = MsoChains(snap, ds.schema, start);
    } catch (const NotAChainClass& e) {
      err_ << "kg: " << e.what() << "\n";
      return kExitDomain;
    }
    if (flags_.json) {
      out_ << ToJson(chains, snap.prefixes()).dump(2) << "\n";
    } else {
      for (const Chain& c : chains) out_ << FormatChain(c, snap.prefixes()) << "\n";
    }
    return kExitOk;
  }

  int Search() {
    LoadedDataset ds = LoadAll();
    const GraphSnapshot& snap = ds.graph.snapshot();
    std::vector<SearchHit> hits;
    try {
      hits = KeywordSearch(snap, flags_.search, flags_.limit);
    } catch (const InvalidQuery& e) {
      err_ << "kg: " << e.what() << "\n";
      return kExitDomain;
    }
    if (flags_.json) {
      out_ << ToJson(hits, snap.prefixes()).dump(2) << "\n";
      return kExitOk;
    }
    for (const SearchHit& h : hits) {
      out_ << DisplayIri(h.iri, snap.prefixes()) << "\t" << h.label << "\t"
           << ToString(h.match_field) << "\t" << ToString(h.rank) << "\n";
    }
    return kExitOk;
  }

  int Export() {
    LoadedDataset ds = LoadAll();
    std::string text = SerializeTurtle(ds.graph.snapshot());
    std::ofstream file(flags_.output, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
      err_ << "kg: cannot write " << flags_.output << "\n";
      return kExitIo;
    }
    if (flags_.json) {
      out_ << Json{{"path", flags_.output},
                   {"triples", ds.graph.snapshot().size()}}
                  .dump(2)
           << "\n";
    }
    return kExitOk;
  }

  int ServeCmd() {
    LoadedDataset ds = LoadAll();
    KgService service(std::move(ds), flags_.files, flags_.schema);
    bool ok = service.Serve(flags_.serve, out_, [&](int port) {
      err_ << "kg: serving on http://" << flags_.serve.host << ":" << port
           << "\n";
    });
    if (!ok) {
      err_ << "kg: cannot bind " << flags_.serve.host << ":"
           << flags_.serve.port << "\n";
      return kExitIo;
    }
    return kExitOk;
  }

  const Flags& flags_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Flags flags;
  CLI::App app{"Knowledge-graph engine for mathematical models and algorithms",
               "kg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", flags.json, "Machine-readable JSON output");
  app.add_option("--schema", flags.schema, "Schema Turtle file");

  auto files = [&](CLI::App* sub) {
    sub->add_option("files", flags.files, "Turtle input files")->required();
  };
  CLI::App* load = app.add_subcommand("load", "Load, validate and materialize");
  files(load);
  CLI::App* validate = app.add_subcommand("validate", "Validate against the schema");
  files(validate);
  CLI::App* query = app.add_subcommand("query", "Evaluate a SELECT query");
  files(query);
  query->add_option("-e,--expr", flags.query, "Query text")->required();
  CLI::App* chain = app.add_subcommand("chain", "List workflow chains");
  files(chain);
  chain->add_option("--from", flags.from, "Start entity (CURIE or <IRI>)")
      ->required();
  CLI::App* search = app.add_subcommand("search", "Keyword search");
  files(search);
  search->add_option("-q,--query", flags.search, "Search term")->required();
  search->add_option("--limit", flags.limit, "Maximum hits")
      ->check(CLI::Range(std::size_t{1}, kMaxPageSize));
  CLI::App* exp = app.add_subcommand("export", "Write the materialized graph");
  files(exp);
  exp->add_option("-o,--output", flags.output, "Output Turtle file")->required();
  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  files(serve);
  serve->add_option("--port", flags.serve.port, "Port (0 picks one)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--bind", flags.serve.host, "Bind address");
  serve->add_option("--cors", flags.serve.cors_origin, "CORS origin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return Runner(flags, out, err).Run(command);
}

}  // namespace msokg
