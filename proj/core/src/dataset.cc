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

#include "msokg/dataset.h"

#include <fstream>
#include <sstream>

namespace msokg {

std::string_view ToString(LoadErrorKind kind) {
  switch (kind) {
    case LoadErrorKind::kParseFailed: return "ParseFailed";
    case LoadErrorKind::kValidationFailed: return "ValidationFailed";
    case LoadErrorKind::kIoFailed: return "IoFailed";
  }
  return "Unknown";
}

LoadError::LoadError(LoadErrorKind kind, std::string path, std::string message)
    : std::runtime_error(path.empty() ? message : path + ": " + message),
      kind_(kind),
      path_(std::move(path)) {}

LoadError::LoadError(ValidationReport r, std::string message)
    : std::runtime_error(std::move(message)),
      report(std::move(r)),
      kind_(LoadErrorKind::kValidationFailed) {}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(LoadErrorKind::kIoFailed, path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw LoadError(LoadErrorKind::kIoFailed, path, "read error");
  return buf.str();
}

namespace {

ParsedDocument ParseFile(const std::string& path) {
  std::string text = ReadFileOrThrow(path);
  try {
    return ParseTurtle(text);
  } catch (const ParseError& e) {
    LoadError err(LoadErrorKind::kParseFailed, path, e.what());
    err.position = SourcePos{e.line(), e.column()};
    throw err;
  }
}

Schema SchemaOrThrow(const ParsedDocument& doc, const std::string& path) {
  try {
    return SchemaFromTriples(doc);
  } catch (const SchemaError& e) {
    throw LoadError(LoadErrorKind::kParseFailed, path, e.what());
  }
}

}  // namespace

Dataset ReadDataset(const std::vector<std::string>& paths,
                    const std::optional<std::string>& schema_path) {
  // All files are read before any is parsed.
  std::vector<std::string> texts;
  for (const std::string& p : paths) texts.push_back(ReadFileOrThrow(p));
  std::optional<ParsedDocument> explicit_schema;
  if (schema_path) explicit_schema = ParseFile(*schema_path);

  Dataset ds;
  std::optional<Schema> schema;
  if (explicit_schema) schema = SchemaOrThrow(*explicit_schema, *schema_path);

  PrefixMap file_prefixes;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    ParsedDocument doc;
    try {
      doc = ParseTurtle(texts[i]);
    } catch (const ParseError& e) {
      LoadError err(LoadErrorKind::kParseFailed, paths[i], e.what());
      err.position = SourcePos{e.line(), e.column()};
      throw err;
    }
    if (DeclaresSchema(doc)) {
      if (!explicit_schema && !schema) schema = SchemaOrThrow(doc, paths[i]);
      continue;
    }
    for (const auto& [label, ns] : doc.prefixes) file_prefixes[label] = ns;
    ds.asserted.insert(ds.asserted.end(),
                       std::make_move_iterator(doc.triples.begin()),
                       std::make_move_iterator(doc.triples.end()));
  }

  ds.schema = schema ? std::move(*schema) : BuiltinSchema();
  ds.prefixes = StandardPrefixes();
  ds.prefixes["mmo"] = ds.schema.ns;
  for (const auto& [label, ns] : file_prefixes) ds.prefixes[label] = ns;
  return ds;
}

LoadedDataset MaterializeDataset(Dataset ds) {
  ValidationReport report = Validate(ds.asserted, ds.schema);
  if (!report.ok()) {
    std::string msg = "validation failed: " +
                      std::to_string(report.error_count) + " errors, " +
                      std::to_string(report.warning_count) + " warnings";
    throw LoadError(std::move(report), std::move(msg));
  }
  MaterializedGraph graph =
      Materialize(ds.asserted, ds.schema, std::move(ds.prefixes));
  return LoadedDataset{std::move(ds.schema), std::move(graph),
                       std::move(report)};
}

LoadedDataset LoadDataset(const std::vector<std::string>& paths,
                          const std::optional<std::string>& schema_path) {
  return MaterializeDataset(ReadDataset(paths, schema_path));
}

}  // namespace msokg
