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

#ifndef MSOKG_DATASET_H_
#define MSOKG_DATASET_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msokg/reasoner.h"
#include "msokg/schema.h"
#include "msokg/turtle.h"
#include "msokg/validator.h"

namespace msokg {

enum class LoadErrorKind { kParseFailed, kValidationFailed, kIoFailed };

std::string_view ToString(LoadErrorKind kind);

class LoadError : public std::runtime_error {
 public:
  LoadError(LoadErrorKind kind, std::string path, std::string message);
  LoadError(ValidationReport report, std::string message);

  LoadErrorKind kind() const { return kind_; }
  const std::string& path() const { return path_; }
  // Set for ParseFailed caused by a Turtle syntax error.
  std::optional<SourcePos> position;
  // Set for ValidationFailed.
  std::optional<ValidationReport> report;

 private:
  LoadErrorKind kind_;
  std::string path_;
};

// Parsed input files, before validation.
struct Dataset {
  Schema schema;
  std::vector<Triple> asserted;
  PrefixMap prefixes;
};

// Reads and parses `paths`. Files that declare classes or properties form the
// schema; everything else is instance data. `schema_path`, when given, takes
// precedence; with neither, the builtin schema applies.
Dataset ReadDataset(const std::vector<std::string>& paths,
                    const std::optional<std::string>& schema_path = {});

// A validated, materialized dataset.
struct LoadedDataset {
  Schema schema;
  MaterializedGraph graph;
  ValidationReport report;
};

// Read -> validate -> materialize. Throws LoadError; validation errors are
// fatal, warnings are kept in the report.
LoadedDataset LoadDataset(const std::vector<std::string>& paths,
                          const std::optional<std::string>& schema_path = {});

LoadedDataset MaterializeDataset(Dataset dataset);

std::string ReadFileOrThrow(const std::string& path);

}  // namespace msokg

#endif  // MSOKG_DATASET_H_
