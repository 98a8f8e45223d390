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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kurev {

/// Process exit codes used by the command-line front end.
enum class ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kData = 2,
  kInternal = 3,
};

/// Base of every error raised by the library. The exit code tells the CLI
/// how to report it.
class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ExitCode::kUsage, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ExitCode::kData, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ExitCode::kInternal, what) {}
};

// Raised while loading or validating a capability catalog.
class CatalogError : public DataError {
 public:
  using DataError::DataError;
};

// Input that cannot be treated as Java source at all.
class ParseError : public DataError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : DataError(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Problem with the environment: missing repository, unreadable path.
class SetupError : public DataError {
 public:
  using DataError::DataError;
};

// A record in a structured input file violates its schema.
class SchemaError : public DataError {
 public:
  SchemaError(std::size_t record, const std::string& field,
              const std::string& what)
      : DataError("record " + std::to_string(record) + ", field '" + field +
                  "': " + what),
        record_(record),
        field_(field) {}

  std::size_t record() const noexcept { return record_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t record_;
  std::string field_;
};

class SplitError : public DataError {
 public:
  using DataError::DataError;
};

// A caller broke a documented precondition.
class ContractViolation : public DataError {
 public:
  using DataError::DataError;
};

// KUREC was asked to rank reviewers for a PR whose Java files contain no KU.
class NoKnowledgeUnitsError : public DataError {
 public:
  using DataError::DataError;
};

class DegenerateDataError : public DataError {
 public:
  using DataError::DataError;
};

class ParameterError : public DataError {
 public:
  using DataError::DataError;
};

class UndefinedMetricError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace kurev
