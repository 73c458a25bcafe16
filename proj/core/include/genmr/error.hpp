// Copyright (c) The GENMR Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace genmr {

// Every failure the engine can report. The CLI maps these onto its exit-code
// contract via exit_class().
enum class ErrorCode {
  // lexing / parsing / compilation
  UnterminatedString,
  IllegalCharacter,
  SyntaxError,
  UnsupportedConstruct,
  PredicateTooComplex,
  UnknownColumn,
  UnknownTable,
  SubstringOutOfRange,
  // cluster / placement feasibility
  InsufficientCapacity,
  StrategyInfeasible,
  IndexOutOfRange,
  // input files
  IoError,
  RaggedRow,
  DuplicateColumn,
};

const char* error_code_name(ErrorCode code);

// Exit-code class for the CLI: 2 = query error, 3 = infeasible configuration,
// 4 = I/O or malformed input file.
int exit_class(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       std::optional<std::size_t> position = std::nullopt);

}  // namespace genmr
