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

#include "genmr/error.hpp"

namespace genmr {

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> position) {
  std::string out = error_code_name(code);
  out += ": ";
  out += message;
  if (position) {
    out += " (byte ";
    out += std::to_string(*position);
    out += ")";
  }
  return out;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnterminatedString: return "UnterminatedString";
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::PredicateTooComplex: return "PredicateTooComplex";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::SubstringOutOfRange: return "SubstringOutOfRange";
    case ErrorCode::InsufficientCapacity: return "InsufficientCapacity";
    case ErrorCode::StrategyInfeasible: return "StrategyInfeasible";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::RaggedRow: return "RaggedRow";
    case ErrorCode::DuplicateColumn: return "DuplicateColumn";
  }
  return "UnknownError";
}

int exit_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnterminatedString:
    case ErrorCode::IllegalCharacter:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnsupportedConstruct:
    case ErrorCode::PredicateTooComplex:
    case ErrorCode::UnknownColumn:
    case ErrorCode::UnknownTable:
    case ErrorCode::SubstringOutOfRange:
      return 2;
    case ErrorCode::InsufficientCapacity:
    case ErrorCode::StrategyInfeasible:
    case ErrorCode::IndexOutOfRange:
      return 3;
    case ErrorCode::IoError:
    case ErrorCode::RaggedRow:
    case ErrorCode::DuplicateColumn:
      return 4;
  }
  return 2;
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(format_message(code, message, position)),
      code_(code),
      position_(position) {}

void fail(ErrorCode code, const std::string& message,
          std::optional<std::size_t> position) {
  throw Error(code, message, position);
}

}  // namespace genmr
