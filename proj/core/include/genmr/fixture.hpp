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

#include <array>
#include <cstdint>
#include <string>

#include "genmr/table.hpp"

namespace genmr {

// splitmix64 step: advances state and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256** generator, seeded from splitmix64 so any 64-bit seed yields a
// well-mixed state. Fixed algorithm, never std::mt19937, so fixtures are
// byte-identical across standard libraries and platforms.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed);

  std::uint64_t next();

  // Uniform-ish draw in [0, n); n must be nonzero.
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::array<std::uint64_t, 4> state_;
};

inline constexpr std::uint64_t kDefaultFixtureSeed = 42;
inline constexpr std::size_t kDefaultFixtureRows = 325;

// Synthetic stand-in for the unpublished teachers table: columns
// (Teacher_Id, State, School_Type, Name), states drawn from a fixed
// ten-state list including "Andhra Pradesh", school types from
// {"Secondary School", "Primary School"}. Same (seed, rows) gives
// byte-identical CSV text with LF endings.
std::string fixture_csv(std::uint64_t seed, std::size_t rows);

// fixture_csv parsed into a table named "teachers".
TableData fixture_table(std::uint64_t seed, std::size_t rows);

// Writes fixture_csv to a file; raises IoError on failure.
void write_fixture_csv(const std::string& path, std::uint64_t seed, std::size_t rows);

}  // namespace genmr
