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

#include "genmr/fixture.hpp"

#include <fstream>

#include "genmr/error.hpp"

namespace genmr {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) word = splitmix64(sm);
}

std::uint64_t Xoshiro256ss::next() {
  const std::uint64_t result = rotl64(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl64(state_[3], 45);
  return result;
}

std::uint64_t Xoshiro256ss::bounded(std::uint64_t n) {
  return next() % n;
}

namespace {

constexpr const char* kStates[] = {
    "Andhra Pradesh", "Assam",       "Bihar",  "Gujarat",   "Karnataka",
    "Kerala",         "Maharashtra", "Punjab", "Rajasthan", "Tamil Nadu",
};

constexpr const char* kSchoolTypes[] = {"Secondary School", "Primary School"};

constexpr const char* kFirstNames[] = {
    "Aarav", "Ananya",  "Arjun", "Diya",  "Ishaan", "Kavya", "Krishna", "Lakshmi",
    "Meera", "Nikhil",  "Priya", "Rahul", "Rohan",  "Sanya", "Tanvi",   "Vikram",
};

constexpr const char* kLastNames[] = {
    "Agarwal", "Bhat",  "Chopra", "Das",   "Gupta", "Iyer",   "Joshi", "Kumar",
    "Mehta",   "Nair",  "Patel",  "Rao",   "Reddy", "Sharma", "Singh", "Verma",
};

template <std::size_t N>
const char* pick(Xoshiro256ss& rng, const char* const (&pool)[N]) {
  return pool[rng.bounded(N)];
}

}  // namespace

std::string fixture_csv(std::uint64_t seed, std::size_t rows) {
  Xoshiro256ss rng(seed);
  std::string out = "Teacher_Id,State,School_Type,Name\n";
  for (std::size_t i = 0; i < rows; ++i) {
    const char* state = pick(rng, kStates);
    const char* school = pick(rng, kSchoolTypes);
    const char* first = pick(rng, kFirstNames);
    const char* last = pick(rng, kLastNames);
    out += std::to_string(i + 1);
    out.push_back(',');
    out += state;
    out.push_back(',');
    out += school;
    out.push_back(',');
    out += first;
    out.push_back(' ');
    out += last;
    out.push_back('\n');
  }
  return out;
}

TableData fixture_table(std::uint64_t seed, std::size_t rows) {
  return parse_csv_text(fixture_csv(seed, rows), "teachers");
}

void write_fixture_csv(const std::string& path, std::uint64_t seed, std::size_t rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << fixture_csv(seed, rows);
  out.flush();
  if (!out) fail(ErrorCode::IoError, "cannot write fixture to '" + path + "'");
}

}  // namespace genmr
