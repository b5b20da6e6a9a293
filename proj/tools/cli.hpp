// Copyright 2026 The spinor_secant Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "spinor_secant/field.hpp"

namespace spinor_secant::cli {

enum class Command { kDim, kTable, kCertify, kSelftest };
enum class Format { kText, kJson, kCsv };
enum class CertifyTarget { kRnc, kS7, kBase12, kOrbit, kStability };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

struct RunConfig {
  Command command = Command::kDim;
  std::optional<std::size_t> h;
  std::optional<std::size_t> k;
  std::optional<std::size_t> h_min;
  std::optional<std::size_t> h_max;
  std::optional<std::size_t> s;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::uint64_t prime = kMersenne61;
  Format format = Format::kText;
  CertifyTarget certify_target = CertifyTarget::kBase12;
  bool rational = false;
  bool attach_certificates = false;
  std::size_t threads = 0;  ///< 0 = auto
};

/// Executes a validated configuration; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (reading SPINOR_SECANT_THREADS) and runs. Usage errors go to `err` with exit 1.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Invariant suite behind `selftest`; prints one PASS/FAIL line per check.
bool run_selftest(std::ostream& out);

}  // namespace spinor_secant::cli
