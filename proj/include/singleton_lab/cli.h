// Copyright 2026 The Singleton Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SINGLETON_LAB_CLI_H
#define SINGLETON_LAB_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace singleton_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char *kSeedEnv = "SINGLETON_LAB_SEED";

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 1 when a violation or failure was found, 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace singleton_lab::cli

#endif
