/*
 * Copyright 2026 The realcyclo Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef REALCYCLO_CLI_H_
#define REALCYCLO_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace realcyclo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

// Runs one subcommand (minpoly, mul, bench, cond, scan, sample). `args`
// excludes the program name. Returns 0 on success, 1 on usage or
// validation errors and 2 on internal failures.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace realcyclo

#endif  // REALCYCLO_CLI_H_
