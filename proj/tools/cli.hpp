/* Copyright 2026 The chevalley authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Command-line front end. `run` is the whole program minus process exit, so
// tests can drive it directly.

#ifndef CHEVALLEY_CLI_HPP
#define CHEVALLEY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chevalley::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kParseError = 2, kNormalization = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chevalley::cli

#endif  // CHEVALLEY_CLI_HPP
