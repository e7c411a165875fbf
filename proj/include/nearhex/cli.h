// Copyright 2026 The nearhex Authors
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

#ifndef NEARHEX_CLI_H_
#define NEARHEX_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace nearhex {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool. args[0] is the program name. Commands:
//   build  --model M [--out F]
//   export --model M [--format json]
//   verify --model M [--checks c1,c2,...] [--out F]
//   iso    A B
//   report [--out F]
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace nearhex

#endif  // NEARHEX_CLI_H_
