// Copyright 2026 The Framecast Authors.
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

#ifndef FRAMECAST_CLI_H_
#define FRAMECAST_CLI_H_

#include <ostream>
#include <string>
#include <string_view>

namespace framecast {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

// Resolves the store aliases "seed" and "paper-fixture" to the shipped data
// files; any other value is returned unchanged. The data directory is
// $FRAMECAST_DATA_DIR when set.
std::string ResolveStorePath(std::string_view store);

// Path of the shipped prototype table.
std::string DefaultPrototypesPath();

// framecast import|export|validate|stats|classify|serve
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace framecast

#endif  // FRAMECAST_CLI_H_
