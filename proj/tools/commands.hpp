// Copyright 2026 the amdlab authors
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

#ifndef AMDLAB_COMMANDS_HPP
#define AMDLAB_COMMANDS_HPP

namespace amd {

// Full command-line entry point, callable in-process from tests.
// Exit codes: 0 success, 1 a verification-style command found violations,
// 2 usage error, 3 invalid input or capacity overflow.
int run_cli(int argc, const char* const* argv);

}  // namespace amd

#endif  // AMDLAB_COMMANDS_HPP
