// Copyright 2026 The crownkit Authors
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

#include <ostream>

namespace crownkit {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPrecondition = 3;

/// Entry point of the crownkit executable, with injectable streams.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace crownkit
