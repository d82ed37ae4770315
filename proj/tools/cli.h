// Copyright 2026 The kuniform Authors
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

#ifndef KUNIFORM_TOOLS_CLI_H
#define KUNIFORM_TOOLS_CLI_H

#include <iosfwd>

namespace kuniform {

/// Exit codes: 0 ok, 1 parse/usage error, 2 verification failure,
/// 3 infeasible, 4 unsupported.
int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace kuniform

#endif
