// Copyright 2026 The bb84sec Authors
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

#ifndef BB84SEC_CLI_HPP
#define BB84SEC_CLI_HPP

namespace bb84sec {

/// Entry point of the bb84sec tool. Subcommands: validate, bounds,
/// brute-check, simulate. Exit status 0 means every check passed / the
/// report was produced; 1 means a check failed; 2 means bad usage or a
/// config error.
int run_cli(int argc, const char* const* argv);

}  // namespace bb84sec

#endif  // BB84SEC_CLI_HPP
