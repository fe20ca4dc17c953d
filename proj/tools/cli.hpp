// SPDX-License-Identifier: Apache-2.0
//
// nlos60: site-specific 60 GHz indoor propagation with passive reflectors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NLOS_TOOLS_CLI_HPP
#define NLOS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nlos::cli
{
    enum ExitCode : int
    {
        ok = 0,
        usage = 2,
        invalid_input = 3,
        internal = 4,
    };

    /// Runs one subcommand. `args` excludes the program name. CSV goes to
    /// `out` unless --out names a file; diagnostics go to `err`.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
} // namespace nlos::cli

#endif
