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

#ifndef NLOS_SCENARIO_IO_HPP
#define NLOS_SCENARIO_IO_HPP

#include "nlos/scenarios.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nlos
{
    /// Malformed scenario text. `line`/`column` are 1-based and 0 when the
    /// problem is structural; `field` is a JSON-pointer-like path.
    class ScenarioParseError : public std::runtime_error
    {
    public:
        ScenarioParseError(const std::string &what, std::string field, int line = 0, int column = 0);

        const std::string &field() const { return field_; }
        int line() const { return line_; }
        int column() const { return column_; }

    private:
        std::string field_;
        int line_;
        int column_;
    };

    /// Well-formed scenario that breaks scene or terminal invariants.
    class ScenarioValidationError : public std::runtime_error
    {
    public:
        explicit ScenarioValidationError(std::vector<Violation> violations);

        const std::vector<Violation> &violations() const { return violations_; }

    private:
        std::vector<Violation> violations_;
    };

    /// Canonical JSON: fixed key order, two-space indent, trailing newline,
    /// shortest round-trip number formatting. Panels are always written as
    /// explicit cell tables.
    std::string to_json_text(const Scenario &s);

    /// Reads the JSON schema written by to_json_text. Panels may instead use
    /// {"design": {"frequency_ghz", "cells", "mode"}}. When `validate` is set,
    /// throws ScenarioValidationError on any violation.
    Scenario parse_scenario(std::string_view text, bool validate = true);

    Scenario load_scenario(const std::filesystem::path &file, bool validate = true);
    void save_scenario(const Scenario &s, const std::filesystem::path &file);
} // namespace nlos

#endif
