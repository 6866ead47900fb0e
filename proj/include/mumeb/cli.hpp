// Copyright 2026 The mumeb Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mumeb::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kSchema = 2,
    kVerificationFailed = 3,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a run depends on; there is no config file.
struct RunConfig {
    std::string command;     // construct, verify, bound, mols, gauss
    std::string subcommand;  // mols: gen, check, net, mubs
    std::optional<std::uint64_t> d, k, x;
    std::optional<std::uint64_t> q, c, order;  // gauss reference mode
    std::string variant = "gauss";
    double tolerance = 1e-8;
    bool pairs_only = false;
    bool json = false;
    bool with_identity = false;
    std::string family_path;
    std::string mols_path;
    std::string out_path;
    std::string report_path;
    std::string k_range;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;

    /// Canonical argument list (without program name) that parses back to *this.
    std::vector<std::string> to_args() const;
};

/// Parses arguments (without program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Parses and executes; returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mumeb::cli
