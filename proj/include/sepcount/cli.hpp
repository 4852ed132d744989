#pragma once

// Command-line front end. Every sub-command streams OutputRecords as JSON
// lines (keys in the fixed order command, inputs, result, provenance), except
// `table --format csv`.
//
// Exit status: 0 success, 1 usage error, 2 domain error, 3 verification mismatch.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace sepcount::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kMismatch = 3 };

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    /// Tagged value: {"type": ..., "value": ..., extra fields}. Integers are
    /// decimal strings and rationals "numerator/denominator".
    nlohmann::ordered_json result;
    std::string provenance;  // "formula" | "enumeration" | "both"

    nlohmann::ordered_json to_json() const;
    static OutputRecord from_json(const nlohmann::ordered_json& j);

    std::string to_line() const { return to_json().dump(); }
    static OutputRecord parse_line(std::string_view line);

    bool operator==(const OutputRecord&) const = default;
};

/// Parses a possibly negative decimal modulus and canonicalizes it to |n|.
std::uint64_t parse_modulus_text(std::string_view text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepcount::cli
