#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "benford/harness.hpp"

namespace benford {

/// Flat `key = value` text, one pair per line; '#' starts a comment.
/// Keys are kept sorted so serialization is canonical.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in);
void write_key_values(std::ostream& out, const KeyValues& kv);

/// Keys a manifest carries besides the run parameters; ignored when a
/// manifest is read back as a config.
inline constexpr const char* kManifestMetaKeys[] = {"subcommand", "version", "timestamp"};

/// Applies the keys lambdas, n_scales, strings_per_trial, trials, base, seed
/// on top of `base`. Unknown keys throw DomainError.
SweepConfig sweep_config_from(const KeyValues& kv, SweepConfig base = SweepConfig::full_default());
KeyValues to_key_values(const SweepConfig& config);

/// Subcommand, tool version, timestamp, and the full parameter echo.
struct RunManifest {
    std::string subcommand;
    KeyValues params;
    std::string version = BENFORD_VERSION;
    std::string timestamp;

    /// Stamps the current UTC time (ISO 8601).
    static std::string now_utc();
    void write(std::ostream& out) const;
};

/// Splits "a,b,c" into reals / unsigned integers; DomainError on junk.
std::vector<double> parse_real_list(const std::string& text);
std::vector<std::uint32_t> parse_uint_list(const std::string& text);

}  // namespace benford
