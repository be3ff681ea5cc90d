#include "benford/manifest.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <istream>
#include <ostream>
#include <string_view>

#include "benford/errors.hpp"
#include "benford/format.hpp"

namespace benford {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view text, const std::string& key) {
    text = trim(text);
    T v{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw DomainError("invalid value for '" + key + "': '" + std::string(text) + "'");
    return v;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& key) {
    std::vector<T> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        out.push_back(parse_number<T>(rest.substr(0, comma), key));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (out.empty()) throw DomainError("empty list for '" + key + "'");
    return out;
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
    KeyValues kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
        kv[std::string(trim(s.substr(0, eq)))] = std::string(trim(s.substr(eq + 1)));
    }
    return kv;
}

void write_key_values(std::ostream& out, const KeyValues& kv) {
    for (const auto& [k, v] : kv) out << k << " = " << v << '\n';
}

std::vector<double> parse_real_list(const std::string& text) { return parse_list<double>(text, "list"); }

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
    return parse_list<std::uint32_t>(text, "list");
}

SweepConfig sweep_config_from(const KeyValues& kv, SweepConfig base) {
    for (const auto& [key, value] : kv) {
        if (key == "lambdas")
            base.lambdas = parse_list<double>(value, key);
        else if (key == "n_scales")
            base.n_scales = parse_list<std::uint32_t>(value, key);
        else if (key == "strings_per_trial")
            base.strings_per_trial = parse_number<std::size_t>(value, key);
        else if (key == "trials")
            base.trials = parse_number<std::size_t>(value, key);
        else if (key == "base")
            base.base_omega = parse_number<std::uint32_t>(value, key);
        else if (key == "seed")
            base.master_seed = parse_number<std::uint64_t>(value, key);
        else if (std::find(std::begin(kManifestMetaKeys), std::end(kManifestMetaKeys), key) ==
                 std::end(kManifestMetaKeys))
            throw DomainError("unknown sweep config key '" + key + "'");
    }
    return base;
}

KeyValues to_key_values(const SweepConfig& config) {
    KeyValues kv;
    std::string lambdas;
    for (double l : config.lambdas) lambdas += (lambdas.empty() ? "" : ",") + format_real(l);
    std::string ns;
    for (std::uint32_t n : config.n_scales) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    kv["lambdas"] = lambdas;
    kv["n_scales"] = ns;
    kv["strings_per_trial"] = std::to_string(config.strings_per_trial);
    kv["trials"] = std::to_string(config.trials);
    kv["base"] = std::to_string(config.base_omega);
    kv["seed"] = std::to_string(config.master_seed);
    return kv;
}

std::string RunManifest::now_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void RunManifest::write(std::ostream& out) const {
    KeyValues all = params;
    all["subcommand"] = subcommand;
    all["version"] = version;
    all["timestamp"] = timestamp;
    write_key_values(out, all);
}

}  // namespace benford
