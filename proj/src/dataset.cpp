#include "benford/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string_view>

#include "benford/errors.hpp"
#include "benford/magnitude.hpp"
#include "benford/ptm.hpp"

namespace benford {

namespace {

std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"') {
            if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else {
                quoted = !quoted;
            }
        } else if (c == delim && !quoted) {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

char detect_delimiter(const std::string& line) {
    std::size_t commas = 0, tabs = 0;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') quoted = !quoted;
        if (quoted) continue;
        commas += c == ',';
        tabs += c == '\t';
    }
    return tabs > commas ? '\t' : ',';
}

std::string_view trim(std::string_view s) {
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && blank(s.back())) s.remove_suffix(1);
    return s;
}

bool looks_like_integer(std::string_view cell) {
    cell = trim(cell);
    if (!cell.empty() && (cell.front() == '-' || cell.front() == '+')) cell.remove_prefix(1);
    if (cell.empty()) return false;
    return std::all_of(cell.begin(), cell.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == ',' || c == '_' || c == '\'';
    });
}

}  // namespace

bool parse_positive_integer(std::string_view cell, BigUInt& out) {
    cell = trim(cell);
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    std::string digits;
    for (char c : cell) {
        if (c == ',' || c == '_' || c == '\'') continue;
        if (c < '0' || c > '9') return false;
        digits += c;
    }
    if (digits.empty()) return false;
    BigUInt v = BigUInt::from_decimal(digits);
    if (v.is_zero()) return false;
    out = std::move(v);
    return true;
}

IngestResult ingest(const std::filesystem::path& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw IoError(path.string() + ": empty result set");
    const char delim = detect_delimiter(line);
    std::vector<std::string> first = split_fields(line, delim);

    std::size_t index = 0;
    bool have_index = false;
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (trim(first[i]) == trim(column)) {
            index = i;
            have_index = true;
            break;
        }
    }
    if (!have_index) {
        const std::string_view c = trim(column);
        const auto res = std::from_chars(c.data(), c.data() + c.size(), index);
        if (res.ec != std::errc{} || res.ptr != c.data() + c.size())
            throw IoError(path.string() + ": no column named '" + column + "'");
    }

    IngestResult result;
    std::size_t row = 1;
    const auto take = [&](const std::vector<std::string>& fields) {
        if (index >= fields.size())
            throw IoError(path.string() + ": row " + std::to_string(row) + " has " +
                          std::to_string(fields.size()) + " fields, column index " +
                          std::to_string(index) + " requested");
        BigUInt v;
        if (parse_positive_integer(fields[index], v))
            result.values.push_back(std::move(v));
        else
            ++result.skipped;
    };

    const bool header = have_index || index >= first.size() || !looks_like_integer(first[index]);
    if (!header) take(first);
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        take(split_fields(line, delim));
    }
    if (in.bad()) throw IoError("read error on " + path.string());
    if (result.values.empty()) throw IoError(path.string() + ": empty result set");
    return result;
}

DatasetSummary summarize(const std::vector<BigUInt>& values, std::uint32_t base_omega) {
    if (values.empty()) throw DomainError("summarize: no values");
    DatasetSummary s;
    s.count = values.size();
    s.digit_histogram = DigitHistogram(base_omega);
    std::size_t bit_sum = 0;
    for (const BigUInt& v : values) {
        const std::size_t bits = v.bit_length();
        bit_sum += bits;
        s.max_bit_length = std::max(s.max_bit_length, bits);
        s.digit_histogram.add(leading_digit(v, base_omega).digit);
    }
    s.mean_bit_length = static_cast<double>(bit_sum) / static_cast<double>(s.count);
    s.tvd_to_benford = tvd(s.digit_histogram.frequencies(), benford_reference(base_omega));
    return s;
}

ModelParams fit_ptm(const DatasetSummary& summary) {
    if (!(summary.mean_bit_length >= 1.0)) throw DomainError("fit_ptm: mean bit length below 1");
    const auto n = static_cast<std::uint32_t>(std::max<std::size_t>(summary.max_bit_length, 1));
    return ModelParams::from_halt(1.0 / summary.mean_bit_length, n);
}

TruncationReport truncation_comparison(const DatasetSummary& summary, std::size_t sample_size,
                                       std::uint64_t seed, std::uint32_t base_omega) {
    if (sample_size == 0) throw DomainError("truncation_comparison: sample size must be positive");
    const ModelParams params = fit_ptm(summary);
    const DigitClassifier classifier(base_omega);

    std::vector<std::uint32_t> digits(sample_size);
    std::vector<std::size_t> lengths(sample_size);
    bool capped = false;
#pragma omp parallel
    {
        std::vector<std::uint64_t> words;
#pragma omp for schedule(static) reduction(|| : capped)
        for (std::size_t i = 0; i < sample_size; ++i) {
            rng::Xoshiro256 gen(string_stream_seed(seed, i));
            try {
                lengths[i] = sample_direct_into(params, gen, words);
                digits[i] = classifier.classify({words, lengths[i]});
            } catch (const LengthCapExceeded&) {
                capped = true;
            }
        }
    }
    if (capped) throw LengthCapExceeded("truncation_comparison: sampled string exceeds cap");

    DigitHistogram h(base_omega);
    std::size_t bit_sum = 0;
    TruncationReport r;
    for (std::size_t i = 0; i < sample_size; ++i) {
        h.add(digits[i]);
        bit_sum += lengths[i];
        r.model_max_bit_length = std::max(r.model_max_bit_length, lengths[i]);
    }
    r.p_halt = params.p_halt;
    r.sample_size = sample_size;
    r.seed = seed;
    r.model_mean_bit_length = static_cast<double>(bit_sum) / static_cast<double>(sample_size);
    r.model_tvd = tvd(h.frequencies(), benford_reference(base_omega));
    r.dataset_tvd = summary.tvd_to_benford;
    return r;
}

nlohmann::ordered_json analysis_report_json(const IngestResult& ingested,
                                            const DatasetSummary& summary,
                                            const TruncationReport& report) {
    nlohmann::ordered_json j;
    j["count"] = summary.count;
    j["skipped"] = ingested.skipped;
    j["mean_bit_length"] = summary.mean_bit_length;
    j["max_bit_length"] = summary.max_bit_length;
    j["dataset_tvd"] = report.dataset_tvd;
    j["model_tvd"] = report.model_tvd;
    j["model_mean_bit_length"] = report.model_mean_bit_length;
    j["model_max_bit_length"] = report.model_max_bit_length;
    j["p_halt"] = report.p_halt;
    j["seed"] = report.seed;
    return j;
}

}  // namespace benford
