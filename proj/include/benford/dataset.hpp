#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "benford/big_uint.hpp"
#include "benford/numerics.hpp"
#include "benford/stats.hpp"

namespace benford {

/// Positive integers read from one column; `skipped` counts the rows whose
/// cell was empty, non-numeric, zero or negative.
struct IngestResult {
    std::vector<BigUInt> values;
    std::size_t skipped = 0;
};

/// Reads a comma- or tab-delimited file (detected from the first line;
/// double quotes group fields). `column` is matched against the header row
/// first and otherwise read as a 0-based index. The first row counts as a
/// header unless its selected cell already parses as an integer. Thousands
/// separators (',', '_', '\'') and surrounding blanks are stripped.
///
/// Throws IoError for an unreadable file, an unknown column, a row too short
/// to hold the column (message carries the row number), or when no positive
/// value survives ("empty result set").
IngestResult ingest(const std::filesystem::path& path, const std::string& column);

/// Parses one cell as a strictly positive integer; false if it is not one.
bool parse_positive_integer(std::string_view cell, BigUInt& out);

struct DatasetSummary {
    std::size_t count = 0;
    double mean_bit_length = 0.0;
    std::size_t max_bit_length = 0;
    DigitHistogram digit_histogram{10};
    double tvd_to_benford = 0.0;
};

/// Exact bit lengths and leading digits of `values`; throws DomainError when
/// empty.
DatasetSummary summarize(const std::vector<BigUInt>& values, std::uint32_t base_omega = 10);

/// Moment fit p_halt = 1 / mean_bit_length; lambda is back-solved at
/// N = max_bit_length for reporting only.
ModelParams fit_ptm(const DatasetSummary& summary);

struct TruncationReport {
    double p_halt = 0.0;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;
    double model_mean_bit_length = 0.0;
    std::size_t model_max_bit_length = 0;
    double model_tvd = 0.0;
    double dataset_tvd = 0.0;
};

/// Samples `sample_size` strings from the fitted emitter (stream layout of
/// sample_many) and compares their first-digit TVD with the dataset's.
TruncationReport truncation_comparison(const DatasetSummary& summary, std::size_t sample_size,
                                       std::uint64_t seed, std::uint32_t base_omega = 10);

/// Report with fields count, skipped, mean_bit_length, max_bit_length,
/// dataset_tvd, model_tvd, model_mean_bit_length, model_max_bit_length,
/// p_halt, seed.
nlohmann::ordered_json analysis_report_json(const IngestResult& ingested,
                                            const DatasetSummary& summary,
                                            const TruncationReport& report);

}  // namespace benford
