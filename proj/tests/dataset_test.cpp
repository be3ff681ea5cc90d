#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>

#include "benford/dataset.hpp"
#include "benford/errors.hpp"

using namespace benford;
namespace fs = std::filesystem;

namespace {

const fs::path kFixture = fs::path(BENFORD_SOURCE_DIR) / "data" / "city_populations.csv";

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("benford_dataset_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::ofstream(path) << content;
    }
    ~TempFile() { fs::remove(path); }
};

std::vector<std::string> as_strings(const std::vector<BigUInt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

std::vector<BigUInt> ints(std::initializer_list<std::uint64_t> v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("ingest: plain column") {
    TempFile f("name,value\na,100\nb,2001\nc,7\n");
    const IngestResult r = ingest(f.path, "value");
    CHECK(as_strings(r.values) == std::vector<std::string>{"100", "2001", "7"});
    CHECK(r.skipped == 0);
    CHECK(as_strings(ingest(f.path, "1").values) == std::vector<std::string>{"100", "2001", "7"});
}

TEST_CASE("ingest: filter rule") {
    TempFile f("v\nn/a\n0\n-5\n42\n");
    const IngestResult r = ingest(f.path, "v");
    CHECK(as_strings(r.values) == std::vector<std::string>{"42"});
    CHECK(r.skipped == 3);
}

TEST_CASE("ingest: headerless index, tabs, separators, quotes") {
    TempFile headerless("12\tx\n7\ty\n");
    const IngestResult a = ingest(headerless.path, "0");
    CHECK(as_strings(a.values) == std::vector<std::string>{"12", "7"});

    TempFile quoted("city,pop\n\"Springfield, IL\",\"1,234,567\"\nX,9_000\nY, 12 \nZ,3.5\n");
    const IngestResult b = ingest(quoted.path, "pop");
    CHECK(as_strings(b.values) == std::vector<std::string>{"1234567", "9000", "12"});
    CHECK(b.skipped == 1);

    TempFile huge("v\n123456789012345678901234567890\n");
    CHECK(ingest(huge.path, "v").values.front().to_string() == "123456789012345678901234567890");
}

TEST_CASE("ingest: errors") {
    CHECK_THROWS_AS(ingest("/nonexistent/benford.csv", "v"), IoError);
    TempFile empty("v\nn/a\n0\n");
    CHECK_THROWS_WITH_AS(ingest(empty.path, "v"), doctest::Contains("empty result set"), IoError);
    TempFile f("a,b\n1,2\n");
    CHECK_THROWS_AS(ingest(f.path, "c"), IoError);
    TempFile ragged("a,b\n1,2\n3\n");
    CHECK_THROWS_WITH_AS(ingest(ragged.path, "b"), doctest::Contains("row 3"), IoError);
}

TEST_CASE("ingest: bundled fixture count matches a line-level oracle") {
    std::ifstream in(kFixture);
    REQUIRE(in);
    // The fixture quotes every population; only quoted, nonzero entries count.
    const std::regex quoted_value("\"([0-9,]+)\"\\s*$");
    std::string line;
    std::getline(in, line);
    std::size_t expected = 0, rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::smatch m;
        if (std::regex_search(line, m, quoted_value) &&
            m[1].str().find_first_not_of("0,") != std::string::npos)
            ++expected;
    }
    const IngestResult r = ingest(kFixture, "population");
    CHECK(r.values.size() == expected);
    CHECK(r.values.size() + r.skipped == rows);
}

TEST_CASE("summarize") {
    const DatasetSummary one = summarize(ints({1}));
    CHECK(one.count == 1);
    CHECK(one.mean_bit_length == 1.0);
    CHECK(one.max_bit_length == 1);
    CHECK(one.digit_histogram.count(1) == 1);
    // Point mass on digit 1: TVD = 1 - log10(2).
    CHECK(one.tvd_to_benford == doctest::Approx(0.698970004336019).epsilon(1e-12));

    CHECK(summarize(ints({512})).max_bit_length == 10);
    const DatasetSummary mixed = summarize(ints({100, 2001, 7}));
    CHECK(mixed.mean_bit_length == doctest::Approx((7.0 + 11.0 + 3.0) / 3.0));
    CHECK(mixed.max_bit_length == 11);
    CHECK(mixed.digit_histogram.total() == mixed.count);
    CHECK(mixed.mean_bit_length <= static_cast<double>(mixed.max_bit_length));
    CHECK_THROWS_AS(summarize({}), DomainError);
}

TEST_CASE("bit length matches big-integer width up to 2^100") {
    using boost::multiprecision::cpp_int;
    std::mt19937_64 gen(100);
    for (int i = 0; i < 10'000; ++i) {
        const unsigned bits = 1 + gen() % 100;
        cpp_int x = 1;
        for (unsigned b = 1; b < bits; ++b) x = (x << 1) | (gen() & 1);
        const BigUInt v = BigUInt::from_decimal(x.str());
        REQUIRE(v.bit_length() == boost::multiprecision::msb(x) + 1);
    }
}

TEST_CASE("fit_ptm") {
    DatasetSummary s;
    s.mean_bit_length = 18.2876;
    s.max_bit_length = 25;
    const ModelParams p = fit_ptm(s);
    CHECK(p.p_halt == doctest::Approx(0.054682).epsilon(1e-5));
    CHECK(p.n_scale == 25);
    CHECK(p.lambda == doctest::Approx(std::pow(1.0 - p.p_halt, 25)));
    CHECK(std::abs(expected_length(p) - s.mean_bit_length) <= 1e-12);

    s.mean_bit_length = 2.0;
    CHECK(fit_ptm(s).p_halt == 0.5);

    std::mt19937_64 gen(3);
    for (int i = 0; i < 100; ++i) {
        s.mean_bit_length = 1.0 + std::uniform_real_distribution<double>(0.0, 500.0)(gen);
        CHECK(std::abs(expected_length(fit_ptm(s)) - s.mean_bit_length) <= 1e-12 * s.mean_bit_length);
    }
}

TEST_CASE("truncation comparison") {
    DatasetSummary s = summarize(ints({1, 3}));  // mean bit length 1.5
    s.mean_bit_length = 2.0;
    const TruncationReport r = truncation_comparison(s, 20000, 5);
    CHECK(r.p_halt == 0.5);
    CHECK(std::abs(r.model_mean_bit_length - 2.0) <= 3.0 * std::sqrt(0.5) / 0.5 / std::sqrt(20000.0));
    CHECK(r.dataset_tvd == s.tvd_to_benford);

    const TruncationReport again = truncation_comparison(s, 20000, 5);
    CHECK(again.model_tvd == r.model_tvd);
    CHECK(again.model_max_bit_length == r.model_max_bit_length);
    CHECK(again.model_mean_bit_length == r.model_mean_bit_length);
    CHECK_THROWS_AS(truncation_comparison(s, 0, 5), DomainError);
}

TEST_CASE("report JSON fields") {
    const IngestResult in{ints({100, 2001, 7}), 2};
    const DatasetSummary s = summarize(in.values);
    const TruncationReport r = truncation_comparison(s, 100, 9);
    const auto j = analysis_report_json(in, s, r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"count", "skipped", "mean_bit_length", "max_bit_length",
                                           "dataset_tvd", "model_tvd", "model_mean_bit_length",
                                           "model_max_bit_length", "p_halt", "seed"});
    CHECK(j["count"] == 3);
    CHECK(j["skipped"] == 2);
    CHECK(j["seed"] == 9);
}
