#pragma once

#include <cstdint>
#include <vector>

#include "benford/big_uint.hpp"
#include "benford/bit_string.hpp"

namespace benford {

inline constexpr std::uint32_t kMaxBase = 1U << 16;

/// First significant digit of a positive integer in base `base_omega`.
struct LeadingDigit {
    std::uint32_t digit = 1;
    std::uint32_t base_omega = 10;

    friend bool operator==(const LeadingDigit&, const LeadingDigit&) = default;
};

/// Throws DomainError unless 2 <= base_omega <= kMaxBase.
void check_base(std::uint32_t base_omega);

/// Exact first digit of a nonzero integer by repeated big-integer division.
LeadingDigit leading_digit(const BigUInt& value, std::uint32_t base_omega);

/// Exact first digit of the integer spelled by `bits`.
LeadingDigit leading_digit_exact(const BitString& bits, std::uint32_t base_omega);

/// First digit from the fractional part of log_base(X), using the top 64 bits
/// and the bit length. Falls back to the exact path within kBoundaryGuard of
/// a digit boundary.
LeadingDigit leading_digit_log(const BitString& bits, std::uint32_t base_omega);

/// Reusable log-path classifier with the digit boundaries log_base(d)
/// precomputed. Thread-safe for concurrent classify() calls.
class DigitClassifier {
public:
    static constexpr long double kBoundaryGuard = 1e-12L;

    explicit DigitClassifier(std::uint32_t base_omega);

    std::uint32_t base() const noexcept { return base_; }

    std::uint32_t classify(const BitView& bits) const;

    /// True when `bits` falls inside the guard band, i.e. classify() would
    /// take the exact path.
    bool needs_exact(const BitView& bits) const;

private:
    struct Position {
        std::uint32_t digit;
        long double distance;
    };
    Position locate(const BitView& bits) const;

    std::uint32_t base_;
    long double log_base_;
    std::vector<long double> bounds_;  // bounds_[d] = log_base(d), d = 1..base
};

}  // namespace benford
