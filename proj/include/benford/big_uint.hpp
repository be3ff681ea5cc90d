#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "benford/bit_string.hpp"

namespace benford {

/// Minimal unsigned arbitrary-precision integer: exactly the operations the
/// digit extraction and state counting need (scalar multiply/divide, parse,
/// print). Little-endian 64-bit limbs, no leading zero limbs.
class BigUInt {
public:
    BigUInt() = default;
    BigUInt(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
        if (v != 0) limbs_.push_back(v);
    }

    static BigUInt from_bits(const BitView& bits);
    /// Decimal digits only; throws DomainError otherwise.
    static BigUInt from_decimal(std::string_view digits);

    bool is_zero() const noexcept { return limbs_.empty(); }
    std::size_t limb_count() const noexcept { return limbs_.size(); }
    std::uint64_t low_limb() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }
    std::size_t bit_length() const noexcept;

    BigUInt& mul_small(std::uint64_t m);
    BigUInt& add_small(std::uint64_t a);
    /// Divides in place and returns the remainder. Throws DomainError for d == 0.
    std::uint64_t divmod_small(std::uint64_t d);

    /// Natural logarithm; -inf for zero.
    double log() const;

    std::string to_string() const;

    friend bool operator==(const BigUInt&, const BigUInt&) = default;
    friend std::strong_ordering operator<=>(const BigUInt& a, const BigUInt& b);

private:
    void trim() noexcept;
    std::vector<std::uint64_t> limbs_;
};

}  // namespace benford
