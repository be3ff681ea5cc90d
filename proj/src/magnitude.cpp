#include "benford/magnitude.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "benford/errors.hpp"

namespace benford {

namespace {

__extension__ typedef unsigned __int128 u128;

// Largest power of `base` that fits in 64 bits, with its exponent.
std::uint64_t wide_power(std::uint32_t base) {
    std::uint64_t p = base;
    while (static_cast<u128>(p) * base <= UINT64_MAX) p *= base;
    return p;
}

std::uint32_t exact_digit(BigUInt x, std::uint32_t base) {
    if (x.is_zero()) throw DomainError("zero has no leading digit");
    // floor(floor(x / a) / b) == floor(x / (a b)), so stripping a wide power
    // at a time lands on the same leading digit.
    const std::uint64_t chunk = wide_power(base);
    while (x.limb_count() > 1) x.divmod_small(chunk);
    std::uint64_t v = x.low_limb();
    while (v >= base) v /= base;
    return static_cast<std::uint32_t>(v);
}

}  // namespace

void check_base(std::uint32_t base_omega) {
    if (base_omega < 2 || base_omega > kMaxBase)
        throw DomainError("base must lie in [2, " + std::to_string(kMaxBase) + "], got " +
                          std::to_string(base_omega));
}

LeadingDigit leading_digit(const BigUInt& value, std::uint32_t base_omega) {
    check_base(base_omega);
    return {exact_digit(value, base_omega), base_omega};
}

LeadingDigit leading_digit_exact(const BitString& bits, std::uint32_t base_omega) {
    return leading_digit(BigUInt::from_bits(bits.view()), base_omega);
}

LeadingDigit leading_digit_log(const BitString& bits, std::uint32_t base_omega) {
    const DigitClassifier classifier(base_omega);
    return {classifier.classify(bits.view()), base_omega};
}

DigitClassifier::DigitClassifier(std::uint32_t base_omega)
    : base_(base_omega), log_base_(0), bounds_() {
    check_base(base_omega);
    log_base_ = std::log(static_cast<long double>(base_omega));
    bounds_.resize(base_omega + 1);
    for (std::uint32_t d = 1; d <= base_omega; ++d)
        bounds_[d] = std::log(static_cast<long double>(d)) / log_base_;
    bounds_[base_omega] = 1.0L;
}

DigitClassifier::Position DigitClassifier::locate(const BitView& bits) const {
    const std::uint64_t top = bits.top_bits();
    const std::size_t shift = bits.length > 64 ? bits.length - 64 : 0;
    // X lies in [top * 2^shift, (top + 1) * 2^shift); the width of that range in
    // log space is below 2^-63 / ln(base).
    const long double log_x =
        std::log(static_cast<long double>(top)) + static_cast<long double>(shift) * std::log(2.0L);
    const long double scaled = log_x / log_base_;
    const long double frac = scaled - std::floor(scaled);
    const auto it = std::upper_bound(bounds_.begin() + 1, bounds_.end(), frac);
    const auto digit = static_cast<std::uint32_t>(std::clamp<std::ptrdiff_t>(
        it - bounds_.begin() - 1, 1, static_cast<std::ptrdiff_t>(base_) - 1));
    const long double distance =
        std::min(std::abs(frac - bounds_[digit]), std::abs(bounds_[digit + 1] - frac));
    return {digit, distance};
}

bool DigitClassifier::needs_exact(const BitView& bits) const {
    return locate(bits).distance < kBoundaryGuard;
}

std::uint32_t DigitClassifier::classify(const BitView& bits) const {
    if (bits.length == 0 || bits.top_bits() == 0) throw DomainError("zero has no leading digit");
    if (base_ == 2) return 1;
    const Position pos = locate(bits);
    if (pos.distance < kBoundaryGuard) return exact_digit(BigUInt::from_bits(bits), base_);
    return pos.digit;
}

}  // namespace benford
