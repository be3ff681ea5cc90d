#include "benford/big_uint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "benford/errors.hpp"

namespace benford {

namespace {
__extension__ typedef unsigned __int128 u128;
constexpr std::uint64_t kDecimalChunk = 10'000'000'000'000'000'000ULL;  // 10^19
}  // namespace

BigUInt BigUInt::from_bits(const BitView& bits) {
    BigUInt x;
    if (bits.length == 0) return x;
    const std::size_t nwords = (bits.length + 63) / 64;
    const unsigned pad = static_cast<unsigned>(nwords * 64 - bits.length);
    x.limbs_.resize(nwords);
    // Reverse word order, then shift the whole thing right by the padding.
    for (std::size_t i = 0; i < nwords; ++i) {
        const std::size_t src = nwords - 1 - i;
        std::uint64_t v = bits.words[src] >> pad;
        if (pad != 0 && src > 0) v |= bits.words[src - 1] << (64 - pad);
        x.limbs_[i] = v;
    }
    x.trim();
    return x;
}

BigUInt BigUInt::from_decimal(std::string_view digits) {
    if (digits.empty()) throw DomainError("empty decimal string");
    BigUInt x;
    for (char c : digits) {
        if (c < '0' || c > '9') throw DomainError("non-digit in decimal string");
        x.mul_small(10).add_small(static_cast<std::uint64_t>(c - '0'));
    }
    return x;
}

std::size_t BigUInt::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + static_cast<std::size_t>(std::bit_width(limbs_.back()));
}

BigUInt& BigUInt::mul_small(std::uint64_t m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const u128 p = static_cast<u128>(limb) * m + carry;
        limb = static_cast<std::uint64_t>(p);
        carry = static_cast<std::uint64_t>(p >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

BigUInt& BigUInt::add_small(std::uint64_t a) {
    for (auto& limb : limbs_) {
        if (a == 0) return *this;
        limb += a;
        a = limb < a ? 1 : 0;
    }
    if (a != 0) limbs_.push_back(a);
    return *this;
}

std::uint64_t BigUInt::divmod_small(std::uint64_t d) {
    if (d == 0) throw DomainError("division by zero");
    u128 rem = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
        const u128 cur = (rem << 64) | *it;
        *it = static_cast<std::uint64_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint64_t>(rem);
}

double BigUInt::log() const {
    if (limbs_.empty()) return -HUGE_VAL;
    // Top 128 bits carry more precision than a double needs.
    const std::size_t n = limbs_.size();
    long double top = static_cast<long double>(limbs_[n - 1]);
    if (n >= 2) top = top * 0x1p64L + static_cast<long double>(limbs_[n - 2]);
    const std::size_t shift = n >= 2 ? 64 * (n - 2) : 0;
    return static_cast<double>(std::log(top) + static_cast<long double>(shift) * std::log(2.0L));
}

std::string BigUInt::to_string() const {
    if (limbs_.empty()) return "0";
    BigUInt tmp = *this;
    std::vector<std::uint64_t> chunks;
    while (!tmp.is_zero()) chunks.push_back(tmp.divmod_small(kDecimalChunk));
    std::string out = std::to_string(chunks.back());
    for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
        std::string part = std::to_string(*it);
        out.append(19 - part.size(), '0');
        out += part;
    }
    return out;
}

std::strong_ordering operator<=>(const BigUInt& a, const BigUInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
    return std::lexicographical_compare_three_way(a.limbs_.rbegin(), a.limbs_.rend(),
                                                  b.limbs_.rbegin(), b.limbs_.rend());
}

void BigUInt::trim() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace benford
