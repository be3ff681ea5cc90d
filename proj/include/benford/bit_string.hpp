#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace benford {

/// Read-only view of a packed, most-significant-bit-first bit sequence.
/// Bit i lives in words[i / 64] at position 63 - i % 64; bits past `length`
/// in the last word are zero.
struct BitView {
    std::span<const std::uint64_t> words;
    std::size_t length = 0;

    bool bit(std::size_t i) const noexcept { return (words[i >> 6] >> (63 - (i & 63))) & 1U; }

    /// The leading min(length, 64) bits as an integer.
    std::uint64_t top_bits() const noexcept;
};

/// A generated binary output. Always non-empty and led by a '1'.
class BitString {
public:
    /// Parses a string over {'0','1'}; throws DomainError if empty, if it
    /// contains other characters, or if the first character is not '1'.
    static BitString parse(std::string_view text);

    /// Takes ownership of packed words (layout as in BitView). Padding bits
    /// are cleared; throws DomainError if the leading bit is not set.
    static BitString from_words(std::vector<std::uint64_t> words, std::size_t length);

    std::size_t length() const noexcept { return length_; }
    bool bit(std::size_t i) const noexcept { return view().bit(i); }
    BitView view() const noexcept { return {words_, length_}; }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    BitString() = default;
    std::vector<std::uint64_t> words_;
    std::size_t length_ = 0;
};

}  // namespace benford
