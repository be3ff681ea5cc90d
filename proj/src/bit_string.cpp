#include "benford/bit_string.hpp"

#include "benford/errors.hpp"

namespace benford {

std::uint64_t BitView::top_bits() const noexcept {
    if (length == 0) return 0;
    if (length >= 64) return words[0];
    return words[0] >> (64 - length);
}

BitString BitString::parse(std::string_view text) {
    if (text.empty()) throw DomainError("empty bit string");
    if (text.front() != '1') throw DomainError("bit string must start with '1'");
    BitString s;
    s.length_ = text.size();
    s.words_.assign((text.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') throw DomainError("bit string may only contain '0' and '1'");
        if (c == '1') s.words_[i >> 6] |= std::uint64_t{1} << (63 - (i & 63));
    }
    return s;
}

BitString BitString::from_words(std::vector<std::uint64_t> words, std::size_t length) {
    if (length == 0) throw DomainError("empty bit string");
    if (words.size() != (length + 63) / 64) throw DomainError("word count does not match length");
    if (const std::size_t tail = length & 63; tail != 0)
        words.back() &= ~std::uint64_t{0} << (64 - tail);
    if ((words[0] >> 63) == 0) throw DomainError("bit string must start with '1'");
    BitString s;
    s.words_ = std::move(words);
    s.length_ = length;
    return s;
}

std::string BitString::to_string() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (bit(i)) out[i] = '1';
    return out;
}

}  // namespace benford
