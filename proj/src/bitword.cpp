#include "rotorbit/bitword.hpp"

#include <algorithm>

namespace rotorbit {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw std::invalid_argument("BinaryWord: empty word");
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1)
            throw std::invalid_argument("BinaryWord: non-binary value at index " +
                                        std::to_string(i));
    }
}

std::string BinaryWord::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

BinaryWord parse_word(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_word: empty input");
    std::vector<std::uint8_t> bits(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '0') bits[i] = 0;
        else if (text[i] == '1') bits[i] = 1;
        else
            throw std::invalid_argument("parse_word: invalid character at index " +
                                        std::to_string(i));
    }
    return BinaryWord(std::move(bits));
}

BinaryWord reverse(const BinaryWord& w) {
    std::vector<std::uint8_t> bits(w.bits().rbegin(), w.bits().rend());
    return BinaryWord(std::move(bits));
}

int ones_count(const BinaryWord& w) {
    return static_cast<int>(std::count(w.bits().begin(), w.bits().end(), 1));
}

Composition one_run_encoding(const BinaryWord& w) {
    Composition parts;
    int run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 0;
        }
    }
    parts.push_back(run);
    return parts;
}

BinaryWord from_one_run_encoding(const Composition& c) {
    if (c.empty())
        throw std::invalid_argument("from_one_run_encoding: empty composition");
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0)
            throw std::invalid_argument("from_one_run_encoding: negative part");
        if (i > 0) bits.push_back(0);
        bits.insert(bits.end(), static_cast<std::size_t>(c[i]), 1);
    }
    if (bits.empty())
        throw std::invalid_argument(
            "from_one_run_encoding: composition (0) has no word image");
    return BinaryWord(std::move(bits));
}

std::uint64_t word_index(const BinaryWord& w) {
    if (w.size() > 63) throw std::invalid_argument("word_index: word longer than 63");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v = (v << 1) | w[i];
    return v;
}

BinaryWord word_from_index(std::uint64_t v, std::size_t n) {
    if (n == 0 || n > 63)
        throw std::invalid_argument("word_from_index: length out of range");
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i)
        bits[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    return BinaryWord(std::move(bits));
}

}  // namespace rotorbit
