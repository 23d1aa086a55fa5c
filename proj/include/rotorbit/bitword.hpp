#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rotorbit {

/// Fixed-length word over {0,1}. Index 0 is the leftmost letter of the
/// printed form, so lexicographic order on words equals numeric order of
/// the word read as a big-endian binary number. Words are never empty and
/// every operation in this library preserves length. Length is bounded
/// only by memory; index-based helpers (word_index) additionally require
/// length <= 63.
class BinaryWord {
public:
    explicit BinaryWord(std::vector<std::uint8_t> bits);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::string str() const;

    bool operator==(const BinaryWord&) const = default;
    auto operator<=>(const BinaryWord&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Composition: sequence of non-negative integers. One-run encodings of a
/// word with k zeros have exactly k+1 parts with k + sum(parts) = n; snake
/// compositions have parts in {1, m+1}.
using Composition = std::vector<int>;

/// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
/// empty input or on a foreign character (message names the index).
BinaryWord parse_word(std::string_view text);

/// Letter i of the result is letter n-1-i of the input. Involution.
BinaryWord reverse(const BinaryWord& w);

/// Number of ones in w.
int ones_count(const BinaryWord& w);

/// One-run encoding: for zeros at rising indices z_1 < ... < z_k, the
/// composition (z_1, z_2-z_1-1, ..., n-z_k-1), i.e. the lengths of the
/// 1-runs before, between and after the zeros. A zero-free word encodes
/// to the single part (n).
Composition one_run_encoding(const BinaryWord& w);

/// Inverse of one_run_encoding: (a_0, ..., a_k) -> 1^{a_0} 0 1^{a_1} 0
/// ... 0 1^{a_k}. Throws std::invalid_argument on an empty composition,
/// a negative part, or the single part (0) whose image would be the
/// empty word.
BinaryWord from_one_run_encoding(const Composition& c);

/// Smallest s >= 1 with rotate-left-by-s(seq) == seq; divides the length.
/// Generic over the alphabet because it is applied to remainder words
/// over {0..m-1} as well as to binary words. Throws on an empty sequence.
template <typename Seq>
std::size_t necklace_period(const Seq& seq) {
    const std::size_t n = std::size(seq);
    if (n == 0) throw std::invalid_argument("necklace_period: empty sequence");
    for (std::size_t s = 1; s < n; ++s) {
        bool fixed = true;
        for (std::size_t i = 0; i < n && fixed; ++i)
            fixed = seq[i] == seq[(i + s) % n];
        if (fixed) return s;
    }
    return n;
}

/// Word as a big-endian integer; requires |w| <= 63. Lexicographic order
/// of equal-length words equals numeric order of their indices.
std::uint64_t word_index(const BinaryWord& w);

/// Inverse of word_index for words of length n >= 1, n <= 63.
BinaryWord word_from_index(std::uint64_t v, std::size_t n);

}  // namespace rotorbit
