#pragma once

#include "rotorbit/bitword.hpp"
#include "rotorbit/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rotorbit {

/// Image of a word under the quotient/remainder encoding. rw is the
/// remainder word (digits in [0, m)), bqw the binary quotient word.
/// Invariants: |rw| = k+1 where k is the number of zeros of bqw, and
/// k + m * ones_count(bqw) + sum(rw) equals the encoded word's length.
struct EncodedPair {
    std::vector<int> rw;
    BinaryWord bqw;
    int m = 1;

    bool operator==(const EncodedPair&) const = default;

    /// rw as a digit string, e.g. "110".
    std::string rw_str() const;
};

/// Splits each part a_i of the one-run encoding as a_i = r_i + m * q_i
/// with 0 <= r_i < m; rw collects the remainders and bqw is the word
/// whose one-run encoding is the quotient word. Requires m >= 1. Words
/// shorter than m are accepted except all-ones ones, whose binary
/// quotient word would be empty (cannot arise when m <= |w|).
EncodedPair encode(const BinaryWord& w, int m);

/// The quotient digits q_i; read-only companion of encode for table
/// reproduction, recoverable from bqw as its one-run encoding.
std::vector<int> quotient_word(const BinaryWord& w, int m);

/// Inverse of encode. Throws std::invalid_argument when the pair violates
/// the EncodedPair invariants.
BinaryWord decode(const EncodedPair& p);

/// The conjugate of the generalized rotation on encoded pairs: bqw always
/// rotates left by one; rw rotates along with it exactly when bqw starts
/// with 0. Satisfies theta(encode(w)) = encode(rotate(w)).
EncodedPair theta(const EncodedPair& p);

/// Verifies theta(encode(w)) == encode(rotate(w)) around the whole orbit.
Report check_conjugacy(const BinaryWord& w, int m);

/// Rotation orbit size without enumerating the orbit: the product of the
/// necklace periods of rw and bqw.
long long orbit_size(const BinaryWord& w, int m);

struct OrbitClass {
    BinaryWord rep;
    long long size = 0;
};

/// Partition of {0,1}^n into rotation orbits, one entry per orbit keyed
/// by its lexicographically smallest member, in ascending order of
/// representative. Sizes sum to 2^n. fast = false walks every orbit to
/// first return (the oracle); fast = true sizes each orbit from necklace
/// periods and walks the conjugate map to mark members. Both modes
/// produce identical output. Requires 1 <= m <= n and n <= 28.
std::vector<OrbitClass> decompose_space(std::size_t n, int m, bool fast = true);

/// Largest rotation orbit size in {0,1}^n: n when m = 1 (ordinary
/// rotation), max((n-m)^2, n) otherwise; the word 1^{m+1} 0^{n-m-1}
/// attains (n-m)^2 when m < n.
long long max_orbit_size(std::size_t n, int m);

}  // namespace rotorbit
