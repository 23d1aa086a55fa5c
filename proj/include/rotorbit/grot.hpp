#pragma once

#include "rotorbit/bitword.hpp"

#include <cstddef>
#include <vector>

namespace rotorbit {

/// Length of the maximal leading run of ones.
std::size_t leading_ones(const BinaryWord& w);

/// Generalized rotation with parameter m, 1 <= m <= |w|. If the word
/// starts with k < m ones followed by a zero, the leading 1^k 0 block is
/// cut off and re-appended as 0 1^k; if it starts with at least m ones,
/// exactly m leading ones move to the tail. Bijective on {0,1}^n for each
/// m, preserves ones_count, and is the ordinary left rotation at m = 1.
/// Throws std::invalid_argument when m is out of range.
BinaryWord rotate(const BinaryWord& w, int m);

/// Inverse of rotate, computed as reverse(rotate(reverse(w), m)).
BinaryWord rotate_inv(const BinaryWord& w, int m);

/// rotate extended to words shorter than m: an all-ones word shorter
/// than m is a fixed point, and any word containing a zero takes the
/// short-leading-run branch regardless of its length. Agrees with rotate
/// whenever 1 <= m <= |w|. Snake tilde words can be shorter than m,
/// which is the one place this extension is needed.
BinaryWord rotate_extended(const BinaryWord& w, int m);

/// A rotation orbit in application order: words[k] = rotate^k(words[0]),
/// all distinct, and rotate of the last word is the first.
struct Orbit {
    std::vector<BinaryWord> words;
    std::size_t period() const { return words.size(); }
};

/// First-return orbit of w under rotate. Throws std::invalid_argument on
/// m out of range and std::runtime_error if the orbit fails to close
/// within 2^n steps (impossible unless the implementation is broken).
Orbit orbit(const BinaryWord& w, int m);

/// Orbit under rotate_extended; same as orbit when 1 <= m <= |w|.
Orbit orbit_extended(const BinaryWord& w, int m);

/// The extension trace of w: full = w^(p) is built by repeatedly
/// appending, for the current final-n-letter word with leading run k,
/// either 0 1^k (k < m) or 1^m (k >= m), stopping at the first step that
/// makes w a suffix again. c records the cut positions, c_k = |w^(k)| - n,
/// including both endpoints c_0 = 0 and c_p = l. bar is full minus its
/// length-n suffix, hat is full minus its length-n prefix; both have
/// length l and hat equals bar rotated left by n modulo l.
struct ExtensionTrace {
    BinaryWord full;
    std::vector<std::size_t> c;
    BinaryWord bar;
    BinaryWord hat;
    std::size_t l = 0;
    std::size_t n = 0;
    std::size_t p() const { return c.size() - 1; }

    ExtensionTrace(BinaryWord full_, std::vector<std::size_t> c_, BinaryWord bar_,
                   BinaryWord hat_, std::size_t l_, std::size_t n_)
        : full(std::move(full_)), c(std::move(c_)), bar(std::move(bar_)),
          hat(std::move(hat_)), l(l_), n(n_) {}
};

ExtensionTrace extension_trace(const BinaryWord& w, int m);

/// Partition of the index set {0, ..., l-1} for bar and for hat. For bar:
/// i0 holds the zero positions, it holds the one positions of the form
/// c_j - 1 mod l (j = 0..p-1), ih the remaining one positions. For hat:
/// hat_i0 holds the zeros, hat_it the ones among {c_0, ..., c_{p-1}},
/// hat_ih the rest. All six sets are sorted ascending.
struct IndexDecomposition {
    std::vector<std::size_t> i0, it, ih;
    std::vector<std::size_t> hat_i0, hat_it, hat_ih;
};

IndexDecomposition index_decomposition(const ExtensionTrace& t, int m);

}  // namespace rotorbit
