#pragma once

#include "rotorbit/bitword.hpp"
#include "rotorbit/grot.hpp"
#include "rotorbit/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace rotorbit {

/// Multiset of integers with exact multiplicity arithmetic. Equality is
/// multiplicity-wise. Values stay non-negative in every use here;
/// shifted_down throws if a shift would produce a negative value, since
/// the identities this library checks never do.
class IntMultiset {
public:
    IntMultiset() = default;

    void add(long long value, long long multiplicity = 1);
    void merge(const IntMultiset& other);

    /// The multiset {x - 1 | x in this}.
    IntMultiset shifted_down() const;

    /// Multiplicity of value (0 when absent).
    long long count(long long value) const;

    long long total() const;
    bool empty() const { return counts_.empty(); }

    bool operator==(const IntMultiset&) const = default;

    const std::map<long long, long long>& counts() const { return counts_; }

    /// Display form, e.g. "{1^6, 2^3}"; "{}" when empty.
    std::string str() const;

private:
    std::map<long long, long long> counts_;
};

/// Multiset of left cumulative sums: for each word of the orbit of w, the
/// sum of its first j letters. j = 0 gives p copies of 0; j = n gives p
/// copies of ones_count(w). Throws std::invalid_argument on j > n.
IntMultiset left_multiset(const BinaryWord& w, int m, std::size_t j);
IntMultiset left_multiset(const Orbit& o, std::size_t j);

/// Multiset of right cumulative sums (final j letters). Equal to the left
/// multiset for every j: the symmetry theorem this library verifies.
IntMultiset right_multiset(const BinaryWord& w, int m, std::size_t j);
IntMultiset right_multiset(const Orbit& o, std::size_t j);

/// nu[s][j] = multiplicity of cumulative sum s among the j-prefix sums of
/// the orbit, s in 0..ones_count(w), j in 0..n. Every column sums to the
/// orbit size.
struct FrequencyTable {
    std::vector<std::vector<long long>> nu;
    std::size_t period = 0;
    std::size_t rows() const { return nu.size(); }
    std::size_t cols() const { return nu.empty() ? 0 : nu[0].size(); }
};

FrequencyTable frequency_table(const BinaryWord& w, int m, bool right = false);
FrequencyTable frequency_table(const Orbit& o, bool right = false);

/// Index classes of the bar/hat partition.
enum class IndexClass { Zero, Tail, Head };

char index_class_label(IndexClass c);

/// The window-sum multiset between index classes. Unhatted: sums of bar
/// over the forward window [k, k+j-1] for k in I_a with k+j-1 in I_b.
/// Hatted: sums of hat over the backward window [k-j+1, k] for k in
/// hat-I_a with k-j+1 in hat-I_b. Window indices are taken modulo l.
/// Requires 1 <= j <= n.
IntMultiset m_ab(const ExtensionTrace& t, const IndexDecomposition& d, std::size_t j,
                 IndexClass a, IndexClass b, bool hatted);

/// Per-j equality of left and right cumulative-sum multisets.
Report check_theorem1(const BinaryWord& w, int m);

/// Orbit column sums are mirror symmetric: the j-th and (n-1-j)-th column
/// sums of the orbit table agree for every j.
Report check_column_sum_symmetry(const BinaryWord& w, int m);

/// The window-sum multiset identities underlying the symmetry theorem,
/// checked for every j in 1..n:
///   - the j = 1 base structure (empty off-diagonal cells, all-zero and
///     all-one diagonal cells);
///   - the (0,0) and (T,T) equalities;
///   - the four-term union of the (0|T) x (0|T) block;
///   - emptiness of the (0,T) cell for j <= m;
///   - the row-sum and column-sum shift identities for every class;
///   - the (0,T) u ((T,T)-1) pair identity;
///   - full cellwise equality of the unhatted and hatted multisets;
///   - the reassembly of the left/right cumulative multisets from rows
///     0 and T of the window-sum table at j+1.
Report check_lemma_identities(const BinaryWord& w, int m);

}  // namespace rotorbit
