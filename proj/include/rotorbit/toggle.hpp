#pragma once

#include "rotorbit/bitword.hpp"
#include "rotorbit/report.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rotorbit {

/// The two toggle state spaces. X: any two ones are more than m apart
/// (every window of m+1 consecutive positions holds at most one 1).
/// Z: no m+1 consecutive ones. Both are closed under clearing a 1, so a
/// toggle that removes a 1 always stays inside. Z coincides with X at
/// m = 1; its column symmetry is conjectural and every Z report is
/// flagged experimental.
enum class ToggleSpace { X, Z };

bool space_member(const BinaryWord& w, int m, ToggleSpace sp);

/// All members of X_N in lexicographic order. Requires N >= m >= 1.
std::vector<BinaryWord> enumerate_X(std::size_t N, int m);

/// All members of Z_N in lexicographic order. Requires N >= 1, m >= 1.
std::vector<BinaryWord> enumerate_Z(std::size_t N, int m);

/// Flips bit i when the result stays in the space, else returns w
/// unchanged. Involution. Throws std::out_of_range on i >= |w|.
BinaryWord toggle_at(const BinaryWord& w, std::size_t i, int m,
                     ToggleSpace sp = ToggleSpace::X);

/// The full left-to-right toggle sweep. Bijective on the space.
BinaryWord phi(const BinaryWord& w, int m, ToggleSpace sp = ToggleSpace::X);

/// The orbit of S under phi, one row per iterate: rows[i] = phi^i(S).
struct OrbitBoard {
    std::vector<BinaryWord> rows;
    int m = 1;
    std::size_t q() const { return rows.size(); }
    std::size_t cols() const { return rows[0].size(); }
};

/// Throws std::invalid_argument (naming the violated constraint) when S
/// is not in the space.
OrbitBoard orbit_board(const BinaryWord& S, int m, ToggleSpace sp = ToggleSpace::X);

/// A maximal chain of 1-cells advancing by (0, m+1) or (1, 1) from
/// column 0 to the last column; rows wrap modulo q. comp lists the
/// column deltas (parts in {1, m+1}); tilde is comp with 1 -> 1 and
/// m+1 -> 0. Both are empty exactly for the single-column board N = 1.
struct Snake {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    Composition comp;
    std::vector<std::uint8_t> tilde;

    std::size_t start_row() const { return cells.front().first; }
    std::size_t end_row() const { return cells.back().first; }
    std::string tilde_str() const;
};

/// Extracts all snakes of a board, in increasing starting-row order.
/// Every 1-cell belongs to exactly one snake; a cell with zero or two
/// forward continuations, a merge, or an uncovered 1-cell throws
/// std::runtime_error, since any of these would falsify the snake
/// propagation dichotomy.
std::vector<Snake> find_snakes(const OrbitBoard& b);

/// Word image of a snake composition: part 1 -> letter 1, part m+1 ->
/// letter 0. Throws std::invalid_argument on an empty composition or a
/// foreign part value.
BinaryWord snake_tilde(const Composition& c, int m);

/// Verifies, around the whole board of S: consecutive snakes' tilde
/// words are successors under the (extended) generalized rotation;
/// starting rows advance by min(k, m) + 2 where k is the leading-ones
/// run of the tilde word; every tilde word w satisfies
/// ones + (m+1) * zeros = N - 1; and each snake's end links to the snake
/// two rows down through a unique backward distance d in [m, 2m]
/// (checked when N >= m + 1; no candidate column exists below that).
Report check_snake_rotation(const BinaryWord& S, int m);

/// Column sums of the orbit board are mirror symmetric. Experimental
/// when sp is Z (conjecture-level evidence).
Report check_phi_symmetry(const BinaryWord& S, int m, ToggleSpace sp = ToggleSpace::X);

/// check_phi_symmetry on the Z space, flagged experimental.
Report check_Z_symmetry(const BinaryWord& z, int m);

/// Direct column sums of a board.
std::vector<long long> column_sums(const OrbitBoard& b);

/// Column sums of the board of S computed without summing the board:
/// from the cumulative-sum frequency table of the base tilde word,
/// summing nu[j - (i-j)/m][j] over the j with (i - j) divisible by m.
/// Falls back to direct sums for the degenerate single-column board.
std::vector<long long> column_sums_via_frequency(const BinaryWord& S, int m);

/// phi-orbit size of S without building the whole board: the sum of
/// min(k_t, m) + 2 over the rotation orbit of the base tilde word,
/// where k_t is the leading-ones run of the t-th orbit word. Builds
/// only enough rows to trace one snake.
long long phi_orbit_size_fast(const BinaryWord& S, int m);

/// One phi-orbit of X_N: lexicographically smallest member, the first
/// snake's tilde word and its encoding (as display strings, empty for
/// the degenerate N = 1 board), and the orbit size.
struct ToggleOrbitClass {
    BinaryWord rep;
    std::string tilde, rw, bqw;
    long long period = 0;
};

/// Partition of X_N into phi-orbits, ascending by representative.
std::vector<ToggleOrbitClass> decompose_X(std::size_t N, int m);

struct PlainOrbitClass {
    BinaryWord rep;
    long long period = 0;
};

/// Partition of Z_N into phi-orbits, ascending by representative.
std::vector<PlainOrbitClass> decompose_Z(std::size_t N, int m);

}  // namespace rotorbit
