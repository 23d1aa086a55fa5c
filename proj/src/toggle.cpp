#include "rotorbit/toggle.hpp"

#include "rotorbit/encoding.hpp"
#include "rotorbit/grot.hpp"
#include "rotorbit/orbitstats.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace rotorbit {

namespace {

// Flipping bits[i] from 0 to 1 keeps the word in the space; bits[i] is
// already set to 1 when this runs. Clearing a 1 never needs a check.
bool addition_ok(const std::vector<std::uint8_t>& bits, std::size_t i, int m,
                 ToggleSpace sp) {
    const std::size_t n = bits.size();
    if (sp == ToggleSpace::X) {
        const std::size_t lo = i >= static_cast<std::size_t>(m) ? i - m : 0;
        const std::size_t hi = std::min(n - 1, i + static_cast<std::size_t>(m));
        for (std::size_t j = lo; j <= hi; ++j)
            if (j != i && bits[j]) return false;
        return true;
    }
    std::size_t run = 1;
    for (std::size_t j = i; j > 0 && bits[j - 1]; --j) ++run;
    for (std::size_t j = i + 1; j < n && bits[j]; ++j) ++run;
    return run <= static_cast<std::size_t>(m);
}

void phi_inplace(std::vector<std::uint8_t>& bits, int m, ToggleSpace sp) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            bits[i] = 0;
            continue;
        }
        bits[i] = 1;
        if (!addition_ok(bits, i, m, sp)) bits[i] = 0;
    }
}

void require_member(const BinaryWord& w, int m, ToggleSpace sp) {
    if (m < 1) throw std::invalid_argument("toggle: m must be positive");
    const std::size_t n = w.size();
    if (sp == ToggleSpace::X) {
        std::size_t last = n;  // n = none seen yet
        for (std::size_t i = 0; i < n; ++i) {
            if (!w[i]) continue;
            if (last != n && i - last <= static_cast<std::size_t>(m))
                throw std::invalid_argument(
                    "word not in X: positions " + std::to_string(last) + " and " +
                    std::to_string(i) + " are both 1 but only " + std::to_string(i - last) +
                    " apart (need more than m = " + std::to_string(m) + ")");
            last = i;
        }
    } else {
        std::size_t run = 0;
        for (std::size_t i = 0; i < n; ++i) {
            run = w[i] ? run + 1 : 0;
            if (run == static_cast<std::size_t>(m) + 1)
                throw std::invalid_argument(
                    "word not in Z: positions " + std::to_string(i - m) + ".." +
                    std::to_string(i) + " hold " + std::to_string(m + 1) +
                    " consecutive ones (at most m = " + std::to_string(m) + " allowed)");
        }
    }
}

// Lexicographic enumeration: bit 0 first at every position, a 1 only when
// the space constraint allows it given the prefix.
void enumerate_rec(std::vector<std::uint8_t>& bits, std::size_t i, int m, ToggleSpace sp,
                   std::vector<BinaryWord>& out) {
    if (i == bits.size()) {
        out.push_back(BinaryWord(bits));
        return;
    }
    bits[i] = 0;
    enumerate_rec(bits, i + 1, m, sp, out);
    bits[i] = 1;
    if (addition_ok(bits, i, m, sp)) enumerate_rec(bits, i + 1, m, sp, out);
    bits[i] = 0;
}

std::vector<std::uint8_t> rotate_ext_raw(const std::vector<std::uint8_t>& w, int m) {
    if (w.empty()) return w;
    return rotate_extended(BinaryWord(w), m).bits();
}

std::size_t leading_ones_raw(const std::vector<std::uint8_t>& w) {
    std::size_t k = 0;
    while (k < w.size() && w[k] == 1) ++k;
    return k;
}

std::string cell_str(std::size_t r, std::size_t j) {
    return "(" + std::to_string(r) + ", " + std::to_string(j) + ")";
}

// Traces one snake of the board of S without building the whole board,
// generating rows lazily: rows past the orbit closure repeat the cycle,
// so wrapping never needs special handling. Returns std::nullopt when the
// orbit has no 1 in column 0 (cannot arise for a valid board; callers
// fall back to direct iteration).
std::optional<std::vector<std::uint8_t>> trace_snake_tilde(const BinaryWord& S, int m) {
    require_member(S, m, ToggleSpace::X);
    const std::size_t N = S.size();
    std::vector<std::vector<std::uint8_t>> rows{S.bits()};
    auto row = [&](std::size_t idx) -> const std::vector<std::uint8_t>& {
        while (rows.size() <= idx) {
            auto nxt = rows.back();
            phi_inplace(nxt, m, ToggleSpace::X);
            rows.push_back(std::move(nxt));
        }
        return rows[idx];
    };
    std::size_t r0 = 0;
    for (std::size_t i = 0;; ++i) {
        if (i > 0 && row(i) == rows[0]) return std::nullopt;  // orbit closed, no seed
        if (row(i)[0] == 1) {
            r0 = i;
            break;
        }
    }
    std::vector<std::uint8_t> tilde;
    std::size_t r = r0, j = 0;
    while (j < N - 1) {
        const bool right = j + m + 1 <= N - 1 && row(r)[j + m + 1] == 1;
        const bool down = row(r + 1)[j + 1] == 1;
        if (right == down)
            throw std::runtime_error("snake propagation dichotomy violated at cell " +
                                     cell_str(r, j));
        if (right) {
            j += static_cast<std::size_t>(m) + 1;
            tilde.push_back(0);
        } else {
            ++r;
            ++j;
            tilde.push_back(1);
        }
    }
    return tilde;
}

}  // namespace

bool space_member(const BinaryWord& w, int m, ToggleSpace sp) {
    try {
        require_member(w, m, sp);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<BinaryWord> enumerate_X(std::size_t N, int m) {
    if (m < 1) throw std::invalid_argument("enumerate_X: m must be positive");
    if (N < static_cast<std::size_t>(m))
        throw std::invalid_argument("enumerate_X: N must be at least m");
    std::vector<BinaryWord> out;
    std::vector<std::uint8_t> bits(N, 0);
    enumerate_rec(bits, 0, m, ToggleSpace::X, out);
    return out;
}

std::vector<BinaryWord> enumerate_Z(std::size_t N, int m) {
    if (m < 1) throw std::invalid_argument("enumerate_Z: m must be positive");
    if (N < 1) throw std::invalid_argument("enumerate_Z: N must be positive");
    std::vector<BinaryWord> out;
    std::vector<std::uint8_t> bits(N, 0);
    enumerate_rec(bits, 0, m, ToggleSpace::Z, out);
    return out;
}

BinaryWord toggle_at(const BinaryWord& w, std::size_t i, int m, ToggleSpace sp) {
    if (i >= w.size())
        throw std::out_of_range("toggle_at: index " + std::to_string(i) +
                                " out of range for length " + std::to_string(w.size()));
    std::vector<std::uint8_t> bits = w.bits();
    if (bits[i]) {
        bits[i] = 0;
    } else {
        bits[i] = 1;
        if (!addition_ok(bits, i, m, sp)) bits[i] = 0;
    }
    return BinaryWord(std::move(bits));
}

BinaryWord phi(const BinaryWord& w, int m, ToggleSpace sp) {
    require_member(w, m, sp);
    std::vector<std::uint8_t> bits = w.bits();
    phi_inplace(bits, m, sp);
    return BinaryWord(std::move(bits));
}

OrbitBoard orbit_board(const BinaryWord& S, int m, ToggleSpace sp) {
    require_member(S, m, sp);
    OrbitBoard b;
    b.m = m;
    b.rows.push_back(S);
    std::vector<std::uint8_t> cur = S.bits();
    for (;;) {
        phi_inplace(cur, m, sp);
        if (cur == S.bits()) break;
        b.rows.push_back(BinaryWord(cur));
        if (b.rows.size() > (std::size_t{1} << 26))
            throw std::runtime_error("orbit_board: orbit failed to close");
    }
    return b;
}

std::string Snake::tilde_str() const {
    std::string s;
    for (std::uint8_t bit : tilde) s += bit ? '1' : '0';
    return s;
}

std::vector<Snake> find_snakes(const OrbitBoard& b) {
    const std::size_t q = b.q();
    const std::size_t N = b.cols();
    const int m = b.m;
    std::size_t total_ones = 0;
    for (const auto& row : b.rows) total_ones += static_cast<std::size_t>(ones_count(row));
    std::vector<std::vector<char>> used(q, std::vector<char>(N, 0));
    std::vector<Snake> out;
    std::size_t covered = 0;
    for (std::size_t r0 = 0; r0 < q; ++r0) {
        if (b.rows[r0][0] != 1) continue;
        Snake s;
        std::size_t r = r0, j = 0;
        used[r][j] = 1;
        ++covered;
        s.cells.emplace_back(r, j);
        while (j < N - 1) {
            const bool right = j + m + 1 <= N - 1 && b.rows[r][j + m + 1] == 1;
            const bool down = b.rows[(r + 1) % q][j + 1] == 1;
            if (right && down)
                throw std::runtime_error("find_snakes: both continuations set at cell " +
                                         cell_str(r, j));
            if (!right && !down)
                throw std::runtime_error("find_snakes: no continuation at cell " +
                                         cell_str(r, j));
            if (right) {
                j += static_cast<std::size_t>(m) + 1;
                s.comp.push_back(m + 1);
                s.tilde.push_back(0);
            } else {
                r = (r + 1) % q;
                ++j;
                s.comp.push_back(1);
                s.tilde.push_back(1);
            }
            if (used[r][j])
                throw std::runtime_error("find_snakes: snakes merge at cell " +
                                         cell_str(r, j));
            used[r][j] = 1;
            ++covered;
            s.cells.emplace_back(r, j);
        }
        out.push_back(std::move(s));
    }
    if (covered != total_ones)
        throw std::runtime_error("find_snakes: " + std::to_string(total_ones - covered) +
                                 " one-cells not covered by any snake");
    return out;
}

BinaryWord snake_tilde(const Composition& c, int m) {
    if (c.empty()) throw std::invalid_argument("snake_tilde: empty composition");
    std::vector<std::uint8_t> bits;
    bits.reserve(c.size());
    for (int part : c) {
        if (part == 1) bits.push_back(1);
        else if (part == m + 1) bits.push_back(0);
        else
            throw std::invalid_argument("snake_tilde: part " + std::to_string(part) +
                                        " not in {1, " + std::to_string(m + 1) + "}");
    }
    return BinaryWord(std::move(bits));
}

Report check_snake_rotation(const BinaryWord& S, int m) {
    Report r;
    r.title = "snake/rotation correspondence for " + S.str() + ", m = " + std::to_string(m);
    const OrbitBoard b = orbit_board(S, m);
    const std::vector<Snake> snakes = find_snakes(b);
    if (snakes.empty()) {
        r.add("snakes exist", false, "board of " + S.str() + " has no snakes");
        return r;
    }
    const std::size_t s = snakes.size();
    const std::size_t q = b.q();
    const std::size_t N = b.cols();

    // snake count equals the period of the base tilde orbit
    if (snakes[0].tilde.empty()) {
        r.add("snake count equals tilde orbit size", s == 1,
              s == 1 ? "" : "degenerate board with " + std::to_string(s) + " snakes");
    } else {
        const std::size_t p = orbit_extended(BinaryWord(snakes[0].tilde), m).period();
        r.add("snake count equals tilde orbit size", s == p,
              s == p ? ""
                     : std::to_string(s) + " snakes vs orbit size " + std::to_string(p));
    }

    for (std::size_t t = 0; t < s; ++t) {
        const auto& cur = snakes[t].tilde;
        const auto& nxt = snakes[(t + 1) % s].tilde;
        const auto expected = rotate_ext_raw(cur, m);
        r.add("snake " + std::to_string(t) + " tilde successor", expected == nxt,
              expected == nxt ? ""
                              : "rotation of " + snakes[t].tilde_str() + " is not " +
                                    snakes[(t + 1) % s].tilde_str());

        const std::size_t k = leading_ones_raw(cur);
        const std::size_t want =
            std::min(k, static_cast<std::size_t>(m)) + 2;
        const std::size_t from = snakes[t].start_row();
        const std::size_t to = snakes[(t + 1) % s].start_row();
        const std::size_t delta = t + 1 < s ? to - from : q - from + to;
        r.add("snake " + std::to_string(t) + " row increment", delta == want,
              delta == want ? ""
                            : "rows advance by " + std::to_string(delta) + ", want " +
                                  std::to_string(want));

        const long long ones = static_cast<long long>(
            std::count(cur.begin(), cur.end(), std::uint8_t{1}));
        const long long zeros = static_cast<long long>(cur.size()) - ones;
        const bool in_y = ones + (m + 1) * zeros == static_cast<long long>(N) - 1;
        r.add("snake " + std::to_string(t) + " tilde composition total", in_y,
              in_y ? ""
                   : snakes[t].tilde_str() + " does not satisfy a + (m+1) b = N - 1");

        if (N >= static_cast<std::size_t>(m) + 1) {
            const std::size_t er = snakes[t].end_row();
            std::size_t hits = 0;
            for (std::size_t dd = static_cast<std::size_t>(m);
                 dd <= std::min<std::size_t>(2 * m, N - 1); ++dd)
                if (b.rows[(er + 2) % q][N - 1 - dd] == 1) ++hits;
            r.add("snake " + std::to_string(t) + " tail link", hits == 1,
                  hits == 1 ? ""
                            : std::to_string(hits) + " candidates in [m, 2m] below end row " +
                                  std::to_string(er));
        } else {
            r.add("snake " + std::to_string(t) + " tail link skipped (N <= m)", true);
        }
    }
    return r;
}

std::vector<long long> column_sums(const OrbitBoard& b) {
    std::vector<long long> out(b.cols(), 0);
    for (const auto& row : b.rows)
        for (std::size_t j = 0; j < b.cols(); ++j) out[j] += row[j];
    return out;
}

Report check_phi_symmetry(const BinaryWord& S, int m, ToggleSpace sp) {
    Report r;
    r.title = "board column-sum mirror symmetry for " + S.str() + ", m = " + std::to_string(m);
    r.experimental = sp == ToggleSpace::Z;
    const std::vector<long long> col = column_sums(orbit_board(S, m, sp));
    const std::size_t N = col.size();
    for (std::size_t i = 0; i < N; ++i) {
        const bool ok = col[i] == col[N - 1 - i];
        r.add("column " + std::to_string(i), ok,
              ok ? "" : std::to_string(col[i]) + " vs " + std::to_string(col[N - 1 - i]));
    }
    return r;
}

Report check_Z_symmetry(const BinaryWord& z, int m) {
    Report r = check_phi_symmetry(z, m, ToggleSpace::Z);
    r.title = "Z-space " + r.title + " (conjecture, empirical evidence only)";
    r.experimental = true;
    return r;
}

std::vector<long long> column_sums_via_frequency(const BinaryWord& S, int m) {
    const auto tilde = trace_snake_tilde(S, m);
    if (!tilde || tilde->empty()) return column_sums(orbit_board(S, m));
    const BinaryWord base(*tilde);
    const FrequencyTable ft = frequency_table(orbit_extended(base, m));
    const std::size_t nt = base.size();
    const long long a = ones_count(base);
    const std::size_t N = S.size();
    std::vector<long long> out(N, 0);
    for (std::size_t i = 0; i < N; ++i) {
        long long sum = 0;
        for (std::size_t j = 0; j <= nt; ++j) {
            const long long diff = static_cast<long long>(i) - static_cast<long long>(j);
            if (diff % m != 0) continue;
            const long long s = static_cast<long long>(j) - diff / m;
            if (s < 0 || s > a) continue;
            sum += ft.nu[static_cast<std::size_t>(s)][j];
        }
        out[i] = sum;
    }
    return out;
}

long long phi_orbit_size_fast(const BinaryWord& S, int m) {
    const auto tilde = trace_snake_tilde(S, m);
    if (!tilde) {
        // no column-0 one in the whole orbit: count directly
        return static_cast<long long>(orbit_board(S, m).q());
    }
    if (tilde->empty()) return 2;  // single-column board: 0 and 1 alternate
    long long q = 0;
    for (const BinaryWord& w : orbit_extended(BinaryWord(*tilde), m).words)
        q += static_cast<long long>(
                 std::min(leading_ones(w), static_cast<std::size_t>(m))) +
             2;
    return q;
}

std::vector<ToggleOrbitClass> decompose_X(std::size_t N, int m) {
    const std::vector<BinaryWord> words = enumerate_X(N, m);
    std::unordered_set<std::uint64_t> visited;
    std::vector<ToggleOrbitClass> out;
    for (const BinaryWord& w : words) {
        if (visited.contains(word_index(w))) continue;
        const OrbitBoard b = orbit_board(w, m);
        for (const auto& row : b.rows) visited.insert(word_index(row));
        ToggleOrbitClass cls{w, "", "", "", static_cast<long long>(b.q())};
        const std::vector<Snake> snakes = find_snakes(b);
        if (!snakes.empty() && !snakes[0].tilde.empty()) {
            const BinaryWord t(snakes[0].tilde);
            cls.tilde = t.str();
            if (ones_count(t) == static_cast<int>(t.size()) &&
                t.size() < static_cast<std::size_t>(m)) {
                // all-ones tilde shorter than m: single remainder digit,
                // empty binary quotient word
                cls.rw = std::to_string(t.size());
                cls.bqw = "";
            } else {
                const EncodedPair p = encode(t, m);
                cls.rw = p.rw_str();
                cls.bqw = p.bqw.str();
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<PlainOrbitClass> decompose_Z(std::size_t N, int m) {
    const std::vector<BinaryWord> words = enumerate_Z(N, m);
    std::unordered_set<std::uint64_t> visited;
    std::vector<PlainOrbitClass> out;
    for (const BinaryWord& w : words) {
        if (visited.contains(word_index(w))) continue;
        const OrbitBoard b = orbit_board(w, m, ToggleSpace::Z);
        for (const auto& row : b.rows) visited.insert(word_index(row));
        out.push_back({w, static_cast<long long>(b.q())});
    }
    return out;
}

}  // namespace rotorbit
