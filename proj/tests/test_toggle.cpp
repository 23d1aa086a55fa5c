#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rotorbit/bitword.hpp"
#include "rotorbit/encoding.hpp"
#include "rotorbit/grot.hpp"
#include "rotorbit/toggle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

using namespace rotorbit;

namespace {

// one call per orbit representative, in lexicographic order
template <typename Fn>
void for_each_orbit_rep(std::size_t N, int m, ToggleSpace sp, Fn&& fn) {
    std::unordered_set<std::uint64_t> visited;
    const auto words = sp == ToggleSpace::X ? enumerate_X(N, m) : enumerate_Z(N, m);
    for (const BinaryWord& w : words) {
        if (visited.contains(word_index(w))) continue;
        for (const BinaryWord& row : orbit_board(w, m, sp).rows)
            visited.insert(word_index(row));
        fn(w);
    }
}

}  // namespace

TEST_CASE("enumerate_X lists spaced words in lexicographic order") {
    CHECK(enumerate_X(14, 3).size() == 131);
    CHECK(enumerate_X(7, 3).size() == 14);
    for (int m = 1; m <= 5; ++m)
        CHECK(enumerate_X(m, m).size() == static_cast<std::size_t>(m) + 1);

    const auto words = enumerate_X(6, 2);
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const BinaryWord& w : words) CHECK(space_member(w, 2, ToggleSpace::X));

    CHECK_THROWS_AS(enumerate_X(2, 3), std::invalid_argument);
}

TEST_CASE("enumerate_Z forbids long 1-runs only") {
    const auto z4 = enumerate_Z(4, 2);
    CHECK(z4.size() == 13);  // 16 words minus 0111, 1110, 1111
    CHECK(!space_member(parse_word("0111"), 2, ToggleSpace::Z));
    CHECK(space_member(parse_word("0110"), 2, ToggleSpace::Z));
    CHECK(space_member(parse_word("1011"), 2, ToggleSpace::Z));

    // at m=1 the two spaces coincide
    for (std::size_t N = 1; N <= 8; ++N) {
        const auto x = enumerate_X(N, 1);
        const auto z = enumerate_Z(N, 1);
        CHECK(x == z);
    }
}

TEST_CASE("toggle_at flips when the window stays legal") {
    CHECK(toggle_at(parse_word("0000000"), 0, 3) == parse_word("1000000"));
    CHECK(toggle_at(parse_word("1000000"), 1, 3) == parse_word("1000000"));  // blocked
    CHECK(toggle_at(parse_word("1000000"), 4, 3) == parse_word("1000100"));

    // each toggle is an involution
    for (const BinaryWord& w : enumerate_X(7, 3))
        for (std::size_t i = 0; i < 7; ++i)
            CHECK(toggle_at(toggle_at(w, i, 3), i, 3) == w);

    CHECK_THROWS_AS(toggle_at(parse_word("101"), 3, 1), std::out_of_range);
}

TEST_CASE("phi sweeps toggles left to right") {
    CHECK(phi(parse_word("0000000"), 3) == parse_word("1000100"));

    // phi permutes the space
    for (std::size_t N = 1; N <= 10; ++N)
        for (int m = 1; m <= std::min<int>(3, static_cast<int>(N)); ++m) {
            const auto words = enumerate_X(N, m);
            std::set<BinaryWord> images;
            for (const BinaryWord& w : words) {
                const BinaryWord img = phi(w, m);
                CHECK(space_member(img, m, ToggleSpace::X));
                images.insert(img);
            }
            CHECK(images.size() == words.size());
        }

    CHECK_THROWS_AS(phi(parse_word("1100000"), 3), std::invalid_argument);
}

TEST_CASE("the 14 words of the width-7 space split into orbits of size 6, 5, 3") {
    const std::vector<std::vector<const char*>> orbits = {
        {"1000100", "0000010", "1000001", "0100000", "0010001", "0000000"},
        {"1000010", "0100001", "0010000", "0001000", "0000100"},
        {"1000000", "0100010", "0000001"},
    };
    std::size_t covered = 0;
    for (const auto& listed : orbits) {
        const OrbitBoard b = orbit_board(parse_word(listed[0]), 3);
        REQUIRE(b.q() == listed.size());
        for (std::size_t i = 0; i < listed.size(); ++i)
            CHECK(b.rows[i] == parse_word(listed[i]));
        covered += b.q();
    }
    CHECK(covered == enumerate_X(7, 3).size());
}

TEST_CASE("orbit_board walks to first return and validates membership") {
    const OrbitBoard b = orbit_board(parse_word("10000000001000"), 3);
    CHECK(b.q() == 31);
    CHECK(b.cols() == 14);
    CHECK(phi(b.rows[b.q() - 1], 3) == b.rows[0]);

    // rejection names the offending positions
    try {
        orbit_board(parse_word("1100000"), 3);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("0") != std::string::npos);
        CHECK(msg.find("1") != std::string::npos);
    }
}

TEST_CASE("find_snakes covers the 14-column board with 9 cyclic snakes") {
    const OrbitBoard b = orbit_board(parse_word("10000000001000"), 3);
    const std::vector<Snake> snakes = find_snakes(b);
    REQUIRE(snakes.size() == 9);

    const std::vector<Composition> listed = {
        {1, 4, 1, 1, 1, 1, 4}, {1, 1, 1, 1, 4, 4, 1}, {1, 4, 4, 1, 1, 1, 1},
        {4, 1, 1, 1, 1, 4, 1}, {1, 1, 1, 1, 4, 1, 4}, {1, 4, 1, 4, 1, 1, 1},
        {1, 4, 1, 1, 1, 4, 1}, {1, 1, 1, 4, 1, 4, 1}, {4, 1, 4, 1, 1, 1, 1},
    };
    // the snake cycle matches the listed compositions up to rotation
    std::size_t offset = listed.size();
    for (std::size_t s = 0; s < listed.size(); ++s)
        if (snakes[0].comp == listed[s]) offset = s;
    REQUIRE(offset < listed.size());
    for (std::size_t s = 0; s < snakes.size(); ++s)
        CHECK(snakes[s].comp == listed[(offset + s) % listed.size()]);

    for (const Snake& s : snakes) {
        int total = 0;
        for (int part : s.comp) total += part;
        CHECK(total == 13);
        CHECK(s.cells.front().second == 0);
        CHECK(s.cells.back().second == 13);
    }

    // snakes start in increasing row order and partition the 1-cells
    std::size_t ones = 0;
    for (const BinaryWord& row : b.rows) ones += static_cast<std::size_t>(ones_count(row));
    std::size_t cells = 0;
    for (std::size_t s = 0; s < snakes.size(); ++s) {
        cells += snakes[s].cells.size();
        if (s) CHECK(snakes[s - 1].start_row() < snakes[s].start_row());
    }
    CHECK(cells == ones);
}

TEST_CASE("snake_tilde maps parts to letters") {
    CHECK(snake_tilde({1, 4, 1, 1, 1, 1, 4}, 3) == parse_word("1011110"));
    CHECK(snake_tilde({1, 1, 1}, 3) == parse_word("111"));
    CHECK(snake_tilde({4, 4}, 3) == parse_word("00"));
    CHECK_THROWS_AS(snake_tilde({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(snake_tilde({}, 3), std::invalid_argument);
}

TEST_CASE("snake tilde words of one board trace a rotation orbit") {
    CHECK(check_snake_rotation(parse_word("10000000001000"), 3).all_pass());

    // the tilde words are exactly the orbit of 1011110
    const std::vector<Snake> snakes =
        find_snakes(orbit_board(parse_word("10000000001000"), 3));
    std::set<BinaryWord> tilde_words;
    for (const Snake& s : snakes) tilde_words.insert(BinaryWord(s.tilde));
    std::set<BinaryWord> expected;
    for (const BinaryWord& w : orbit(parse_word("1011110"), 3).words) expected.insert(w);
    CHECK(tilde_words == expected);

    // a single-snake board: the width-7 orbit of 1000000 has one column-0 one
    const std::vector<Snake> single = find_snakes(orbit_board(parse_word("1000000"), 3));
    REQUIRE(single.size() == 1);
    CHECK(single[0].comp == Composition{1, 4, 1});
    CHECK(BinaryWord(single[0].tilde) == parse_word("101"));
    CHECK(check_snake_rotation(parse_word("1000000"), 3).all_pass());

    for (std::size_t N = 1; N <= 10; ++N)
        for (int m = 1; m <= std::min<int>(3, static_cast<int>(N)); ++m)
            for_each_orbit_rep(N, m, ToggleSpace::X, [&](const BinaryWord& w) {
                CHECK(check_snake_rotation(w, m).all_pass());
            });
}

TEST_CASE("column sums mirror left to right") {
    const std::vector<long long> expected = {9, 7, 3, 3, 4, 6, 4, 4, 6, 4, 3, 3, 7, 9};
    CHECK(column_sums(orbit_board(parse_word("10000000001000"), 3)) == expected);
    const Report r = check_phi_symmetry(parse_word("10000000001000"), 3);
    CHECK(r.all_pass());
    CHECK(!r.experimental);

    for (std::size_t N = 1; N <= 10; ++N)
        for (int m = 1; m <= std::min<int>(3, static_cast<int>(N)); ++m)
            for_each_orbit_rep(N, m, ToggleSpace::X, [&](const BinaryWord& w) {
                CHECK(check_phi_symmetry(w, m).all_pass());
            });
}

TEST_CASE("column sums reassemble from the tilde frequency table") {
    CHECK(column_sums_via_frequency(parse_word("10000000001000"), 3) ==
          column_sums(orbit_board(parse_word("10000000001000"), 3)));

    for (std::size_t N = 1; N <= 10; ++N)
        for (int m = 1; m <= std::min<int>(3, static_cast<int>(N)); ++m)
            for_each_orbit_rep(N, m, ToggleSpace::X, [&](const BinaryWord& w) {
                CHECK(column_sums_via_frequency(w, m) == column_sums(orbit_board(w, m)));
            });
}

TEST_CASE("phi_orbit_size_fast sizes the orbit from the tilde orbit alone") {
    CHECK(phi_orbit_size_fast(parse_word("10000000001000"), 3) == 31);
    CHECK(phi_orbit_size_fast(parse_word("10000010000001"), 3) == 31);
    for (int m = 1; m <= 4; ++m) {
        const BinaryWord zeros(std::vector<std::uint8_t>(m, 0));
        CHECK(phi_orbit_size_fast(zeros, m) == m + 1);
    }

    for (std::size_t N = 1; N <= 12; ++N)
        for (int m = 1; m <= std::min<int>(3, static_cast<int>(N)); ++m)
            for_each_orbit_rep(N, m, ToggleSpace::X, [&](const BinaryWord& w) {
                CHECK(phi_orbit_size_fast(w, m) ==
                      static_cast<long long>(orbit_board(w, m).q()));
            });
}

TEST_CASE("decompose_X: the seven width-14 orbits") {
    const std::vector<ToggleOrbitClass> classes = decompose_X(14, 3);
    REQUIRE(classes.size() == 7);
    std::multiset<long long> periods;
    long long total = 0;
    for (const ToggleOrbitClass& c : classes) {
        periods.insert(c.period);
        total += c.period;
        // the displayed encoding belongs to the displayed tilde word
        REQUIRE(!c.tilde.empty());
        const EncodedPair p = encode(parse_word(c.tilde), 3);
        CHECK(p.rw_str() == c.rw);
        CHECK(p.bqw.str() == c.bqw);
    }
    CHECK(periods == std::multiset<long long>{5, 9, 11, 17, 27, 31, 31});
    CHECK(total == 131);

    const std::vector<ToggleOrbitClass> small = decompose_X(7, 3);
    std::multiset<long long> small_periods;
    for (const ToggleOrbitClass& c : small) small_periods.insert(c.period);
    CHECK(small_periods == std::multiset<long long>{3, 5, 6});
}

TEST_CASE("known boards pin the fast orbit size and tilde orbit membership") {
    struct Row {
        const char* seed;
        const char* tilde;
        const char* bqw;
        const char* rw;
        long long period;
    };
    const std::vector<Row> rows = {
        {"10000100001000", "1111111111111", "1111", "1", 5},
        {"10000001000010", "1111111101", "110", "21", 27},
        {"10000010000100", "1111111110", "1110", "00", 17},
        {"10000001000100", "1101101", "00", "221", 11},
        {"10000010000001", "1111010", "100", "110", 31},
        {"10000010000010", "1111100", "100", "200", 31},
        {"10000000000000", "1000", "000", "1000", 9},
    };
    for (const Row& row : rows) {
        const BinaryWord seed = parse_word(row.seed);
        CHECK(phi_orbit_size_fast(seed, 3) == row.period);
        const EncodedPair p = encode(parse_word(row.tilde), 3);
        CHECK(p.rw_str() == row.rw);
        CHECK(p.bqw.str() == row.bqw);
        // the listed tilde word lies in the board's own tilde orbit
        const std::vector<Snake> snakes = find_snakes(orbit_board(seed, 3));
        const Orbit o = orbit_extended(BinaryWord(snakes[0].tilde), 3);
        CHECK(std::find(o.words.begin(), o.words.end(), parse_word(row.tilde)) !=
              o.words.end());
    }
}

TEST_CASE("single-column boards degenerate cleanly") {
    CHECK(enumerate_X(1, 1) ==
          std::vector<BinaryWord>{parse_word("0"), parse_word("1")});
    const OrbitBoard b = orbit_board(parse_word("0"), 1);
    CHECK(b.q() == 2);
    const std::vector<Snake> snakes = find_snakes(b);
    REQUIRE(snakes.size() == 1);
    CHECK(snakes[0].comp.empty());
    CHECK(snakes[0].tilde.empty());
    CHECK(phi_orbit_size_fast(parse_word("0"), 1) == 2);
    CHECK(check_snake_rotation(parse_word("0"), 1).all_pass());

    const std::vector<ToggleOrbitClass> classes = decompose_X(1, 1);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].period == 2);
    CHECK(classes[0].tilde.empty());
    CHECK(classes[0].rw.empty());
    CHECK(classes[0].bqw.empty());
}

TEST_CASE("run-limited words: orbits partition; sums mirror only at small widths") {
    const std::vector<PlainOrbitClass> classes = decompose_Z(4, 2);
    long long total = 0;
    for (const PlainOrbitClass& c : classes) total += c.period;
    CHECK(total == 13);

    const Report r = check_Z_symmetry(parse_word("0110"), 2);
    CHECK(r.experimental);
    CHECK(r.all_pass());

    // mirror symmetry holds throughout these widths...
    for (std::size_t N = 1; N <= 10; ++N)
        for_each_orbit_rep(N, 2, ToggleSpace::Z, [&](const BinaryWord& w) {
            CHECK(check_Z_symmetry(w, 2).all_pass());
        });
    for (std::size_t N = 1; N <= 7; ++N)
        for_each_orbit_rep(N, 3, ToggleSpace::Z, [&](const BinaryWord& w) {
            CHECK(check_Z_symmetry(w, 3).all_pass());
        });

    // ...but not beyond: the smallest asymmetric board, verified by hand.
    // phi(00000010) = 11101101, phi(11101101) = 00010010, ..., closing
    // after 14 steps with column sums 7 7 6 6 6 6 6 7 (column 1 vs 6).
    const OrbitBoard bad = orbit_board(parse_word("00000010"), 3, ToggleSpace::Z);
    CHECK(bad.q() == 14);
    CHECK(bad.rows[1] == parse_word("11101101"));
    CHECK(bad.rows[2] == parse_word("00010010"));
    const std::vector<long long> cols = {7, 7, 6, 6, 6, 6, 6, 7};
    CHECK(column_sums(bad) == cols);
    CHECK_FALSE(check_Z_symmetry(parse_word("00000010"), 3).all_pass());

    // the failing board is still a genuine orbit: rows stay in the space
    // and partition their words
    std::set<BinaryWord> seen;
    for (const BinaryWord& row : bad.rows) {
        CHECK(space_member(row, 3, ToggleSpace::Z));
        seen.insert(row);
    }
    CHECK(seen.size() == bad.q());

    // smallest asymmetric width-11 board for m=2, same hand-checked shape
    const OrbitBoard bad2 = orbit_board(parse_word("00001000011"), 2, ToggleSpace::Z);
    CHECK(bad2.rows[1] == parse_word("11010110000"));
    CHECK_FALSE(check_Z_symmetry(parse_word("00001000011"), 2).all_pass());
}
