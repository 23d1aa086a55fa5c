// rotorbit: orbits of a generalized rotation on binary words, their
// statistics, the quotient/remainder encoding, and the toggle system
// on spaced binary words.
//
// Subcommands: orbit, freq, decompose, verify, board.
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.
// Data goes to stdout; progress goes to stderr.

#include "CLI11.hpp"
#include "json.hpp"

#include "rotorbit/bitword.hpp"
#include "rotorbit/encoding.hpp"
#include "rotorbit/grot.hpp"
#include "rotorbit/orbitstats.hpp"
#include "rotorbit/report.hpp"
#include "rotorbit/toggle.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <unordered_set>
#include <vector>

namespace {

using nlohmann::json;
using namespace rotorbit;

constexpr std::size_t kRhoCap = 24;     // 2^n state spaces beyond this need --seed-cap
constexpr std::size_t kToggleCap = 30;  // X_N / Z_N boards beyond this need --seed-cap

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text, const std::string& flag) {
    static const std::regex pat(R"(^(\d+)(\.\.(\d+))?$)");
    std::smatch mr;
    if (!std::regex_match(text, mr, pat))
        throw std::invalid_argument(flag + ": expected an integer or lo..hi, got '" + text +
                                    "'");
    Range r;
    r.lo = std::stoi(mr[1]);
    r.hi = mr[3].matched ? std::stoi(mr[3]) : r.lo;
    if (r.lo < 1 || r.hi < r.lo)
        throw std::invalid_argument(flag + ": bad range '" + text + "'");
    return r;
}

void check_cap(std::size_t value, std::size_t default_cap, std::optional<int> seed_cap,
               const std::string& what) {
    const std::size_t cap =
        seed_cap ? static_cast<std::size_t>(*seed_cap) : default_cap;
    if (value > cap)
        throw std::invalid_argument(
            what + " = " + std::to_string(value) + " exceeds the cap of " +
            std::to_string(cap) +
            (seed_cap ? "" : "; pass --seed-cap to acknowledge a larger sweep"));
}

// Sequences print as concatenated digits when every entry fits one digit
// (the table layout), falling back to comma separation.
std::string seq_str(const std::vector<int>& v) {
    bool digits = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i && !digits) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string comp_paren_str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Pads cells so columns line up; every row must have the same arity.
void emit_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        std::cout << line << "\n";
    }
}

void emit_csv(const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += ',';
            line += row[i];
        }
        std::cout << line << "\n";
    }
}

int run_orbit(const std::string& word_text, int m, bool with_encoding,
              const std::string& format) {
    const BinaryWord w = parse_word(word_text);
    const Orbit o = orbit(w, m);
    if (format == "json") {
        json out;
        out["command"] = "orbit";
        out["params"] = {{"encoding", with_encoding}, {"m", m}, {"word", w.str()}};
        json rows = json::array();
        for (std::size_t k = 0; k < o.words.size(); ++k) {
            json row = {{"k", k}, {"word", o.words[k].str()}};
            if (with_encoding) {
                const EncodedPair p = encode(o.words[k], m);
                row["ore"] = one_run_encoding(o.words[k]);
                row["rw"] = p.rw;
                row["qw"] = quotient_word(o.words[k], m);
                row["bqw"] = p.bqw.str();
            }
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
        out["totals"] = {{"orbit_size", o.period()}};
        emit_json(out);
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (with_encoding) rows.push_back({"k", "word", "ore", "rw", "qw", "bqw"});
    else rows.push_back({"k", "word"});
    for (std::size_t k = 0; k < o.words.size(); ++k) {
        std::vector<std::string> row{std::to_string(k), o.words[k].str()};
        if (with_encoding) {
            const EncodedPair p = encode(o.words[k], m);
            row.push_back(seq_str(one_run_encoding(o.words[k])));
            row.push_back(seq_str(p.rw));
            row.push_back(seq_str(quotient_word(o.words[k], m)));
            row.push_back(p.bqw.str());
        }
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        emit_csv(rows);
    } else {
        emit_aligned(rows);
        std::cout << "orbit size " << o.period() << "\n";
    }
    return 0;
}

int run_freq(const std::string& word_text, int m, bool right, std::optional<int> j,
             const std::string& format) {
    const BinaryWord w = parse_word(word_text);
    const FrequencyTable t = frequency_table(w, m, right);
    if (j && (*j < 0 || static_cast<std::size_t>(*j) >= t.cols()))
        throw std::invalid_argument("--j must lie in [0, " + std::to_string(t.cols() - 1) +
                                    "]");
    if (format == "json") {
        json out;
        out["command"] = "freq";
        json params = {{"m", m}, {"right", right}, {"word", w.str()}};
        if (j) params["j"] = *j;
        out["params"] = std::move(params);
        if (j) {
            json col = json::array();
            for (std::size_t s = 0; s < t.rows(); ++s) col.push_back(t.nu[s][*j]);
            out["rows"] = std::move(col);
            long long sum = 0;
            for (std::size_t s = 0; s < t.rows(); ++s) sum += t.nu[s][*j];
            out["totals"] = {{"column_sum", sum}};
        } else {
            out["rows"] = t.nu;
            out["totals"] = {{"height", t.rows()}, {"period", t.period},
                             {"width", t.cols()}};
        }
        emit_json(out);
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (j) {
        std::vector<std::string> col;
        for (std::size_t s = 0; s < t.rows(); ++s) col.push_back(std::to_string(t.nu[s][*j]));
        rows.push_back(std::move(col));
    } else {
        for (std::size_t s = 0; s < t.rows(); ++s) {
            std::vector<std::string> row;
            for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(std::to_string(t.nu[s][c]));
            rows.push_back(std::move(row));
        }
    }
    if (format == "csv") emit_csv(rows);
    else emit_aligned(rows);
    return 0;
}

int run_decompose(std::size_t n, int m, const std::string& space, const std::string& format,
                  std::optional<int> seed_cap) {
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    json totals;

    if (space == "rho") {
        check_cap(n, kRhoCap, seed_cap, "n");
        std::vector<OrbitClass> classes = decompose_space(n, m);
        std::stable_sort(classes.begin(), classes.end(),
                         [](const OrbitClass& a, const OrbitClass& b) {
                             const int za = static_cast<int>(a.rep.size()) - ones_count(a.rep);
                             const int zb = static_cast<int>(b.rep.size()) - ones_count(b.rep);
                             if (za != zb) return za < zb;
                             return a.rep < b.rep;
                         });
        rows.push_back({"zeros", "word", "bqw", "rw", "period"});
        long long total_words = 0;
        long long max_period = 0;
        for (const OrbitClass& c : classes) {
            const EncodedPair p = encode(c.rep, m);
            const long long pb = static_cast<long long>(necklace_period(p.bqw.bits()));
            const long long pr = static_cast<long long>(necklace_period(p.rw));
            const int zeros = static_cast<int>(c.rep.size()) - ones_count(c.rep);
            total_words += c.size;
            max_period = std::max(max_period, c.size);
            rows.push_back({std::to_string(zeros), c.rep.str(), p.bqw.str(), seq_str(p.rw),
                            std::to_string(pb) + "x" + std::to_string(pr) + "=" +
                                std::to_string(c.size)});
            jrows.push_back({{"bqw", p.bqw.str()},
                             {"period", c.size},
                             {"period_bqw", pb},
                             {"period_rw", pr},
                             {"rw", p.rw},
                             {"word", c.rep.str()},
                             {"zeros", zeros}});
        }
        totals = {{"max_period", max_period},
                  {"orbits", classes.size()},
                  {"states", total_words}};
    } else if (space == "toggle") {
        check_cap(n, kToggleCap, seed_cap, "N");
        const std::vector<ToggleOrbitClass> classes = decompose_X(n, m);
        rows.push_back({"rep", "tilde", "bqw", "rw", "period"});
        long long total_states = 0;
        long long max_period = 0;
        for (const ToggleOrbitClass& c : classes) {
            total_states += c.period;
            max_period = std::max(max_period, c.period);
            rows.push_back({c.rep.str(), c.tilde, c.bqw, c.rw, std::to_string(c.period)});
            jrows.push_back({{"bqw", c.bqw},
                             {"period", c.period},
                             {"rep", c.rep.str()},
                             {"rw", c.rw},
                             {"tilde", c.tilde}});
        }
        totals = {{"max_period", max_period},
                  {"orbits", classes.size()},
                  {"states", total_states}};
    } else {  // z
        check_cap(n, kToggleCap, seed_cap, "N");
        const std::vector<PlainOrbitClass> classes = decompose_Z(n, m);
        rows.push_back({"rep", "period"});
        long long total_states = 0;
        long long max_period = 0;
        for (const PlainOrbitClass& c : classes) {
            total_states += c.period;
            max_period = std::max(max_period, c.period);
            rows.push_back({c.rep.str(), std::to_string(c.period)});
            jrows.push_back({{"period", c.period}, {"rep", c.rep.str()}});
        }
        totals = {{"max_period", max_period},
                  {"orbits", classes.size()},
                  {"states", total_states}};
    }

    if (format == "json") {
        json out;
        out["command"] = "decompose";
        out["params"] = {{"m", m}, {"n", n}, {"space", space}};
        out["rows"] = std::move(jrows);
        out["totals"] = std::move(totals);
        emit_json(out);
        return 0;
    }
    if (format == "csv") {
        emit_csv(rows);
        return 0;
    }
    emit_aligned(rows);
    std::cout << totals["orbits"].get<long long>() << " orbits, "
              << totals["states"].get<long long>() << " states\n";
    return 0;
}

int run_board(const std::string& word_text, int m, const std::string& format) {
    const BinaryWord S = parse_word(word_text);
    const OrbitBoard b = orbit_board(S, m);
    const std::vector<Snake> snakes = find_snakes(b);

    static const std::string kLabels =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    std::vector<std::string> grid(b.q(), std::string(b.cols(), '.'));
    for (std::size_t s = 0; s < snakes.size(); ++s)
        for (const auto& [r, j] : snakes[s].cells)
            grid[r][j] = kLabels[s % kLabels.size()];

    if (format == "json") {
        json out;
        out["command"] = "board";
        out["params"] = {{"m", m}, {"word", S.str()}};
        json jrows = json::array();
        for (std::size_t r = 0; r < b.q(); ++r)
            jrows.push_back({{"cells", grid[r]}, {"index", r}, {"word", b.rows[r].str()}});
        out["rows"] = std::move(jrows);
        json jsnakes = json::array();
        for (std::size_t s = 0; s < snakes.size(); ++s)
            jsnakes.push_back({{"composition", snakes[s].comp},
                               {"label", std::string(1, kLabels[s % kLabels.size()])},
                               {"start_row", snakes[s].start_row()},
                               {"tilde", snakes[s].tilde_str()}});
        out["totals"] = {{"columns", b.cols()},
                         {"period", b.q()},
                         {"snake_count", snakes.size()},
                         {"snakes", std::move(jsnakes)}};
        emit_json(out);
        return 0;
    }
    for (const std::string& line : grid) std::cout << line << "\n";
    std::cout << "snakes:\n";
    for (std::size_t s = 0; s < snakes.size(); ++s) {
        std::cout << kLabels[s % kLabels.size()] << ": start row "
                  << snakes[s].start_row() << ", composition "
                  << comp_paren_str(snakes[s].comp) << ", tilde "
                  << (snakes[s].tilde.empty() ? std::string("(empty)")
                                              : snakes[s].tilde_str())
                  << "\n";
    }
    std::cout << "period " << b.q() << ", columns " << b.cols() << ", "
              << snakes.size() << " snakes\n";
    return 0;
}

// Walks every orbit representative of X_N / Z_N exactly once.
template <typename Fn>
void for_each_orbit_rep(std::size_t N, int m, ToggleSpace sp, Fn&& fn) {
    const std::vector<BinaryWord> words =
        sp == ToggleSpace::X ? enumerate_X(N, m) : enumerate_Z(N, m);
    std::unordered_set<std::uint64_t> visited;
    for (const BinaryWord& w : words) {
        if (visited.contains(word_index(w))) continue;
        const OrbitBoard b = orbit_board(w, m, sp);
        for (const BinaryWord& row : b.rows) visited.insert(word_index(row));
        fn(w);
    }
}

int run_verify(const std::string& scope, const std::string& n_text,
               const std::string& N_text, const std::string& m_text,
               const std::string& format, std::optional<int> seed_cap) {
    const bool rho_scope = scope == "theorem1" || scope == "lemmas";
    std::string size_text = rho_scope ? n_text : N_text;
    if (size_text.empty()) size_text = rho_scope ? N_text : n_text;  // accept either flag
    if (size_text.empty()) {
        if (scope == "theorem1") size_text = "1..10";
        else if (scope == "lemmas") size_text = "1..9";
        else if (scope == "z-conjecture") size_text = "1..10";
        else size_text = "1..12";
    }
    std::string mm_text = m_text;
    if (mm_text.empty()) mm_text = scope == "z-conjecture" ? "2..3" : (rho_scope ? "1..4" : "1..3");

    const Range nr = parse_range(size_text, rho_scope ? "--n" : "--N");
    const Range mr = parse_range(mm_text, "--m");
    check_cap(static_cast<std::size_t>(nr.hi), rho_scope ? kRhoCap : kToggleCap, seed_cap,
              rho_scope ? "n" : "N");

    const bool experimental = scope == "z-conjecture";
    Report sweep;
    sweep.title = "verify " + scope;
    sweep.experimental = experimental;

    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int m = mr.lo; m <= mr.hi; ++m) {
            if (rho_scope && m > n) continue;
            if ((scope == "snake" || scope == "phi-symmetry") && n < m) continue;
            std::fprintf(stderr, "verify %s %s=%d m=%d\n", scope.c_str(),
                         rho_scope ? "n" : "N", n, m);
            long long checked = 0;
            std::string witness;
            auto absorb = [&](const Report& r, const BinaryWord& w) {
                ++checked;
                if (!witness.empty()) return;
                for (const Verdict& v : r.verdicts)
                    if (!v.pass) {
                        witness = w.str() + ": " + v.name;
                        if (!v.witness.empty()) witness += " (" + v.witness + ")";
                        return;
                    }
            };
            if (rho_scope) {
                for (const OrbitClass& c :
                     decompose_space(static_cast<std::size_t>(n), m)) {
                    if (scope == "theorem1") absorb(check_theorem1(c.rep, m), c.rep);
                    else absorb(check_lemma_identities(c.rep, m), c.rep);
                }
            } else if (scope == "snake") {
                for_each_orbit_rep(static_cast<std::size_t>(n), m, ToggleSpace::X,
                                   [&](const BinaryWord& w) {
                                       absorb(check_snake_rotation(w, m), w);
                                   });
            } else if (scope == "phi-symmetry") {
                for_each_orbit_rep(static_cast<std::size_t>(n), m, ToggleSpace::X,
                                   [&](const BinaryWord& w) {
                                       absorb(check_phi_symmetry(w, m), w);
                                   });
            } else {  // z-conjecture
                for_each_orbit_rep(static_cast<std::size_t>(n), m, ToggleSpace::Z,
                                   [&](const BinaryWord& w) {
                                       absorb(check_Z_symmetry(w, m), w);
                                   });
            }
            sweep.add(scope + " " + (rho_scope ? "n=" : "N=") + std::to_string(n) +
                          " m=" + std::to_string(m) + " (" + std::to_string(checked) +
                          " orbits)",
                      witness.empty(), witness);
        }
    }

    long long passed = 0, failed = 0;
    for (const Verdict& v : sweep.verdicts) (v.pass ? passed : failed)++;

    if (format == "json") {
        json out;
        out["command"] = "verify";
        out["params"] = {{"m", mm_text},
                         {rho_scope ? "n" : "N", size_text},
                         {"scope", scope}};
        json verdicts = json::array();
        for (const Verdict& v : sweep.verdicts)
            verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"witness", v.witness}});
        out["verdicts"] = std::move(verdicts);
        out["totals"] = {{"experimental", experimental},
                         {"failed", failed},
                         {"passed", passed}};
        emit_json(out);
    } else {
        if (experimental)
            std::cout << "EXPERIMENTAL: empirical evidence for a conjecture, not a proof\n";
        for (const Verdict& v : sweep.verdicts) {
            std::cout << (v.pass ? "PASS " : "FAIL ") << v.name;
            if (!v.witness.empty()) std::cout << ": " << v.witness;
            std::cout << "\n";
        }
        std::cout << "passed " << passed << ", failed " << failed << "\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbits of a generalized rotation on binary words"};
    app.require_subcommand(1);

    std::string word, format = "text", space = "rho", scope;
    std::string n_text, N_text, m_text;
    int m = 1;
    int j = -1;
    bool right = false, with_encoding = false;
    std::optional<int> seed_cap;
    int seed_cap_raw = -1;

    const auto format_check = CLI::IsMember({"text", "json", "csv"});

    CLI::App* c_orbit = app.add_subcommand("orbit", "rotation orbit of a word");
    c_orbit->add_option("word", word, "binary word")->required();
    c_orbit->add_option("--m", m, "rotation parameter")->required();
    c_orbit->add_flag("--encoding", with_encoding, "add ore/rw/qw/bqw columns");
    c_orbit->add_option("--format", format)->check(format_check);

    CLI::App* c_freq = app.add_subcommand("freq", "cumulative-sum frequency table");
    c_freq->add_option("word", word, "binary word")->required();
    c_freq->add_option("--m", m, "rotation parameter")->required();
    c_freq->add_flag("--right", right, "use right (suffix) sums");
    c_freq->add_option("--j", j, "restrict to one column");
    c_freq->add_option("--format", format)->check(format_check);

    CLI::App* c_dec = app.add_subcommand("decompose", "orbit census of a state space");
    std::size_t dec_n = 0;
    CLI::Option* dec_n_opt = c_dec->add_option("--n", dec_n, "word length");
    CLI::Option* dec_N_opt = c_dec->add_option("--N", dec_n, "word length (alias)");
    c_dec->add_option("--m", m, "rotation parameter")->required();
    c_dec->add_option("--space", space, "rho | toggle | z")
        ->check(CLI::IsMember({"rho", "toggle", "z"}));
    c_dec->add_option("--seed-cap", seed_cap_raw, "acknowledge a sweep beyond the default cap");
    c_dec->add_option("--format", format)->check(format_check);

    CLI::App* c_ver = app.add_subcommand("verify", "exhaustive checks at desk scale");
    c_ver->add_option("scope", scope, "theorem1 | lemmas | snake | phi-symmetry | z-conjecture")
        ->required()
        ->check(CLI::IsMember({"theorem1", "lemmas", "snake", "phi-symmetry", "z-conjecture"}));
    c_ver->add_option("--n", n_text, "word-length range, e.g. 1..12");
    c_ver->add_option("--N", N_text, "board-width range, e.g. 1..14");
    c_ver->add_option("--m", m_text, "parameter range, e.g. 1..4");
    c_ver->add_option("--seed-cap", seed_cap_raw, "acknowledge a sweep beyond the default cap");
    c_ver->add_option("--format", format)->check(format_check);

    CLI::App* c_board = app.add_subcommand("board", "orbit board with labeled snakes");
    c_board->add_option("word", word, "board seed, a member of X_N")->required();
    c_board->add_option("--m", m, "spacing parameter")->required();
    c_board->add_option("--format", format)->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    if (seed_cap_raw >= 0) seed_cap = seed_cap_raw;

    try {
        if (c_orbit->parsed()) return run_orbit(word, m, with_encoding, format);
        if (c_freq->parsed())
            return run_freq(word, m, right, j >= 0 ? std::optional<int>(j) : std::nullopt,
                            format);
        if (c_dec->parsed()) {
            if (!*dec_n_opt && !*dec_N_opt)
                throw std::invalid_argument("decompose: --n (or --N) is required");
            return run_decompose(dec_n, m, space, format, seed_cap);
        }
        if (c_ver->parsed()) {
            if (format == "csv")
                throw std::invalid_argument("csv supports tables only (orbit, freq, decompose)");
            return run_verify(scope, n_text, N_text, m_text, format, seed_cap);
        }
        if (c_board->parsed()) {
            if (format == "csv")
                throw std::invalid_argument("csv supports tables only (orbit, freq, decompose)");
            return run_board(word, m, format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
