#include "rotorbit/encoding.hpp"

#include "rotorbit/grot.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotorbit {

std::string EncodedPair::rw_str() const {
    std::string s;
    for (int d : rw) s += std::to_string(d);
    return s;
}

EncodedPair encode(const BinaryWord& w, int m) {
    if (m < 1) throw std::invalid_argument("encode: m must be positive");
    const Composition ore = one_run_encoding(w);
    std::vector<int> rw(ore.size()), qw(ore.size());
    for (std::size_t i = 0; i < ore.size(); ++i) {
        rw[i] = ore[i] % m;
        qw[i] = ore[i] / m;
    }
    if (ore.size() == 1 && qw[0] == 0)
        throw std::invalid_argument(
            "encode: all-ones word shorter than m has an empty binary quotient word");
    return EncodedPair{std::move(rw), from_one_run_encoding(qw), m};
}

std::vector<int> quotient_word(const BinaryWord& w, int m) {
    if (m < 1) throw std::invalid_argument("quotient_word: m must be positive");
    Composition ore = one_run_encoding(w);
    for (int& a : ore) a /= m;
    return ore;
}

BinaryWord decode(const EncodedPair& p) {
    if (p.m < 1) throw std::invalid_argument("decode: m must be positive");
    if (p.rw.empty()) throw std::invalid_argument("decode: empty remainder word");
    for (int d : p.rw)
        if (d < 0 || d >= p.m)
            throw std::invalid_argument("decode: remainder digit out of [0, m)");
    const Composition qw = one_run_encoding(p.bqw);
    if (qw.size() != p.rw.size())
        throw std::invalid_argument(
            "decode: bqw zero count does not match remainder word length");
    Composition ore(p.rw.size());
    for (std::size_t i = 0; i < ore.size(); ++i) ore[i] = p.rw[i] + p.m * qw[i];
    return from_one_run_encoding(ore);
}

EncodedPair theta(const EncodedPair& p) {
    EncodedPair out = p;
    const bool head_zero = p.bqw[0] == 0;
    std::vector<std::uint8_t> b = p.bqw.bits();
    std::rotate(b.begin(), b.begin() + 1, b.end());
    out.bqw = BinaryWord(std::move(b));
    if (head_zero && out.rw.size() > 1)
        std::rotate(out.rw.begin(), out.rw.begin() + 1, out.rw.end());
    return out;
}

Report check_conjugacy(const BinaryWord& w, int m) {
    Report r;
    r.title = "conjugacy of the encoded map for " + w.str() + ", m = " + std::to_string(m);
    BinaryWord cur = w;
    EncodedPair pair = encode(w, m);
    const Orbit o = orbit(w, m);
    for (std::size_t k = 0; k < o.period(); ++k) {
        const BinaryWord next = rotate(cur, m);
        const EncodedPair mapped = theta(pair);
        const EncodedPair direct = encode(next, m);
        const bool ok = mapped == direct;
        r.add("step " + std::to_string(k), ok,
              ok ? ""
                 : cur.str() + " -> theta (" + mapped.rw_str() + ", " + mapped.bqw.str() +
                       ") vs encode (" + direct.rw_str() + ", " + direct.bqw.str() + ")");
        cur = next;
        pair = mapped;
    }
    return r;
}

long long orbit_size(const BinaryWord& w, int m) {
    const EncodedPair p = encode(w, m);
    return static_cast<long long>(necklace_period(p.rw)) *
           static_cast<long long>(necklace_period(p.bqw));
}

std::vector<OrbitClass> decompose_space(std::size_t n, int m, bool fast) {
    if (n < 1 || n > 28)
        throw std::invalid_argument("decompose_space: n out of supported range 1..28");
    if (m < 1 || static_cast<std::size_t>(m) > n)
        throw std::invalid_argument("decompose_space: m out of range");
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> visited(total, false);
    std::vector<OrbitClass> out;
    for (std::uint64_t v = 0; v < total; ++v) {
        if (visited[v]) continue;
        const BinaryWord rep = word_from_index(v, n);
        long long size = 0;
        if (fast) {
            size = orbit_size(rep, m);
            EncodedPair p = encode(rep, m);
            for (long long step = 0; step < size; ++step) {
                visited[word_index(decode(p))] = true;
                p = theta(p);
            }
            if (p != encode(rep, m))
                throw std::runtime_error("decompose_space: conjugate walk failed to close");
        } else {
            BinaryWord cur = rep;
            do {
                visited[word_index(cur)] = true;
                ++size;
                cur = rotate(cur, m);
            } while (cur != rep);
        }
        out.push_back({rep, size});
    }
    return out;
}

long long max_orbit_size(std::size_t n, int m) {
    if (n < 1 || m < 1 || static_cast<std::size_t>(m) > n)
        throw std::invalid_argument("max_orbit_size: parameters out of range");
    if (m == 1) return static_cast<long long>(n);  // ordinary rotation: orbits divide n
    const long long d = static_cast<long long>(n) - m;
    return std::max(d * d, static_cast<long long>(n));
}

}  // namespace rotorbit
