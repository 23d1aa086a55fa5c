#include "rotorbit/grot.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rotorbit {

namespace {

void require_m_in_range(const BinaryWord& w, int m) {
    if (m < 1 || static_cast<std::size_t>(m) > w.size())
        throw std::invalid_argument("rotate: m must satisfy 1 <= m <= " +
                                    std::to_string(w.size()) + ", got " +
                                    std::to_string(m));
}

Orbit orbit_impl(const BinaryWord& w, int m, BinaryWord (*step)(const BinaryWord&, int)) {
    const std::size_t n = w.size();
    const std::size_t cap = n < 63 ? (std::size_t{1} << n) : ~std::size_t{0};
    Orbit o;
    o.words.push_back(w);
    BinaryWord cur = step(w, m);
    while (cur != w) {
        if (o.words.size() >= cap)
            throw std::runtime_error("orbit: failed to close within 2^n steps");
        o.words.push_back(cur);
        cur = step(cur, m);
    }
    return o;
}

}  // namespace

std::size_t leading_ones(const BinaryWord& w) {
    std::size_t k = 0;
    while (k < w.size() && w[k] == 1) ++k;
    return k;
}

BinaryWord rotate_extended(const BinaryWord& w, int m) {
    if (m < 1) throw std::invalid_argument("rotate: m must be positive");
    const std::size_t n = w.size();
    const std::size_t k = leading_ones(w);
    std::vector<std::uint8_t> out;
    out.reserve(n);
    if (k < static_cast<std::size_t>(m)) {
        if (k == n) return w;  // all ones, shorter than m: fixed point
        // w = 1^k 0 v  ->  v 0 1^k
        out.assign(w.bits().begin() + static_cast<std::ptrdiff_t>(k) + 1, w.bits().end());
        out.push_back(0);
        out.insert(out.end(), k, 1);
    } else {
        // w = 1^m v  ->  v 1^m
        out.assign(w.bits().begin() + m, w.bits().end());
        out.insert(out.end(), static_cast<std::size_t>(m), 1);
    }
    return BinaryWord(std::move(out));
}

BinaryWord rotate(const BinaryWord& w, int m) {
    require_m_in_range(w, m);
    return rotate_extended(w, m);
}

BinaryWord rotate_inv(const BinaryWord& w, int m) {
    require_m_in_range(w, m);
    return reverse(rotate(reverse(w), m));
}

Orbit orbit(const BinaryWord& w, int m) {
    require_m_in_range(w, m);
    return orbit_impl(w, m, &rotate);
}

Orbit orbit_extended(const BinaryWord& w, int m) {
    if (m < 1) throw std::invalid_argument("rotate: m must be positive");
    return orbit_impl(w, m, &rotate_extended);
}

ExtensionTrace extension_trace(const BinaryWord& w, int m) {
    require_m_in_range(w, m);
    const std::size_t n = w.size();
    std::vector<std::uint8_t> ext = w.bits();
    std::vector<std::size_t> c{0};
    const std::size_t step_cap = n < 63 ? (std::size_t{1} << n) : ~std::size_t{0};
    for (;;) {
        if (c.size() - 1 >= step_cap)
            throw std::runtime_error("extension_trace: failed to close within 2^n steps");
        // leading run of the current word ext[c.back() .. c.back()+n)
        const std::size_t base = c.back();
        std::size_t k = 0;
        while (k < n && ext[base + k] == 1) ++k;
        if (k < static_cast<std::size_t>(m)) {
            ext.push_back(0);
            ext.insert(ext.end(), k, 1);
        } else {
            ext.insert(ext.end(), static_cast<std::size_t>(m), 1);
        }
        c.push_back(ext.size() - n);
        // stop once w is a suffix again
        if (std::equal(w.bits().begin(), w.bits().end(), ext.end() - static_cast<std::ptrdiff_t>(n)))
            break;
    }
    const std::size_t l = c.back();
    BinaryWord bar(std::vector<std::uint8_t>(ext.begin(), ext.begin() + static_cast<std::ptrdiff_t>(l)));
    BinaryWord hat(std::vector<std::uint8_t>(ext.begin() + static_cast<std::ptrdiff_t>(n), ext.end()));
    return ExtensionTrace(BinaryWord(std::move(ext)), std::move(c), std::move(bar),
                          std::move(hat), l, n);
}

IndexDecomposition index_decomposition(const ExtensionTrace& t, int m) {
    if (m < 1) throw std::invalid_argument("index_decomposition: m must be positive");
    const std::size_t l = t.l;
    const std::size_t p = t.p();
    std::vector<std::uint8_t> tail_mark(l, 0), head_mark(l, 0);
    for (std::size_t j = 0; j < p; ++j) {
        tail_mark[(t.c[j] + l - 1) % l] = 1;
        head_mark[t.c[j] % l] = 1;
    }
    IndexDecomposition d;
    for (std::size_t i = 0; i < l; ++i) {
        if (t.bar[i] == 0) d.i0.push_back(i);
        else if (tail_mark[i]) d.it.push_back(i);
        else d.ih.push_back(i);
        if (t.hat[i] == 0) d.hat_i0.push_back(i);
        else if (head_mark[i]) d.hat_it.push_back(i);
        else d.hat_ih.push_back(i);
    }
    // every tail index closes a block of m ones in bar
    for (std::size_t i : d.it) {
        for (std::size_t back = 0; back < static_cast<std::size_t>(m); ++back) {
            if (t.bar[(i + l - back) % l] != 1)
                throw std::runtime_error("index_decomposition: tail index " +
                                         std::to_string(i) +
                                         " does not close a block of m ones");
        }
    }
    return d;
}

}  // namespace rotorbit
