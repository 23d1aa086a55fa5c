#include "rotorbit/orbitstats.hpp"

#include <array>
#include <stdexcept>

namespace rotorbit {

namespace {

void require_j(std::size_t j, std::size_t n, const char* who) {
    if (j > n)
        throw std::invalid_argument(std::string(who) + ": j out of range (j = " +
                                    std::to_string(j) + ", n = " + std::to_string(n) + ")");
}

long long prefix_sum(const BinaryWord& w, std::size_t j) {
    long long s = 0;
    for (std::size_t i = 0; i < j; ++i) s += w[i];
    return s;
}

long long suffix_sum(const BinaryWord& w, std::size_t j) {
    long long s = 0;
    for (std::size_t i = 0; i < j; ++i) s += w[w.size() - 1 - i];
    return s;
}

std::vector<IndexClass> class_array(std::size_t l, const std::vector<std::size_t>& i0,
                                    const std::vector<std::size_t>& it,
                                    const std::vector<std::size_t>& ih) {
    std::vector<IndexClass> cls(l, IndexClass::Zero);
    for (std::size_t i : i0) cls[i] = IndexClass::Zero;
    for (std::size_t i : it) cls[i] = IndexClass::Tail;
    for (std::size_t i : ih) cls[i] = IndexClass::Head;
    return cls;
}

}  // namespace

void IntMultiset::add(long long value, long long multiplicity) {
    if (multiplicity <= 0) throw std::invalid_argument("IntMultiset: multiplicity <= 0");
    counts_[value] += multiplicity;
}

void IntMultiset::merge(const IntMultiset& other) {
    for (const auto& [v, c] : other.counts_) counts_[v] += c;
}

IntMultiset IntMultiset::shifted_down() const {
    IntMultiset out;
    for (const auto& [v, c] : counts_) {
        if (v - 1 < 0)
            throw std::invalid_argument("IntMultiset: shift would produce a negative value");
        out.counts_[v - 1] = c;
    }
    return out;
}

long long IntMultiset::count(long long value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
}

long long IntMultiset::total() const {
    long long t = 0;
    for (const auto& [v, c] : counts_) t += c;
    return t;
}

std::string IntMultiset::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [v, c] : counts_) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(v);
        if (c > 1) s += "^" + std::to_string(c);
    }
    return s + "}";
}

IntMultiset left_multiset(const Orbit& o, std::size_t j) {
    require_j(j, o.words[0].size(), "left_multiset");
    IntMultiset out;
    for (const auto& w : o.words) out.add(prefix_sum(w, j));
    return out;
}

IntMultiset right_multiset(const Orbit& o, std::size_t j) {
    require_j(j, o.words[0].size(), "right_multiset");
    IntMultiset out;
    for (const auto& w : o.words) out.add(suffix_sum(w, j));
    return out;
}

IntMultiset left_multiset(const BinaryWord& w, int m, std::size_t j) {
    return left_multiset(orbit(w, m), j);
}

IntMultiset right_multiset(const BinaryWord& w, int m, std::size_t j) {
    return right_multiset(orbit(w, m), j);
}

FrequencyTable frequency_table(const Orbit& o, bool right) {
    const std::size_t n = o.words[0].size();
    const std::size_t a = static_cast<std::size_t>(ones_count(o.words[0]));
    FrequencyTable t;
    t.period = o.period();
    t.nu.assign(a + 1, std::vector<long long>(n + 1, 0));
    for (const auto& w : o.words) {
        long long s = 0;
        t.nu[0][0] += 1;
        for (std::size_t j = 1; j <= n; ++j) {
            s += right ? w[n - j] : w[j - 1];
            t.nu[static_cast<std::size_t>(s)][j] += 1;
        }
    }
    return t;
}

FrequencyTable frequency_table(const BinaryWord& w, int m, bool right) {
    return frequency_table(orbit(w, m), right);
}

char index_class_label(IndexClass c) {
    switch (c) {
        case IndexClass::Zero: return '0';
        case IndexClass::Tail: return 'T';
        case IndexClass::Head: return 'H';
    }
    return '?';
}

IntMultiset m_ab(const ExtensionTrace& t, const IndexDecomposition& d, std::size_t j,
                 IndexClass a, IndexClass b, bool hatted) {
    if (j < 1) throw std::invalid_argument("m_ab: j must be at least 1");
    require_j(j, t.n, "m_ab");
    const std::size_t l = t.l;
    IntMultiset out;
    if (!hatted) {
        const auto cls = class_array(l, d.i0, d.it, d.ih);
        const auto& starts = a == IndexClass::Zero ? d.i0 : a == IndexClass::Tail ? d.it : d.ih;
        for (std::size_t k : starts) {
            if (cls[(k + j - 1) % l] != b) continue;
            long long s = 0;
            for (std::size_t i = 0; i < j; ++i) s += t.bar[(k + i) % l];
            out.add(s);
        }
    } else {
        const auto cls = class_array(l, d.hat_i0, d.hat_it, d.hat_ih);
        const auto& starts =
            a == IndexClass::Zero ? d.hat_i0 : a == IndexClass::Tail ? d.hat_it : d.hat_ih;
        for (std::size_t k : starts) {
            if (cls[(k + l - ((j - 1) % l)) % l] != b) continue;
            long long s = 0;
            for (std::size_t i = 0; i < j; ++i) s += t.hat[(k + l - (i % l)) % l];
            out.add(s);
        }
    }
    return out;
}

Report check_theorem1(const BinaryWord& w, int m) {
    Report r;
    r.title = "left/right cumulative-sum multiset equality for " + w.str() +
              ", m = " + std::to_string(m);
    const Orbit o = orbit(w, m);
    for (std::size_t j = 0; j <= w.size(); ++j) {
        const IntMultiset lhs = left_multiset(o, j);
        const IntMultiset rhs = right_multiset(o, j);
        r.add("j=" + std::to_string(j), lhs == rhs,
              lhs == rhs ? "" : "left " + lhs.str() + " vs right " + rhs.str());
    }
    return r;
}

Report check_column_sum_symmetry(const BinaryWord& w, int m) {
    Report r;
    r.title = "orbit column-sum mirror symmetry for " + w.str() + ", m = " + std::to_string(m);
    const Orbit o = orbit(w, m);
    const std::size_t n = w.size();
    std::vector<long long> col(n, 0);
    for (const auto& u : o.words)
        for (std::size_t j = 0; j < n; ++j) col[j] += u[j];
    for (std::size_t j = 0; j < n; ++j) {
        const bool ok = col[j] == col[n - 1 - j];
        r.add("column " + std::to_string(j), ok,
              ok ? "" : std::to_string(col[j]) + " vs " + std::to_string(col[n - 1 - j]));
    }
    return r;
}

Report check_lemma_identities(const BinaryWord& w, int m) {
    Report r;
    r.title = "window-sum multiset identities for " + w.str() + ", m = " + std::to_string(m);
    const Orbit o = orbit(w, m);
    const ExtensionTrace t = extension_trace(w, m);
    const IndexDecomposition d = index_decomposition(t, m);
    const std::size_t n = w.size();
    constexpr std::array<IndexClass, 3> classes{IndexClass::Zero, IndexClass::Tail,
                                                IndexClass::Head};
    const auto cell_name = [](std::size_t j, IndexClass a, IndexClass b) {
        return std::string("j=") + std::to_string(j) + " (" + index_class_label(a) + "," +
               index_class_label(b) + ")";
    };

    for (std::size_t j = 1; j <= n; ++j) {
        IntMultiset cell[3][3], hat_cell[3][3];
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                cell[a][b] = m_ab(t, d, j, classes[a], classes[b], false);
                hat_cell[a][b] = m_ab(t, d, j, classes[a], classes[b], true);
            }

        // j = 1 base structure, on both the plain and hatted tables
        if (j == 1) {
            const std::array<std::size_t, 3> sizes{d.i0.size(), d.it.size(), d.ih.size()};
            bool ok = true;
            std::string wit;
            for (std::size_t a = 0; a < 3 && ok; ++a)
                for (std::size_t b = 0; b < 3 && ok; ++b) {
                    IntMultiset want;
                    if (a == b && sizes[a] > 0)
                        want.add(classes[a] == IndexClass::Zero ? 0 : 1,
                                 static_cast<long long>(sizes[a]));
                    if (cell[a][b] != want || hat_cell[a][b] != want) {
                        ok = false;
                        wit = cell_name(1, classes[a], classes[b]) + " got " +
                              cell[a][b].str() + " / " + hat_cell[a][b].str() + ", want " +
                              want.str();
                    }
                }
            r.add("j=1 base structure", ok, wit);
        }

        // (0,0) and (T,T) equalities
        r.add(cell_name(j, IndexClass::Zero, IndexClass::Zero) + " plain = hatted",
              cell[0][0] == hat_cell[0][0],
              cell[0][0] == hat_cell[0][0] ? "" : cell[0][0].str() + " vs " + hat_cell[0][0].str());
        r.add(cell_name(j, IndexClass::Tail, IndexClass::Tail) + " plain = hatted",
              cell[1][1] == hat_cell[1][1],
              cell[1][1] == hat_cell[1][1] ? "" : cell[1][1].str() + " vs " + hat_cell[1][1].str());

        // four-term union over the (0|T) x (0|T) block
        {
            IntMultiset lhs = cell[0][0];
            lhs.merge(cell[0][1]);
            lhs.merge(cell[1][0].shifted_down());
            lhs.merge(cell[1][1].shifted_down());
            IntMultiset rhs = hat_cell[0][0];
            rhs.merge(hat_cell[0][1]);
            rhs.merge(hat_cell[1][0].shifted_down());
            rhs.merge(hat_cell[1][1].shifted_down());
            r.add("j=" + std::to_string(j) + " four-term (0|T) union", lhs == rhs,
                  lhs == rhs ? "" : lhs.str() + " vs " + rhs.str());
        }

        // (0,T) is empty up to j = m
        if (j <= static_cast<std::size_t>(m)) {
            const bool ok = cell[0][1].empty() && hat_cell[0][1].empty();
            r.add("j=" + std::to_string(j) + " (0,T) empty for j <= m", ok,
                  ok ? "" : cell[0][1].str() + " / " + hat_cell[0][1].str());
        }

        // row-sum and column-sum shift identities
        for (std::size_t a = 0; a < 3; ++a) {
            IntMultiset lhs = cell[a][0];
            lhs.merge(cell[a][1].shifted_down());
            lhs.merge(cell[a][2].shifted_down());
            IntMultiset rhs = hat_cell[a][0];
            rhs.merge(hat_cell[a][1].shifted_down());
            rhs.merge(hat_cell[a][2].shifted_down());
            r.add("j=" + std::to_string(j) + " row sum a=" + std::string(1, index_class_label(classes[a])),
                  lhs == rhs, lhs == rhs ? "" : lhs.str() + " vs " + rhs.str());
        }
        for (std::size_t b = 0; b < 3; ++b) {
            IntMultiset lhs = cell[0][b];
            lhs.merge(cell[1][b].shifted_down());
            lhs.merge(cell[2][b].shifted_down());
            IntMultiset rhs = hat_cell[0][b];
            rhs.merge(hat_cell[1][b].shifted_down());
            rhs.merge(hat_cell[2][b].shifted_down());
            r.add("j=" + std::to_string(j) + " column sum b=" + std::string(1, index_class_label(classes[b])),
                  lhs == rhs, lhs == rhs ? "" : lhs.str() + " vs " + rhs.str());
        }

        // (0,T) u ((T,T)-1) pair identity
        {
            IntMultiset lhs = cell[0][1];
            lhs.merge(cell[1][1].shifted_down());
            IntMultiset rhs = hat_cell[0][1];
            rhs.merge(hat_cell[1][1].shifted_down());
            r.add("j=" + std::to_string(j) + " (0,T) u ((T,T)-1)", lhs == rhs,
                  lhs == rhs ? "" : lhs.str() + " vs " + rhs.str());
        }

        // full cellwise equality
        {
            bool ok = true;
            std::string wit;
            for (std::size_t a = 0; a < 3 && ok; ++a)
                for (std::size_t b = 0; b < 3 && ok; ++b)
                    if (cell[a][b] != hat_cell[a][b]) {
                        ok = false;
                        wit = cell_name(j, classes[a], classes[b]) + ": " + cell[a][b].str() +
                              " vs " + hat_cell[a][b].str();
                    }
            r.add("j=" + std::to_string(j) + " cellwise equality", ok, wit);
        }

        // reassembly of the cumulative multisets from rows 0 and T at window j
        {
            IntMultiset left = cell[0][0];
            left.merge(cell[0][1]);
            left.merge(cell[0][2]);
            IntMultiset shift = cell[1][0];
            shift.merge(cell[1][1]);
            shift.merge(cell[1][2]);
            left.merge(shift.shifted_down());
            const IntMultiset want_left = left_multiset(o, j - 1);
            r.add("j=" + std::to_string(j - 1) + " left reassembly", left == want_left,
                  left == want_left ? "" : left.str() + " vs " + want_left.str());

            IntMultiset right = hat_cell[0][0];
            right.merge(hat_cell[0][1]);
            right.merge(hat_cell[0][2]);
            IntMultiset hshift = hat_cell[1][0];
            hshift.merge(hat_cell[1][1]);
            hshift.merge(hat_cell[1][2]);
            right.merge(hshift.shifted_down());
            const IntMultiset want_right = right_multiset(o, j - 1);
            r.add("j=" + std::to_string(j - 1) + " right reassembly", right == want_right,
                  right == want_right ? "" : right.str() + " vs " + want_right.str());
        }
    }
    return r;
}

}  // namespace rotorbit
