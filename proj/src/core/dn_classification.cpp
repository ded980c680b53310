#include "dn_classification.hpp"

#include <algorithm>
#include <stdexcept>

namespace asrep {

bool y_condition(const Row& lam, const Row& mu) {
    bool strict = false;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] > mu[i]) return false;
        if (lam[i] < mu[i]) strict = true;
    }
    return strict;
}

bool x_gap_condition(const Row& lam, const Row& mu) {
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (mu[i] > lam[i + 1] + 3) return false;
    return true;
}

bool in_Y(const SymbolClass& c) {
    const Symbol& r = c.rep();
    if (is_degenerate(r)) throw std::domain_error("in_Y is undefined on degenerate classes");
    return y_condition(r.top(), r.bottom()) || y_condition(r.bottom(), r.top());
}

bool in_X(const SymbolClass& c) {
    const Symbol& r = c.rep();
    if (is_degenerate(r)) throw std::domain_error("in_X is undefined on degenerate classes");
    return (y_condition(r.top(), r.bottom()) && x_gap_condition(r.top(), r.bottom())) ||
           (y_condition(r.bottom(), r.top()) && x_gap_condition(r.bottom(), r.top()));
}

bool is_almost_special(const IrrLabelD& l) {
    return is_degenerate(l.cls.rep()) || in_Y(l.cls);
}

bool is_two_special(const IrrLabelD& l) {
    return is_degenerate(l.cls.rep()) || in_X(l.cls);
}

namespace {

void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
    if (remaining == 0) {
        std::vector<unsigned> p(cur.rbegin(), cur.rend());  // emit smallest part first
        out.push_back(std::move(p));
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<unsigned>> partitions_of(unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<unsigned> cur;
    gen_partitions(k, k, cur, out);
    return out;
}

std::vector<SymbolClass> classes_of_rank(unsigned n) {
    if (n == 0) throw std::invalid_argument("rank must be >= 1");
    std::vector<SymbolClass> out;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        const auto alphas = partitions_of(k);
        const auto betas = partitions_of(n - k);
        for (const auto& a : alphas) {
            for (const auto& b : betas) {
                if (2 * k == n && b < a) continue;  // one representative per unordered pair
                out.push_back(canonical(from_bipartition(Bipartition{a, b})));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IrrLabelD> enumerate_irr(unsigned n) {
    std::vector<IrrLabelD> out;
    for (const auto& c : classes_of_rank(n)) {
        if (is_degenerate(c.rep())) {
            out.push_back(IrrLabelD{c, Marker::I});
            out.push_back(IrrLabelD{c, Marker::II});
        } else {
            out.push_back(IrrLabelD{c, Marker::None});
        }
    }
    return out;
}

ClassificationReport verify_theorem_1_2(unsigned n) {
    if (n < 4) throw std::invalid_argument("classification sweep requires rank >= 4");
    ClassificationReport rep;
    rep.rank = n;
    for (const auto& label : enumerate_irr(n)) {
        ++rep.total;
        const bool almost = is_almost_special(label);
        const bool two = is_two_special(label);
        if (almost) ++rep.almost_special;
        if (two) ++rep.two_special;
        if (two && !almost) rep.violations.push_back(label);
    }
    return rep;
}

}  // namespace asrep
