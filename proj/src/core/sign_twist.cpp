#include "sign_twist.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace asrep {

namespace {

bool dominated(const Row& lo, const Row& hi) {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return false;
    return true;
}

Row complement_row(const Row& row, unsigned cutoff) {
    Row out;
    out.reserve(cutoff + 1 - row.size());
    std::size_t k = 0;
    for (unsigned v = 0; v <= cutoff; ++v) {
        if (k < row.size() && row[k] == v) {
            ++k;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

ComplementData complements(const Symbol& s, unsigned cutoff) {
    if (cutoff < max_entry(s))
        throw std::range_error("cutoff " + std::to_string(cutoff) + " is below the largest symbol entry");
    if (cutoff < s.length())
        throw std::range_error("cutoff " + std::to_string(cutoff) + " leaves an empty complement");
    return ComplementData{cutoff, complement_row(s.top(), cutoff), complement_row(s.bottom(), cutoff)};
}

bool has_dominated_order(const Symbol& s) {
    return dominated(s.top(), s.bottom()) || dominated(s.bottom(), s.top());
}

bool check_lemma_b(const Symbol& s, unsigned cutoff) {
    const Symbol* oriented = &s;
    Symbol swapped = s;
    if (!dominated(s.top(), s.bottom())) {
        if (!dominated(s.bottom(), s.top()))
            throw std::domain_error("no componentwise-dominated row order");
        swapped = Symbol(s.bottom(), s.top());
        oriented = &swapped;
    }
    const ComplementData c = complements(*oriented, cutoff);
    for (std::size_t h = 0; h < c.a.size(); ++h)
        if (c.b[h] > c.a[h]) return false;
    return true;
}

unsigned default_cutoff(const Symbol& s) {
    return std::max<unsigned>(max_entry(s), static_cast<unsigned>(s.length()));
}

Symbol tensor_sign(const Symbol& s, unsigned cutoff) {
    const ComplementData c = complements(s, cutoff);
    const std::size_t len = c.a.size();
    Row t(len), b(len);
    for (std::size_t i = 0; i < len; ++i) {
        t[i] = cutoff - c.a[len - 1 - i];
        b[i] = cutoff - c.b[len - 1 - i];
    }
    return Symbol(std::move(t), std::move(b));
}

SymbolClass tensor_sign_class(const SymbolClass& c) {
    return canonical(tensor_sign(c.rep(), default_cutoff(c.rep())));
}

IrrLabelD twist_label(const IrrLabelD& l) {
    return IrrLabelD{tensor_sign_class(l.cls), l.marker};
}

}  // namespace asrep
