#pragma once

#include "dn_classification.hpp"
#include "symbols.hpp"

namespace asrep {

/*
  Tensoring with the sign character acts on symbols by complementation:
  pick a cutoff N at least as large as every entry (and at least m, so the
  complements are nonempty), list the complements of the two rows inside
  {0, ..., N}, then reflect with A'_i = N - A_{L+1-i} where L = N - m + 1.
  The resulting symbol has the same rank; different cutoffs give equivalent
  symbols, and the induced map on classes is an involution.
*/

struct ComplementData {
    unsigned cutoff = 0;
    Row a;  // {0..N} minus the top row, increasing
    Row b;  // {0..N} minus the bottom row, increasing
};

// Throws std::range_error unless cutoff >= max_entry(s) and cutoff >= m.
ComplementData complements(const Symbol& s, unsigned cutoff);

// Some row order of s is componentwise dominated by the other (ties allowed).
bool has_dominated_order(const Symbol& s);

// With rows ordered so the top is dominated, tests b_h <= a_h for every h of
// the complement sequences.  Throws std::domain_error when no row order of s
// is dominated.
bool check_lemma_b(const Symbol& s, unsigned cutoff);

// Smallest valid cutoff: max(max entry, m).
unsigned default_cutoff(const Symbol& s);

// The complement-reflection above, rows kept in the symbol's own order.
Symbol tensor_sign(const Symbol& s, unsigned cutoff);

// Class-level twist at the default cutoff; an involution that preserves rank
// and degeneracy.
SymbolClass tensor_sign_class(const SymbolClass& c);

// Markers ride along unchanged.
IrrLabelD twist_label(const IrrLabelD& l);

}  // namespace asrep
