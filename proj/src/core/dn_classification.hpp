#pragma once

#include <cstddef>
#include <vector>

#include "symbols.hpp"

namespace asrep {

/*
  Irreducible representations of W(D_n): one label per non-degenerate symbol
  class of rank n, two labels (markers I and II) per degenerate class.

  A non-degenerate class is almost special when some row order (l | u) of its
  reduced representative satisfies l_i <= u_i for every i with at least one
  strict inequality.  It is 2-special when additionally u_i <= l_{i+1} + 3 for
  i = 1, ..., m-1 in the same orientation.  Degenerate labels are both, in
  both copies.  The conditions are invariant under the shift relation, so
  checking the reduced form covers the whole class.
*/

enum class Marker { None, I, II };

struct IrrLabelD {
    SymbolClass cls;
    Marker marker;

    friend auto operator<=>(const IrrLabelD&, const IrrLabelD&) = default;
};

// Raw row conditions, exposed for the shift-invariance property tests.
bool y_condition(const Row& lam, const Row& mu);      // componentwise <=, at least one strict
bool x_gap_condition(const Row& lam, const Row& mu);  // mu_i <= lam_{i+1} + 3

// Throw std::domain_error on degenerate classes; route those through the
// label-level predicates instead.
bool in_Y(const SymbolClass& c);
bool in_X(const SymbolClass& c);

bool is_almost_special(const IrrLabelD& l);
bool is_two_special(const IrrLabelD& l);

// All partitions of k, each weakly increasing, in a fixed deterministic order.
std::vector<std::vector<unsigned>> partitions_of(unsigned k);

// One class per unordered pair of partitions {alpha, beta} with
// |alpha| + |beta| = n, sorted by representative.
std::vector<SymbolClass> classes_of_rank(unsigned n);

// Labels of rank n, sorted; degenerate classes appear as marker I then II.
std::vector<IrrLabelD> enumerate_irr(unsigned n);

struct ClassificationReport {
    unsigned rank = 0;
    std::size_t total = 0;
    std::size_t almost_special = 0;
    std::size_t two_special = 0;
    std::vector<IrrLabelD> violations;  // labels that are 2-special but not almost special
};

// Exhaustive sweep at a single rank; requires n >= 4.
ClassificationReport verify_theorem_1_2(unsigned n);

}  // namespace asrep
