#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace asrep {

using Row = std::vector<unsigned>;

/*
  A symbol is a pair of strictly increasing rows of non-negative integers of
  equal length m >= 1:

      ( l_1 < l_2 < ... < l_m )
      ( u_1 < u_2 < ... < u_m )

  Its rank is sum(l) + sum(u) - m^2 + m.  Two symbols are equivalent when they
  are related by a chain of row swaps and shifts, where the shift prepends a 0
  to each row and increments every other entry.  Equivalence classes of rank n
  index the irreducible representations of the Weyl group of type D_n, with
  degenerate classes (equal rows) counting twice.
*/
class Symbol {
public:
    Symbol(Row top, Row bottom);

    const Row& top() const { return top_; }
    const Row& bottom() const { return bottom_; }
    std::size_t length() const { return top_.size(); }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;

private:
    Row top_;
    Row bottom_;
};

// n = sum of all entries - m^2 + m; always >= 0 for a well-formed symbol.
unsigned rank(const Symbol& s);

// Largest entry in either row.
unsigned max_entry(const Symbol& s);

// Prepends (0,0) and increments the remaining entries; preserves rank.
Symbol shift_up(const Symbol& s);

// Strips leading (0,0) pairs, decrementing the rest, until the first column
// is not (0,0).  Throws std::domain_error if the symbol reduces to nothing,
// which happens exactly for rank 0.
Symbol reduce(const Symbol& s);

// True when the two rows are equal; invariant under shift and swap.
bool is_degenerate(const Symbol& s);

bool is_reduced(const Symbol& s);

// Canonical class representative: the reduced form with the lexicographically
// smaller row on top.
class SymbolClass {
public:
    const Symbol& rep() const { return rep_; }

    friend auto operator<=>(const SymbolClass&, const SymbolClass&) = default;

private:
    explicit SymbolClass(Symbol rep) : rep_(std::move(rep)) {}
    friend SymbolClass canonical(const Symbol& s);

    Symbol rep_;
};

// Throws std::domain_error for rank-0 input; idempotent otherwise.
SymbolClass canonical(const Symbol& s);

bool equivalent(const Symbol& a, const Symbol& b);

/*
  A bipartition is an ordered pair of partitions, stored smallest part first
  with zero parts stripped.  from_bipartition pads both partitions with zeros
  to a common length m and sends part a_i to a_i + (i - 1); the resulting
  symbol has rank |alpha| + |beta| and is degenerate iff alpha == beta.
*/
struct Bipartition {
    std::vector<unsigned> alpha;
    std::vector<unsigned> beta;

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

// Validates weak monotonicity and strips zero parts.
Bipartition make_bipartition(std::vector<unsigned> alpha, std::vector<unsigned> beta);

Symbol from_bipartition(const Bipartition& b);

// Inverse of from_bipartition up to zero padding.
Bipartition to_bipartition(const Symbol& s);

// Wire format: "0 1 2 3 4 / 2 3 4 5 6".
std::string to_text(const Symbol& s);

// Accepts the wire format with flexible whitespace; rejects negatives,
// non-increasing rows and unequal row lengths with ParseError.
Symbol parse_symbol(std::string_view text);

}  // namespace asrep
