#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace asrep {

// Bijection on {1..degree}, degree <= 5.  Stored 0-based, identity-extended
// on unused points so comparison and composition stay uniform.
class Perm {
public:
    static Perm identity(unsigned degree);
    static Perm from_cycles(unsigned degree,
                            std::initializer_list<std::initializer_list<unsigned>> cycles);

    unsigned degree() const { return degree_; }
    unsigned apply(unsigned point) const { return img_[point - 1] + 1; }  // 1-based

    Perm compose(const Perm& other) const;  // this after other
    Perm inverse() const;
    unsigned order() const;
    bool commutes(const Perm& other) const;

    std::string cycle_text() const;  // "(1 2)(3 4)", identity prints "()"

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    Perm() = default;
    unsigned degree_ = 0;
    std::array<std::uint8_t, 5> img_{0, 1, 2, 3, 4};
};

// Full element set generated by closure; elements kept sorted.
class PermGroup {
public:
    PermGroup(unsigned degree, std::vector<Perm> generators);

    unsigned degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& p) const;
    bool contains_group(const PermGroup& h) const;
    bool is_abelian() const;

private:
    unsigned degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

// Requires h <= g (throws std::invalid_argument otherwise).
bool is_normal(const PermGroup& h, const PermGroup& g);

// Coset multiplication table of g/h; index 0 is the identity coset.
struct QuotientGroup {
    std::size_t order = 0;
    std::vector<std::vector<std::uint16_t>> mul;
    std::vector<unsigned> element_orders;  // sorted
    bool abelian = true;
};

// Throws std::invalid_argument when h is not a subgroup of g, and
// std::domain_error naming a violating conjugation when h is not normal.
QuotientGroup quotient(const PermGroup& g, const PermGroup& h);

// Isomorphism fingerprint: order, sorted element-order multiset, abelian flag.
// These separate every kind that occurs in the strata lists.
struct Fingerprint {
    std::size_t order = 1;
    std::vector<unsigned> element_orders{1};
    bool abelian = true;

    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PermGroup& g);
Fingerprint fingerprint(const QuotientGroup& q);

enum class Kind {
    Trivial,
    S2,
    S3,
    S4,
    S5,
    K4,      // S2 x S2
    D8,      // dihedral of order 8
    S3xS2,
    S2Cube,  // reserved label; never produced by identify
    Unknown,
};

struct GroupKind {
    Kind kind = Kind::Unknown;
    Fingerprint fp;

    std::string label() const;  // "1", "S2", ..., "unknown(order=N)"

    friend bool operator==(const GroupKind& a, const GroupKind& b) { return a.kind == b.kind && (a.kind != Kind::Unknown || a.fp == b.fp); }
};

// The eight cataloged reference kinds, in a fixed order.
const std::vector<std::pair<Kind, Fingerprint>>& reference_fingerprints();

// Unknown fingerprints are reported as such, never guessed.
GroupKind identify(const Fingerprint& fp);
GroupKind identify(const QuotientGroup& q);
GroupKind identify(const PermGroup& g);

enum class Ambient { S3, S4, S5 };

unsigned ambient_degree(Ambient a);
std::string_view ambient_name(Ambient a);
Ambient parse_ambient(std::string_view name);  // throws std::invalid_argument

struct CatalogEntry {
    std::string name;
    PermGroup group;
};

// Named subgroups with fixed generator sets:
//   S5: 1, S2=<(12)>, S3=<(123),(12)>, S4=<(1234),(12)>, S5=<(12345),(12)>,
//       S2S2=<(12),(34)>, S3S2=<(123),(12),(45)>, D8=<(1234),(13)>
//   S4, S3: the same catalog restricted to their degree.
const std::vector<CatalogEntry>& catalog(Ambient a);

// Throws std::invalid_argument for names outside the catalog of the ambient.
const PermGroup& named_subgroup(Ambient a, std::string_view name);

// The lower member of a nested pair, resolved inside the upper member.  Two
// pairs need a choice other than the standalone catalog group: S2 inside S3S2
// is the <(45)> factor (the only normal one), and S2S2 inside D8 is the Klein
// subgroup <(13)(24),(12)(34)>.
PermGroup resolve_lower(Ambient a, std::string_view upper_name, std::string_view lower_name);

GroupKind quotient_kind(Ambient a, std::string_view upper_name, std::string_view lower_name);

}  // namespace asrep
