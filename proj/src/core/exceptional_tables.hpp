#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace asrep {

enum class GroupType { E6, E7, E8, F4, G2 };

std::string_view group_type_name(GroupType t);
GroupType parse_group_type(std::string_view name);  // throws std::invalid_argument

// A representation label "dim_subscript"; variant indexes repeated
// (dim, subscript) pairs in listing order, starting at 1.
struct RepLabel {
    GroupType type = GroupType::E6;
    unsigned dim = 0;
    unsigned subscript = 0;
    unsigned variant = 1;

    friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

std::string to_text(const RepLabel& l);  // "15_7"

struct TableEntry {
    RepLabel label;
    bool two_special = true;  // false exactly for the ((...)) entries
};

struct FamilyRow {
    std::vector<TableEntry> members;
};

// The almost-special tables for E6/E7/E8: one family per row, in printed
// order.  Every listed member is almost special; the unmarked ones are the
// 2-special objects.
struct ExcTable {
    GroupType type = GroupType::E6;
    std::vector<FamilyRow> rows;

    bool contains(unsigned dim, unsigned subscript) const;
    const TableEntry* find(unsigned dim, unsigned subscript) const;
};

// Raw embedded transcription: one row per line, members comma-separated as
// dim_subscript, non-2-special members wrapped in ((...)).
std::string_view table_text(GroupType t);
std::uint64_t table_digest(GroupType t);  // frozen expected digest
std::uint64_t fnv1a64(std::string_view data);

ExcTable parse_table_text(GroupType t, std::string_view text);

// Only E6/E7/E8 have tables; F4/G2 raise std::domain_error.  The embedded
// text is digest-checked once and the parsed table cached.
const ExcTable& load_table(GroupType t);

std::vector<RepLabel> almost_special_set(GroupType t);
std::vector<RepLabel> two_special_set(GroupType t);

// Almost special minus 2-special, validated to have size 0/1/2 for E6/E7/E8.
std::vector<RepLabel> diff_ca_cs2(GroupType t);

enum class Provenance { Recorded, Forced, External };

// A pair exchanged by tensoring with sign.  Only directly supported pairs
// are kept: the three recorded crossing pairs (15_28/15_7, 50_56/50_8,
// 700_28/700_16) and the forced trivial/sign pairs 1_0/1_N.  External
// entries are a slot for data imported from elsewhere and take no part in
// any check.
struct SignPairFact {
    RepLabel left;   // 2-special endpoint
    RepLabel right;  // partner
    Provenance provenance = Provenance::Recorded;
};

std::vector<SignPairFact> sign_twist_facts(GroupType t);

// Members whose sign twist leaves the almost-special set entirely: the
// dim-512 object in E7 and the dim-4096 objects in E8.
std::vector<RepLabel> sign_closure_exceptions(GroupType t);

struct TableCheckReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Cross-checks the recorded facts against the table: endpoints present,
// dimensions matching, crossing pairs split as 2-special vs not, exception
// members alone in their family at their dimension.
TableCheckReport check_sign_closure(GroupType t);

}  // namespace asrep
