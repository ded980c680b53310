#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exceptional_tables.hpp"
#include "perm_groups.hpp"

namespace asrep {

/*
  The strata lists for the families with component group S5 (type E8),
  S4 (type F4) and S3 (type G2).  Each stratum is identified by the
  representation attached to it, and carries a nested pair H normal in H' of
  subgroups of the family group; the attached finite group is H'/H.  The
  stratum of the special unipotent class is the one with the pair (1, full
  group).  The flag records which strata contain a unipotent class over the
  complex numbers.
*/

enum class StrataTable { E8_S5, F4_S4, G2_S3 };

std::string_view strata_table_name(StrataTable t);
StrataTable parse_strata_table(std::string_view name);  // throws std::invalid_argument

struct StratumEntry {
    RepLabel rep;
    Ambient family_group;
    std::string upper_name;  // H'
    std::string lower_name;  // H
    Kind claimed;
    bool has_unipotent_class;
};

const std::vector<StratumEntry>& strata_table(StrataTable t);

// Recomputes H'/H through the permutation-group engine and checks it against
// the stored kind; mismatch or normality failure raises IntegrityError.
GroupKind gamma_sigma(const StratumEntry& entry);

// The group attached to the stratum of the special unipotent class: the full
// family group.
GroupKind special_stratum_kind(StrataTable t);

}  // namespace asrep
