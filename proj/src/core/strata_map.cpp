#include "strata_map.hpp"

#include <stdexcept>

namespace asrep {

std::string_view strata_table_name(StrataTable t) {
    switch (t) {
        case StrataTable::E8_S5: return "E8_S5";
        case StrataTable::F4_S4: return "F4_S4";
        case StrataTable::G2_S3: return "G2_S3";
    }
    throw std::invalid_argument("bad strata table");
}

StrataTable parse_strata_table(std::string_view name) {
    if (name == "E8_S5") return StrataTable::E8_S5;
    if (name == "F4_S4") return StrataTable::F4_S4;
    if (name == "G2_S3") return StrataTable::G2_S3;
    throw std::invalid_argument("unknown strata table '" + std::string(name) +
                                "' (expected E8_S5, F4_S4 or G2_S3)");
}

namespace {

StratumEntry entry(GroupType g, unsigned dim, unsigned sub, unsigned variant, Ambient amb,
                   const char* upper, const char* lower, Kind kind, bool unip) {
    return StratumEntry{RepLabel{g, dim, sub, variant}, amb, upper, lower, kind, unip};
}

std::vector<StratumEntry> build(StrataTable t) {
    switch (t) {
        case StrataTable::E8_S5:
            return {
                entry(GroupType::E8, 4480, 16, 1, Ambient::S5, "S5", "1", Kind::S5, true),
                entry(GroupType::E8, 7168, 17, 1, Ambient::S5, "S3S2", "S2", Kind::S3, true),
                entry(GroupType::E8, 4200, 18, 1, Ambient::S5, "D8", "S2S2", Kind::S2, true),
                entry(GroupType::E8, 3150, 18, 1, Ambient::S5, "S3S2", "S3", Kind::S2, true),
                entry(GroupType::E8, 2016, 19, 1, Ambient::S5, "S3S2", "S3S2", Kind::Trivial, true),
                entry(GroupType::E8, 1344, 19, 1, Ambient::S5, "S4", "S4", Kind::Trivial, true),
                entry(GroupType::E8, 420, 20, 1, Ambient::S5, "S5", "S5", Kind::Trivial, true),
                entry(GroupType::E8, 168, 24, 1, Ambient::S5, "D8", "D8", Kind::Trivial, false),
            };
        case StrataTable::F4_S4:
            return {
                entry(GroupType::F4, 12, 4, 1, Ambient::S4, "S4", "1", Kind::S4, true),
                entry(GroupType::F4, 16, 5, 1, Ambient::S4, "S2S2", "S2", Kind::S2, true),
                entry(GroupType::F4, 9, 6, 1, Ambient::S4, "D8", "S2S2", Kind::S2, true),
                entry(GroupType::F4, 6, 6, 1, Ambient::S4, "S3", "S3", Kind::Trivial, true),
                entry(GroupType::F4, 4, 7, 1, Ambient::S4, "S2S2", "S2", Kind::S2, true),
                entry(GroupType::F4, 9, 6, 2, Ambient::S4, "S3", "1", Kind::S3, false),
                entry(GroupType::F4, 4, 7, 2, Ambient::S4, "S4", "S4", Kind::Trivial, false),
                entry(GroupType::F4, 4, 8, 1, Ambient::S4, "S2S2", "S2S2", Kind::Trivial, false),
            };
        case StrataTable::G2_S3:
            return {
                entry(GroupType::G2, 2, 1, 1, Ambient::S3, "S3", "1", Kind::S3, true),
                entry(GroupType::G2, 2, 2, 1, Ambient::S3, "S2", "S2", Kind::Trivial, true),
                entry(GroupType::G2, 1, 3, 1, Ambient::S3, "S3", "S3", Kind::Trivial, true),
                entry(GroupType::G2, 1, 3, 2, Ambient::S3, "S2", "1", Kind::S2, false),
            };
    }
    throw std::invalid_argument("bad strata table");
}

}  // namespace

const std::vector<StratumEntry>& strata_table(StrataTable t) {
    static const std::vector<StratumEntry> e8 = build(StrataTable::E8_S5);
    static const std::vector<StratumEntry> f4 = build(StrataTable::F4_S4);
    static const std::vector<StratumEntry> g2 = build(StrataTable::G2_S3);
    switch (t) {
        case StrataTable::E8_S5: return e8;
        case StrataTable::F4_S4: return f4;
        case StrataTable::G2_S3: return g2;
    }
    throw std::invalid_argument("bad strata table");
}

GroupKind gamma_sigma(const StratumEntry& entry) {
    GroupKind kind;
    try {
        kind = quotient_kind(entry.family_group, entry.upper_name, entry.lower_name);
    } catch (const std::exception& e) {
        throw IntegrityError("stratum " + to_text(entry.rep) + ": " + e.what());
    }
    if (kind.kind != entry.claimed)
        throw IntegrityError("stratum " + to_text(entry.rep) + ": " + entry.upper_name + "/" +
                             entry.lower_name + " recomputes to " + kind.label() + ", expected " +
                             GroupKind{entry.claimed, {}}.label());
    return kind;
}

GroupKind special_stratum_kind(StrataTable t) {
    for (const StratumEntry& e : strata_table(t)) {
        if (e.lower_name == "1" && e.upper_name == ambient_name(e.family_group))
            return gamma_sigma(e);
    }
    throw IntegrityError("strata table " + std::string(strata_table_name(t)) +
                         " has no (1, full group) entry");
}

}  // namespace asrep
