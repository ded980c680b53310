#include "exceptional_tables.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace asrep {

std::string_view group_type_name(GroupType t) {
    switch (t) {
        case GroupType::E6: return "E6";
        case GroupType::E7: return "E7";
        case GroupType::E8: return "E8";
        case GroupType::F4: return "F4";
        case GroupType::G2: return "G2";
    }
    throw std::invalid_argument("bad group type");
}

GroupType parse_group_type(std::string_view name) {
    if (name == "E6") return GroupType::E6;
    if (name == "E7") return GroupType::E7;
    if (name == "E8") return GroupType::E8;
    if (name == "F4") return GroupType::F4;
    if (name == "G2") return GroupType::G2;
    throw std::invalid_argument("unknown group type '" + std::string(name) + "'");
}

std::string to_text(const RepLabel& l) {
    return std::to_string(l.dim) + "_" + std::to_string(l.subscript);
}

bool ExcTable::contains(unsigned dim, unsigned subscript) const {
    return find(dim, subscript) != nullptr;
}

const TableEntry* ExcTable::find(unsigned dim, unsigned subscript) const {
    for (const FamilyRow& row : rows)
        for (const TableEntry& e : row.members)
            if (e.label.dim == dim && e.label.subscript == subscript) return &e;
    return nullptr;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

unsigned parse_uint(std::string_view tok, std::string_view what) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad " + std::string(what) + " '" + std::string(tok) + "' in table data");
    return v;
}

}  // namespace

ExcTable parse_table_text(GroupType t, std::string_view text) {
    ExcTable table;
    table.type = t;
    std::map<std::pair<unsigned, unsigned>, unsigned> seen;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        FamilyRow row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string_view::npos) comma = line.size();
            std::string_view tok = line.substr(start, comma - start);
            start = comma + 1;
            bool two_special = true;
            if (tok.size() >= 4 && tok.substr(0, 2) == "((" && tok.substr(tok.size() - 2) == "))") {
                two_special = false;
                tok = tok.substr(2, tok.size() - 4);
            }
            const std::size_t us = tok.find('_');
            if (us == std::string_view::npos)
                throw ParseError("table member '" + std::string(tok) + "' is not dim_subscript");
            RepLabel label;
            label.type = t;
            label.dim = parse_uint(tok.substr(0, us), "dimension");
            label.subscript = parse_uint(tok.substr(us + 1), "subscript");
            label.variant = ++seen[{label.dim, label.subscript}];
            row.members.push_back(TableEntry{label, two_special});
            if (comma == line.size()) break;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

const ExcTable& load_table(GroupType t) {
    if (t != GroupType::E6 && t != GroupType::E7 && t != GroupType::E8)
        throw std::domain_error("no almost-special table for type " + std::string(group_type_name(t)));
    static const auto load = [](GroupType type) {
        const std::string_view text = table_text(type);
        if (fnv1a64(text) != table_digest(type))
            throw IntegrityError("embedded table for " + std::string(group_type_name(type)) +
                                 " does not match its digest");
        return parse_table_text(type, text);
    };
    static const ExcTable e6 = load(GroupType::E6);
    static const ExcTable e7 = load(GroupType::E7);
    static const ExcTable e8 = load(GroupType::E8);
    switch (t) {
        case GroupType::E6: return e6;
        case GroupType::E7: return e7;
        default: return e8;
    }
}

std::vector<RepLabel> almost_special_set(GroupType t) {
    std::vector<RepLabel> out;
    for (const FamilyRow& row : load_table(t).rows)
        for (const TableEntry& e : row.members) out.push_back(e.label);
    return out;
}

std::vector<RepLabel> two_special_set(GroupType t) {
    std::vector<RepLabel> out;
    for (const FamilyRow& row : load_table(t).rows)
        for (const TableEntry& e : row.members)
            if (e.two_special) out.push_back(e.label);
    return out;
}

std::vector<RepLabel> diff_ca_cs2(GroupType t) {
    std::vector<RepLabel> out;
    for (const FamilyRow& row : load_table(t).rows)
        for (const TableEntry& e : row.members)
            if (!e.two_special) out.push_back(e.label);
    const std::size_t expected = t == GroupType::E6 ? 0 : t == GroupType::E7 ? 1 : 2;
    if (out.size() != expected)
        throw IntegrityError("difference set for " + std::string(group_type_name(t)) + " has " +
                             std::to_string(out.size()) + " members, expected " +
                             std::to_string(expected));
    return out;
}

namespace {

RepLabel table_label(GroupType t, unsigned dim, unsigned subscript) {
    const TableEntry* e = load_table(t).find(dim, subscript);
    if (!e)
        throw IntegrityError("label " + std::to_string(dim) + "_" + std::to_string(subscript) +
                             " missing from the " + std::string(group_type_name(t)) + " table");
    return e->label;
}

}  // namespace

std::vector<SignPairFact> sign_twist_facts(GroupType t) {
    std::vector<SignPairFact> out;
    switch (t) {
        case GroupType::E6:
            out.push_back({table_label(t, 1, 0), table_label(t, 1, 36), Provenance::Forced});
            break;
        case GroupType::E7:
            out.push_back({table_label(t, 15, 28), table_label(t, 15, 7), Provenance::Recorded});
            out.push_back({table_label(t, 1, 0), table_label(t, 1, 63), Provenance::Forced});
            break;
        case GroupType::E8:
            out.push_back({table_label(t, 50, 56), table_label(t, 50, 8), Provenance::Recorded});
            out.push_back({table_label(t, 700, 28), table_label(t, 700, 16), Provenance::Recorded});
            out.push_back({table_label(t, 1, 0), table_label(t, 1, 120), Provenance::Forced});
            break;
        default:
            throw std::domain_error("no sign-twist facts for type " + std::string(group_type_name(t)));
    }
    return out;
}

std::vector<RepLabel> sign_closure_exceptions(GroupType t) {
    switch (t) {
        case GroupType::E6: return {};
        case GroupType::E7: return {table_label(t, 512, 11)};
        case GroupType::E8: return {table_label(t, 4096, 11), table_label(t, 4096, 26)};
        default:
            throw std::domain_error("no sign-twist facts for type " + std::string(group_type_name(t)));
    }
}

TableCheckReport check_sign_closure(GroupType t) {
    TableCheckReport rep;
    const ExcTable& table = load_table(t);

    for (const SignPairFact& fact : sign_twist_facts(t)) {
        if (fact.provenance == Provenance::External) continue;
        const TableEntry* left = table.find(fact.left.dim, fact.left.subscript);
        const TableEntry* right = table.find(fact.right.dim, fact.right.subscript);
        if (!left || !right) {
            rep.problems.push_back("pair " + to_text(fact.left) + " / " + to_text(fact.right) +
                                   " has an endpoint outside the table");
            continue;
        }
        if (fact.left.dim != fact.right.dim)
            rep.problems.push_back("pair " + to_text(fact.left) + " / " + to_text(fact.right) +
                                   " mixes dimensions");
        if (fact.provenance == Provenance::Recorded) {
            if (!left->two_special)
                rep.problems.push_back("crossing pair left endpoint " + to_text(fact.left) +
                                       " should be 2-special");
            if (right->two_special)
                rep.problems.push_back("crossing pair right endpoint " + to_text(fact.right) +
                                       " should not be 2-special");
        }
    }

    for (const RepLabel& exc : sign_closure_exceptions(t)) {
        const FamilyRow* home = nullptr;
        for (const FamilyRow& row : table.rows)
            for (const TableEntry& e : row.members)
                if (e.label == exc) home = &row;
        if (!home) {
            rep.problems.push_back("exception member " + to_text(exc) + " missing from the table");
            continue;
        }
        for (const TableEntry& e : home->members)
            if (!(e.label == exc) && e.label.dim == exc.dim)
                rep.problems.push_back("exception member " + to_text(exc) +
                                       " shares its dimension with a family partner");
    }

    // Every marked dimension must recur on a 2-special entry of the same table.
    for (const RepLabel& d : diff_ca_cs2(t)) {
        bool partnered = false;
        for (const RepLabel& s : two_special_set(t))
            if (s.dim == d.dim) partnered = true;
        if (!partnered)
            rep.problems.push_back("marked member " + to_text(d) +
                                   " has no 2-special partner of its dimension");
    }
    return rep;
}

}  // namespace asrep
