// C boundary of the library.  Exceptions from the core are mapped to status
// codes here; the message of the most recent failure is kept per thread.

#include "asrep/asrep.h"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "dn_classification.hpp"
#include "errors.hpp"
#include "exceptional_tables.hpp"
#include "perm_groups.hpp"
#include "sign_twist.hpp"
#include "strata_map.hpp"
#include "symbols.hpp"
#include "verify.hpp"

struct asrep_symbol {
    asrep::Symbol value;
};

struct asrep_labels {
    std::vector<asrep::IrrLabelD> value;
};

struct asrep_report {
    asrep::VerificationReport value;
};

struct asrep_table {
    const asrep::ExcTable* table;
    std::vector<asrep::SignPairFact> facts;
    std::vector<asrep::RepLabel> exceptions;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) {
    g_last_error = what ? what : "unknown error";
}

template <typename Fn>
asrep_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return ASREP_OK;
    } catch (const asrep::ParseError& e) {
        set_error(e.what());
        return ASREP_ERR_PARSE;
    } catch (const asrep::IntegrityError& e) {
        set_error(e.what());
        return ASREP_ERR_INTEGRITY;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return ASREP_ERR_DOMAIN;
    } catch (const std::range_error& e) {
        set_error(e.what());
        return ASREP_ERR_RANGE;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return ASREP_ERR_RANGE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return ASREP_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ASREP_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return ASREP_ERR_INTERNAL;
    }
}

asrep_status require(bool ok, const char* message) {
    if (ok) return ASREP_OK;
    set_error(message);
    return ASREP_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fill_replabel(const asrep::RepLabel& l, asrep_replabel* out) {
    const std::string_view name = asrep::group_type_name(l.type);
    std::memset(out->group_type, 0, sizeof out->group_type);
    std::memcpy(out->group_type, name.data(), name.size());
    out->dim = l.dim;
    out->subscript = l.subscript;
    out->variant = l.variant;
}

void fill_fixed(char* dst, std::size_t cap, std::string_view src) {
    const std::size_t n = std::min(cap - 1, src.size());
    std::memcpy(dst, src.data(), n);
    dst[n] = '\0';
}

template <typename Fn>
asrep_status make_report(asrep_report** out, Fn&& fn) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new asrep_report{fn()}; });
}

asrep_table make_table_handle(asrep::GroupType t) {
    return asrep_table{&asrep::load_table(t), asrep::sign_twist_facts(t),
                       asrep::sign_closure_exceptions(t)};
}

}  // namespace

extern "C" {

const char* asrep_version(void) {
    return "1.0.0";
}

const char* asrep_status_name(asrep_status status) {
    switch (status) {
        case ASREP_OK: return "ok";
        case ASREP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case ASREP_ERR_PARSE: return "parse error";
        case ASREP_ERR_DOMAIN: return "domain error";
        case ASREP_ERR_RANGE: return "range error";
        case ASREP_ERR_INTEGRITY: return "integrity error";
        case ASREP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* asrep_last_error(void) {
    return g_last_error.c_str();
}

void asrep_string_free(char* s) {
    delete[] s;
}

/* ---- symbols ---- */

asrep_status asrep_symbol_parse(const char* text, asrep_symbol** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new asrep_symbol{asrep::parse_symbol(text)}; });
}

asrep_status asrep_symbol_create(const unsigned* top, const unsigned* bottom, size_t length,
                                 asrep_symbol** out) {
    if (auto st = require(top && bottom && out, "null argument")) return st;
    return guarded([&] {
        *out = new asrep_symbol{
            asrep::Symbol(asrep::Row(top, top + length), asrep::Row(bottom, bottom + length))};
    });
}

void asrep_symbol_free(asrep_symbol* s) {
    delete s;
}

asrep_status asrep_symbol_format(const asrep_symbol* s, char** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = copy_string(asrep::to_text(s->value)); });
}

size_t asrep_symbol_length(const asrep_symbol* s) {
    return s ? s->value.length() : 0;
}

asrep_status asrep_symbol_entry(const asrep_symbol* s, int row, size_t index, unsigned* out) {
    if (auto st = require(s && out, "null argument")) return st;
    if (auto st = require(row == 0 || row == 1, "row must be 0 or 1")) return st;
    return guarded([&] {
        const asrep::Row& r = row == 0 ? s->value.top() : s->value.bottom();
        *out = r.at(index);
    });
}

asrep_status asrep_symbol_rank(const asrep_symbol* s, unsigned* out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = asrep::rank(s->value); });
}

int asrep_symbol_degenerate(const asrep_symbol* s) {
    return s && asrep::is_degenerate(s->value) ? 1 : 0;
}

asrep_status asrep_symbol_shift_up(const asrep_symbol* s, asrep_symbol** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = new asrep_symbol{asrep::shift_up(s->value)}; });
}

asrep_status asrep_symbol_reduce(const asrep_symbol* s, asrep_symbol** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = new asrep_symbol{asrep::reduce(s->value)}; });
}

asrep_status asrep_symbol_canonical(const asrep_symbol* s, asrep_symbol** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = new asrep_symbol{asrep::canonical(s->value).rep()}; });
}

asrep_status asrep_symbol_tensor_sign(const asrep_symbol* s, unsigned cutoff, asrep_symbol** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] {
        const unsigned n = cutoff ? cutoff : asrep::default_cutoff(s->value);
        *out = new asrep_symbol{asrep::tensor_sign(s->value, n)};
    });
}

asrep_status asrep_class_almost_special(const asrep_symbol* s, int* out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] {
        const asrep::SymbolClass c = asrep::canonical(s->value);
        *out = (asrep::is_degenerate(c.rep()) || asrep::in_Y(c)) ? 1 : 0;
    });
}

asrep_status asrep_class_two_special(const asrep_symbol* s, int* out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] {
        const asrep::SymbolClass c = asrep::canonical(s->value);
        *out = (asrep::is_degenerate(c.rep()) || asrep::in_X(c)) ? 1 : 0;
    });
}

/* ---- classification ---- */

asrep_status asrep_classify(unsigned rank, asrep_labels** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new asrep_labels{asrep::enumerate_irr(rank)}; });
}

void asrep_labels_free(asrep_labels* labels) {
    delete labels;
}

size_t asrep_labels_count(const asrep_labels* labels) {
    return labels ? labels->value.size() : 0;
}

asrep_status asrep_labels_get(const asrep_labels* labels, size_t index, asrep_label_info* out) {
    if (auto st = require(labels && out, "null argument")) return st;
    return guarded([&] {
        const asrep::IrrLabelD& l = labels->value.at(index);
        out->marker = l.marker == asrep::Marker::None ? 0 : l.marker == asrep::Marker::I ? 1 : 2;
        out->degenerate = asrep::is_degenerate(l.cls.rep()) ? 1 : 0;
        out->almost_special = asrep::is_almost_special(l) ? 1 : 0;
        out->two_special = asrep::is_two_special(l) ? 1 : 0;
    });
}

asrep_status asrep_labels_symbol(const asrep_labels* labels, size_t index, asrep_symbol** out) {
    if (auto st = require(labels && out, "null argument")) return st;
    return guarded([&] { *out = new asrep_symbol{labels->value.at(index).cls.rep()}; });
}

/* ---- verification ---- */

asrep_status asrep_verify_theorem12(unsigned max_rank, unsigned threads, asrep_report** out) {
    return make_report(out, [&] { return asrep::verify_theorem12_sweep(max_rank, threads); });
}

asrep_status asrep_verify_lemma_b(unsigned max_rank, unsigned threads, asrep_report** out) {
    return make_report(out, [&] { return asrep::verify_lemma_b_sweep(max_rank, threads); });
}

asrep_status asrep_verify_sign_closure(unsigned max_rank, unsigned threads, asrep_report** out) {
    return make_report(out, [&] { return asrep::verify_sign_closure_sweep(max_rank, threads); });
}

asrep_status asrep_verify_tables(asrep_report** out) {
    return make_report(out, [] { return asrep::verify_tables_check(); });
}

asrep_status asrep_verify_strata(asrep_report** out) {
    return make_report(out, [] { return asrep::verify_strata_check(); });
}

void asrep_report_free(asrep_report* report) {
    delete report;
}

const char* asrep_report_name(const asrep_report* report) {
    return report ? report->value.name.c_str() : "";
}

const char* asrep_report_params(const asrep_report* report) {
    return report ? report->value.params.c_str() : "";
}

uint64_t asrep_report_instances(const asrep_report* report) {
    return report ? report->value.instances : 0;
}

size_t asrep_report_violation_count(const asrep_report* report) {
    return report ? report->value.violations.size() : 0;
}

const char* asrep_report_violation(const asrep_report* report, size_t index) {
    if (!report || index >= report->value.violations.size()) return "";
    return report->value.violations[index].c_str();
}

double asrep_report_wall_ms(const asrep_report* report) {
    return report ? report->value.wall_ms : 0.0;
}

/* ---- tables ---- */

asrep_status asrep_table_load(const char* type, const asrep_table** out) {
    if (auto st = require(type && out, "null argument")) return st;
    return guarded([&] {
        const asrep::GroupType t = asrep::parse_group_type(type);
        if (t != asrep::GroupType::E6 && t != asrep::GroupType::E7 && t != asrep::GroupType::E8)
            throw std::domain_error("no almost-special table for type " + std::string(type));
        static const asrep_table e6 = make_table_handle(asrep::GroupType::E6);
        static const asrep_table e7 = make_table_handle(asrep::GroupType::E7);
        static const asrep_table e8 = make_table_handle(asrep::GroupType::E8);
        *out = t == asrep::GroupType::E6 ? &e6 : t == asrep::GroupType::E7 ? &e7 : &e8;
    });
}

size_t asrep_table_row_count(const asrep_table* table) {
    return table ? table->table->rows.size() : 0;
}

size_t asrep_table_row_size(const asrep_table* table, size_t row) {
    if (!table || row >= table->table->rows.size()) return 0;
    return table->table->rows[row].members.size();
}

asrep_status asrep_table_member(const asrep_table* table, size_t row, size_t index,
                                asrep_replabel* out, int* two_special) {
    if (auto st = require(table && out, "null argument")) return st;
    return guarded([&] {
        const asrep::TableEntry& e = table->table->rows.at(row).members.at(index);
        fill_replabel(e.label, out);
        if (two_special) *two_special = e.two_special ? 1 : 0;
    });
}

asrep_status asrep_table_diff(const asrep_table* table, asrep_replabel* out, size_t capacity,
                              size_t* count) {
    if (auto st = require(table && count, "null argument")) return st;
    return guarded([&] {
        const auto diff = asrep::diff_ca_cs2(table->table->type);
        *count = diff.size();
        if (diff.size() > capacity && capacity > 0)
            throw std::range_error("difference set does not fit the caller's buffer");
        if (out)
            for (std::size_t i = 0; i < diff.size() && i < capacity; ++i)
                fill_replabel(diff[i], &out[i]);
    });
}

size_t asrep_table_sign_fact_count(const asrep_table* table) {
    return table ? table->facts.size() : 0;
}

asrep_status asrep_table_sign_fact(const asrep_table* table, size_t index, asrep_replabel* left,
                                   asrep_replabel* right, int* provenance) {
    if (auto st = require(table && left && right, "null argument")) return st;
    return guarded([&] {
        const asrep::SignPairFact& f = table->facts.at(index);
        fill_replabel(f.left, left);
        fill_replabel(f.right, right);
        if (provenance) *provenance = static_cast<int>(f.provenance);
    });
}

size_t asrep_table_exception_count(const asrep_table* table) {
    return table ? table->exceptions.size() : 0;
}

asrep_status asrep_table_exception(const asrep_table* table, size_t index, asrep_replabel* out) {
    if (auto st = require(table && out, "null argument")) return st;
    return guarded([&] { fill_replabel(table->exceptions.at(index), out); });
}

/* ---- groups ---- */

asrep_status asrep_group_order(const char* ambient, const char* name, unsigned* out) {
    if (auto st = require(ambient && name && out, "null argument")) return st;
    return guarded([&] {
        const asrep::Ambient a = asrep::parse_ambient(ambient);
        *out = static_cast<unsigned>(asrep::named_subgroup(a, name).order());
    });
}

asrep_status asrep_group_quotient_kind(const char* ambient, const char* upper, const char* lower,
                                       char** out_kind) {
    if (auto st = require(ambient && upper && lower && out_kind, "null argument")) return st;
    return guarded([&] {
        const asrep::Ambient a = asrep::parse_ambient(ambient);
        *out_kind = copy_string(asrep::quotient_kind(a, upper, lower).label());
    });
}

asrep_status asrep_catalog_count(const char* ambient, size_t* out) {
    if (auto st = require(ambient && out, "null argument")) return st;
    return guarded([&] { *out = asrep::catalog(asrep::parse_ambient(ambient)).size(); });
}

asrep_status asrep_catalog_entry(const char* ambient, size_t index, char** name,
                                 char** generators) {
    if (auto st = require(ambient && name && generators, "null argument")) return st;
    return guarded([&] {
        const auto& entries = asrep::catalog(asrep::parse_ambient(ambient));
        const asrep::CatalogEntry& e = entries.at(index);
        std::string gens;
        for (const asrep::Perm& g : e.group.generators()) {
            if (!gens.empty()) gens += ", ";
            gens += g.cycle_text();
        }
        if (gens.empty()) gens = "()";
        *name = copy_string(e.name);
        *generators = copy_string(gens);
    });
}

/* ---- strata ---- */

asrep_status asrep_strata_count(const char* table, size_t* out) {
    if (auto st = require(table && out, "null argument")) return st;
    return guarded([&] {
        *out = asrep::strata_table(asrep::parse_strata_table(table)).size();
    });
}

asrep_status asrep_strata_entry(const char* table, size_t index, asrep_stratum* out) {
    if (auto st = require(table && out, "null argument")) return st;
    return guarded([&] {
        const auto& entries = asrep::strata_table(asrep::parse_strata_table(table));
        const asrep::StratumEntry& e = entries.at(index);
        fill_replabel(e.rep, &out->rep);
        fill_fixed(out->upper, sizeof out->upper, e.upper_name);
        fill_fixed(out->lower, sizeof out->lower, e.lower_name);
        fill_fixed(out->claimed, sizeof out->claimed, asrep::GroupKind{e.claimed, {}}.label());
        out->unipotent = e.has_unipotent_class ? 1 : 0;
        try {
            const asrep::GroupKind kind =
                asrep::quotient_kind(e.family_group, e.upper_name, e.lower_name);
            fill_fixed(out->recomputed, sizeof out->recomputed, kind.label());
            out->ok = kind.kind == e.claimed ? 1 : 0;
        } catch (const std::exception&) {
            fill_fixed(out->recomputed, sizeof out->recomputed, "error");
            out->ok = 0;
        }
    });
}

} /* extern "C" */
