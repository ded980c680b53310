// Command-line front end.  Talks to the library exclusively through the C
// interface in asrep/asrep.h.
//
// Exit codes: 0 success, 1 verification failure or computation error,
// 2 usage or input error.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asrep/asrep.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct SymbolDeleter {
    void operator()(asrep_symbol* s) const { asrep_symbol_free(s); }
};
using SymbolPtr = std::unique_ptr<asrep_symbol, SymbolDeleter>;

struct StringDeleter {
    void operator()(char* s) const { asrep_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(asrep_status status) {
    std::fprintf(stderr, "error: %s\n", asrep_last_error());
    const bool usage = status == ASREP_ERR_PARSE || status == ASREP_ERR_INVALID_ARGUMENT;
    std::exit(usage ? kExitUsage : kExitFailure);
}

void check(asrep_status status) {
    if (status != ASREP_OK) die(status);
}

std::string format_symbol(const asrep_symbol* s) {
    char* text = nullptr;
    check(asrep_symbol_format(s, &text));
    StringPtr holder(text);
    return std::string(text);
}

json symbol_json(const asrep_symbol* s) {
    json top = json::array(), bottom = json::array();
    const size_t m = asrep_symbol_length(s);
    for (size_t i = 0; i < m; ++i) {
        unsigned v = 0;
        check(asrep_symbol_entry(s, 0, i, &v));
        top.push_back(v);
        check(asrep_symbol_entry(s, 1, i, &v));
        bottom.push_back(v);
    }
    return json{{"top", std::move(top)}, {"bottom", std::move(bottom)}};
}

std::string label_to_text(const asrep_replabel& l) {
    return std::to_string(l.dim) + "_" + std::to_string(l.subscript);
}

json label_to_json(const asrep_replabel& l) {
    return json{{"type", l.group_type},
                {"dim", l.dim},
                {"subscript", l.subscript},
                {"variant", l.variant}};
}

SymbolPtr parse_symbol_arg(const std::string& text) {
    asrep_symbol* s = nullptr;
    check(asrep_symbol_parse(text.c_str(), &s));
    return SymbolPtr(s);
}

int cmd_classify(unsigned rank, bool as_json) {
    asrep_labels* labels = nullptr;
    check(asrep_classify(rank, &labels));
    const size_t count = asrep_labels_count(labels);
    if (!as_json)
        std::printf("%-28s %-6s %-10s %-14s %s\n", "symbol", "marker", "degenerate",
                    "almost_special", "two_special");
    for (size_t i = 0; i < count; ++i) {
        asrep_label_info info{};
        check(asrep_labels_get(labels, i, &info));
        asrep_symbol* raw = nullptr;
        check(asrep_labels_symbol(labels, i, &raw));
        SymbolPtr sym(raw);
        const std::string text = format_symbol(sym.get());
        const char* marker = info.marker == 0 ? "-" : info.marker == 1 ? "I" : "II";
        if (as_json) {
            json doc{{"symbol", symbol_json(sym.get())},
                     {"degenerate", info.degenerate != 0},
                     {"marker", info.marker == 0 ? json(nullptr) : json(marker)},
                     {"almost_special", info.almost_special != 0},
                     {"two_special", info.two_special != 0}};
            std::printf("%s\n", doc.dump().c_str());
        } else {
            std::printf("%-28s %-6s %-10s %-14s %s\n", text.c_str(), marker,
                        info.degenerate ? "yes" : "no", info.almost_special ? "yes" : "no",
                        info.two_special ? "yes" : "no");
        }
    }
    asrep_labels_free(labels);
    return kExitOk;
}

int cmd_twist(const std::string& symbol_text, unsigned cutoff, bool as_json) {
    SymbolPtr s = parse_symbol_arg(symbol_text);
    asrep_symbol* twisted = nullptr;
    check(asrep_symbol_tensor_sign(s.get(), cutoff, &twisted));
    SymbolPtr t(twisted);
    if (as_json) {
        json doc{{"input", symbol_json(s.get())}, {"twist", symbol_json(t.get())}};
        std::printf("%s\n", doc.dump().c_str());
    } else {
        std::printf("%s\n", format_symbol(t.get()).c_str());
    }
    return kExitOk;
}

int report_result(asrep_report* report, bool as_json) {
    const size_t violations = asrep_report_violation_count(report);
    if (as_json) {
        json doc{{"check", asrep_report_name(report)},
                 {"params", asrep_report_params(report)},
                 {"instances", asrep_report_instances(report)},
                 {"violations", json::array()},
                 {"pass", violations == 0},
                 {"wall_ms", asrep_report_wall_ms(report)}};
        for (size_t i = 0; i < violations; ++i)
            doc["violations"].push_back(asrep_report_violation(report, i));
        std::printf("%s\n", doc.dump().c_str());
    } else {
        std::printf("%s: %s (%s, %llu instances checked, %zu violations, %.1f ms)\n",
                    asrep_report_name(report), violations == 0 ? "PASS" : "FAIL",
                    asrep_report_params(report),
                    static_cast<unsigned long long>(asrep_report_instances(report)), violations,
                    asrep_report_wall_ms(report));
        for (size_t i = 0; i < violations; ++i)
            std::printf("  violation: %s\n", asrep_report_violation(report, i));
    }
    const int code = violations == 0 ? kExitOk : kExitFailure;
    asrep_report_free(report);
    return code;
}

const asrep_table* load_table_arg(const std::string& type) {
    const asrep_table* table = nullptr;
    check(asrep_table_load(type.c_str(), &table));
    return table;
}

int cmd_table(const std::string& type, bool as_json) {
    const asrep_table* table = load_table_arg(type);
    const size_t rows = asrep_table_row_count(table);
    for (size_t r = 0; r < rows; ++r) {
        const size_t size = asrep_table_row_size(table, r);
        json members = json::array();
        std::string line;
        for (size_t j = 0; j < size; ++j) {
            asrep_replabel label{};
            int two_special = 0;
            check(asrep_table_member(table, r, j, &label, &two_special));
            if (as_json) {
                json m = label_to_json(label);
                m["two_special"] = two_special != 0;
                members.push_back(std::move(m));
            } else {
                if (!line.empty()) line += ",";
                line += two_special ? label_to_text(label) : "((" + label_to_text(label) + "))";
            }
        }
        if (as_json) {
            json doc{{"row", r}, {"members", std::move(members)}};
            std::printf("%s\n", doc.dump().c_str());
        } else {
            std::printf("%s\n", line.c_str());
        }
    }
    return kExitOk;
}

int cmd_table_diff(const std::string& type, bool as_json) {
    const asrep_table* table = load_table_arg(type);
    asrep_replabel buf[8]{};
    size_t count = 0;
    check(asrep_table_diff(table, buf, 8, &count));
    if (as_json) {
        json doc{{"type", type}, {"diff", json::array()}};
        for (size_t i = 0; i < count; ++i) doc["diff"].push_back(label_to_text(buf[i]));
        std::printf("%s\n", doc.dump().c_str());
    } else {
        std::string line;
        for (size_t i = 0; i < count; ++i) {
            if (!line.empty()) line += " ";
            line += label_to_text(buf[i]);
        }
        if (!line.empty()) std::printf("%s\n", line.c_str());
    }
    return kExitOk;
}

int cmd_strata(const std::string& table, bool as_json) {
    size_t count = 0;
    check(asrep_strata_count(table.c_str(), &count));
    bool all_ok = true;
    for (size_t i = 0; i < count; ++i) {
        asrep_stratum entry{};
        check(asrep_strata_entry(table.c_str(), i, &entry));
        all_ok = all_ok && entry.ok != 0;
        if (as_json) {
            json doc{{"rep", label_to_json(entry.rep)},
                     {"upper", entry.upper},
                     {"lower", entry.lower},
                     {"claimed", entry.claimed},
                     {"recomputed", entry.recomputed},
                     {"unipotent", entry.unipotent != 0},
                     {"ok", entry.ok != 0}};
            std::printf("%s\n", doc.dump().c_str());
        } else {
            const std::string pair = std::string(entry.upper) + "/" + entry.lower;
            std::printf("%-10s %-12s %-8s unipotent=%-4s %s\n", label_to_text(entry.rep).c_str(),
                        pair.c_str(), entry.recomputed, entry.unipotent ? "yes" : "no",
                        entry.ok ? "ok" : "MISMATCH");
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

int cmd_group_quotient(const std::string& ambient, const std::string& upper,
                       const std::string& lower, bool as_json) {
    char* kind = nullptr;
    check(asrep_group_quotient_kind(ambient.c_str(), upper.c_str(), lower.c_str(), &kind));
    StringPtr holder(kind);
    if (as_json) {
        json doc{{"ambient", ambient}, {"upper", upper}, {"lower", lower}, {"kind", kind}};
        std::printf("%s\n", doc.dump().c_str());
    } else {
        std::printf("%s\n", kind);
    }
    return kExitOk;
}

int cmd_group_catalog(const std::string& ambient, bool as_json) {
    const std::vector<std::string> ambients =
        ambient.empty() ? std::vector<std::string>{"S3", "S4", "S5"}
                        : std::vector<std::string>{ambient};
    for (const std::string& a : ambients) {
        size_t count = 0;
        check(asrep_catalog_count(a.c_str(), &count));
        for (size_t i = 0; i < count; ++i) {
            char* name = nullptr;
            char* gens = nullptr;
            check(asrep_catalog_entry(a.c_str(), i, &name, &gens));
            StringPtr name_holder(name), gens_holder(gens);
            unsigned order = 0;
            check(asrep_group_order(a.c_str(), name, &order));
            if (as_json) {
                json doc{{"ambient", a}, {"name", name}, {"order", order}, {"generators", gens}};
                std::printf("%s\n", doc.dump().c_str());
            } else {
                std::printf("%-4s %-6s order %-4u < %s >\n", a.c_str(), name, order, gens);
            }
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbol calculus, classification sweeps and strata groups"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON document per line");

    // let --json appear after any subcommand
    auto passthrough = [](CLI::App* sub) {
        sub->fallthrough();
        return sub;
    };

    // classify
    auto* classify = passthrough(app.add_subcommand("classify", "list the labels of one rank"));
    unsigned rank = 0;
    classify->add_option("--rank", rank, "rank n of W(D_n)")->required()->check(CLI::PositiveNumber);

    // twist
    auto* twist = passthrough(app.add_subcommand("twist", "apply the sign twist to a symbol"));
    std::string symbol_text;
    unsigned cutoff = 0;
    twist->add_option("--symbol", symbol_text, "symbol, e.g. \"0 1 2 3 4 / 2 3 4 5 6\"")->required();
    twist->add_option("--cutoff", cutoff, "complement cutoff (default: smallest valid)");

    // verify
    auto* verify = passthrough(app.add_subcommand("verify", "run an exhaustive check"));
    verify->require_subcommand(1);
    unsigned max_rank_t12 = 24, max_rank_lb = 12, max_rank_sc = 20;
    unsigned threads = 1;
    auto* v_t12 = passthrough(verify->add_subcommand("theorem12", "2-special implies almost special"));
    v_t12->add_option("--max-rank", max_rank_t12, "largest rank to sweep")->check(CLI::Range(4u, 64u));
    v_t12->add_option("--threads", threads, "worker threads");
    auto* v_lb = passthrough(verify->add_subcommand("lemma-b", "complement domination"));
    v_lb->add_option("--max-rank", max_rank_lb, "largest rank to sweep")->check(CLI::PositiveNumber);
    v_lb->add_option("--threads", threads, "worker threads");
    auto* v_sc = passthrough(verify->add_subcommand("sign-closure", "almost-special set closed under twist"));
    v_sc->add_option("--max-rank", max_rank_sc, "largest rank to sweep")->check(CLI::Range(4u, 64u));
    v_sc->add_option("--threads", threads, "worker threads");
    auto* v_tab = passthrough(verify->add_subcommand("tables", "embedded table integrity and sign pairs"));
    auto* v_str = passthrough(verify->add_subcommand("strata", "strata quotients recompute correctly"));

    // table
    auto* table = passthrough(app.add_subcommand("table", "print an almost-special table"));
    std::string type;
    table->add_option("--type", type, "E6, E7 or E8");
    auto* table_diff = passthrough(table->add_subcommand("diff", "members that are not 2-special"));
    table_diff->add_option("--type", type, "E6, E7 or E8");

    // strata
    auto* strata = passthrough(app.add_subcommand("strata", "print a strata table with recomputed groups"));
    std::string strata_table;
    strata->add_option("--table", strata_table, "E8_S5, F4_S4 or G2_S3")->required();

    // group
    auto* group = passthrough(app.add_subcommand("group", "permutation-group queries"));
    group->require_subcommand(1);
    auto* g_quot = passthrough(group->add_subcommand("quotient", "identify H'/H"));
    std::string ambient, upper, lower;
    g_quot->add_option("--ambient", ambient, "S3, S4 or S5")->required();
    g_quot->add_option("--upper", upper, "name of H'")->required();
    g_quot->add_option("--lower", lower, "name of H")->required();
    auto* g_cat = passthrough(group->add_subcommand("catalog", "list the named subgroups"));
    std::string cat_ambient;
    g_cat->add_option("--ambient", cat_ambient, "restrict to one ambient group");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUsage;
    }

    if (*classify) return cmd_classify(rank, as_json);
    if (*twist) return cmd_twist(symbol_text, cutoff, as_json);
    if (*v_t12) {
        asrep_report* report = nullptr;
        check(asrep_verify_theorem12(max_rank_t12, threads, &report));
        return report_result(report, as_json);
    }
    if (*v_lb) {
        asrep_report* report = nullptr;
        check(asrep_verify_lemma_b(max_rank_lb, threads, &report));
        return report_result(report, as_json);
    }
    if (*v_sc) {
        asrep_report* report = nullptr;
        check(asrep_verify_sign_closure(max_rank_sc, threads, &report));
        return report_result(report, as_json);
    }
    if (*v_tab) {
        asrep_report* report = nullptr;
        check(asrep_verify_tables(&report));
        return report_result(report, as_json);
    }
    if (*v_str) {
        asrep_report* report = nullptr;
        check(asrep_verify_strata(&report));
        return report_result(report, as_json);
    }
    if (*table_diff) {
        if (type.empty()) {
            std::fprintf(stderr, "--type is required\n");
            return kExitUsage;
        }
        return cmd_table_diff(type, as_json);
    }
    if (*table) {
        if (type.empty()) {
            std::fprintf(stderr, "--type is required\n");
            return kExitUsage;
        }
        return cmd_table(type, as_json);
    }
    if (*strata) return cmd_strata(strata_table, as_json);
    if (*g_quot) return cmd_group_quotient(ambient, upper, lower, as_json);
    if (*g_cat) return cmd_group_catalog(cat_ambient, as_json);

    return kExitUsage;
}
