// Exercises the shared-library surface only; nothing here may include a core
// header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "asrep/asrep.h"
#include "doctest.h"

namespace {

std::string take_string(char* s) {
    std::string out = s ? s : "";
    asrep_string_free(s);
    return out;
}

std::string format(const asrep_symbol* s) {
    char* text = nullptr;
    REQUIRE(asrep_symbol_format(s, &text) == ASREP_OK);
    return take_string(text);
}

asrep_symbol* parse(const char* text) {
    asrep_symbol* s = nullptr;
    REQUIRE(asrep_symbol_parse(text, &s) == ASREP_OK);
    return s;
}

}  // namespace

TEST_CASE("version and status strings") {
    CHECK(asrep_version() != nullptr);
    CHECK(std::strcmp(asrep_status_name(ASREP_OK), "ok") == 0);
    CHECK(std::strcmp(asrep_status_name(ASREP_ERR_PARSE), "parse error") == 0);
}

TEST_CASE("symbol lifecycle") {
    asrep_symbol* s = parse("0 1 2 3 4 / 2 3 4 5 6");
    CHECK(asrep_symbol_length(s) == 5);
    unsigned v = 0;
    CHECK(asrep_symbol_entry(s, 1, 0, &v) == ASREP_OK);
    CHECK(v == 2);
    unsigned n = 0;
    CHECK(asrep_symbol_rank(s, &n) == ASREP_OK);
    CHECK(n == 10);
    CHECK(asrep_symbol_degenerate(s) == 0);
    CHECK(format(s) == "0 1 2 3 4 / 2 3 4 5 6");

    const unsigned top[] = {2}, bottom[] = {2};
    asrep_symbol* d = nullptr;
    REQUIRE(asrep_symbol_create(top, bottom, 1, &d) == ASREP_OK);
    CHECK(asrep_symbol_degenerate(d) == 1);
    asrep_symbol_free(d);
    asrep_symbol_free(s);
}

TEST_CASE("parse failures carry messages and the right code") {
    asrep_symbol* s = nullptr;
    CHECK(asrep_symbol_parse("1 0 / 2 3", &s) == ASREP_ERR_PARSE);
    CHECK(std::string(asrep_last_error()).find("increasing") != std::string::npos);
    CHECK(asrep_symbol_parse("0 1 / 2", &s) == ASREP_ERR_PARSE);
    CHECK(asrep_symbol_parse(nullptr, &s) == ASREP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("shift, reduce, canonical") {
    asrep_symbol* s = parse("0 / 4");
    asrep_symbol* up = nullptr;
    REQUIRE(asrep_symbol_shift_up(s, &up) == ASREP_OK);
    CHECK(format(up) == "0 1 / 0 5");
    asrep_symbol* red = nullptr;
    REQUIRE(asrep_symbol_reduce(up, &red) == ASREP_OK);
    CHECK(format(red) == "0 / 4");
    asrep_symbol* swapped = parse("4 / 0");
    asrep_symbol* can = nullptr;
    REQUIRE(asrep_symbol_canonical(swapped, &can) == ASREP_OK);
    CHECK(format(can) == "0 / 4");
    asrep_symbol_free(can);
    asrep_symbol_free(swapped);
    asrep_symbol_free(red);
    asrep_symbol_free(up);
    asrep_symbol_free(s);

    // rank 0 has no class
    asrep_symbol* zero = parse("0 / 0");
    asrep_symbol* out = nullptr;
    CHECK(asrep_symbol_canonical(zero, &out) == ASREP_ERR_DOMAIN);
    asrep_symbol_free(zero);
}

TEST_CASE("sign twist through the C surface") {
    asrep_symbol* s = parse("0 1 2 3 4 / 2 3 4 5 6");
    asrep_symbol* t = nullptr;
    REQUIRE(asrep_symbol_tensor_sign(s, 0, &t) == ASREP_OK);
    CHECK(format(t) == "0 1 / 5 6");
    asrep_symbol* back = nullptr;
    REQUIRE(asrep_symbol_tensor_sign(t, 6, &back) == ASREP_OK);
    CHECK(format(back) == "0 1 2 3 4 / 2 3 4 5 6");
    asrep_symbol* too_small = nullptr;
    CHECK(asrep_symbol_tensor_sign(s, 3, &too_small) == ASREP_ERR_RANGE);
    asrep_symbol_free(back);
    asrep_symbol_free(t);
    asrep_symbol_free(s);
}

TEST_CASE("class predicates") {
    asrep_symbol* x = parse("0 1 2 3 4 / 2 3 4 5 6");
    asrep_symbol* y = parse("0 1 / 5 6");
    asrep_symbol* neither = parse("0 3 / 1 2");
    int flag = -1;
    CHECK(asrep_class_two_special(x, &flag) == ASREP_OK);
    CHECK(flag == 1);
    CHECK(asrep_class_two_special(y, &flag) == ASREP_OK);
    CHECK(flag == 0);
    CHECK(asrep_class_almost_special(y, &flag) == ASREP_OK);
    CHECK(flag == 1);
    CHECK(asrep_class_almost_special(neither, &flag) == ASREP_OK);
    CHECK(flag == 0);
    asrep_symbol_free(neither);
    asrep_symbol_free(y);
    asrep_symbol_free(x);
}

TEST_CASE("classification lists") {
    asrep_labels* labels = nullptr;
    REQUIRE(asrep_classify(4, &labels) == ASREP_OK);
    CHECK(asrep_labels_count(labels) == 13);
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < asrep_labels_count(labels); ++i) {
        asrep_label_info info{};
        REQUIRE(asrep_labels_get(labels, i, &info) == ASREP_OK);
        if (info.degenerate) ++degenerate;
        if (info.two_special) CHECK(info.almost_special == 1);
        CHECK((info.marker != 0) == (info.degenerate != 0));
    }
    CHECK(degenerate == 4);
    asrep_symbol* first = nullptr;
    REQUIRE(asrep_labels_symbol(labels, 0, &first) == ASREP_OK);
    CHECK(asrep_symbol_length(first) >= 1);
    asrep_symbol_free(first);
    asrep_labels_free(labels);

    asrep_labels* bad = nullptr;
    CHECK(asrep_classify(0, &bad) == ASREP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification reports") {
    asrep_report* report = nullptr;
    REQUIRE(asrep_verify_theorem12(8, 2, &report) == ASREP_OK);
    CHECK(std::string(asrep_report_name(report)) == "theorem12");
    CHECK(asrep_report_instances(report) > 0);
    CHECK(asrep_report_violation_count(report) == 0);
    CHECK(asrep_report_wall_ms(report) >= 0.0);
    asrep_report_free(report);

    for (auto fn : {asrep_verify_tables, asrep_verify_strata}) {
        asrep_report* r = nullptr;
        REQUIRE(fn(&r) == ASREP_OK);
        CHECK(asrep_report_violation_count(r) == 0);
        asrep_report_free(r);
    }
}

TEST_CASE("tables through the C surface") {
    const asrep_table* e8 = nullptr;
    REQUIRE(asrep_table_load("E8", &e8) == ASREP_OK);
    CHECK(asrep_table_row_count(e8) == 46);

    asrep_replabel diff[4]{};
    std::size_t count = 0;
    REQUIRE(asrep_table_diff(e8, diff, 4, &count) == ASREP_OK);
    REQUIRE(count == 2);
    CHECK(diff[0].dim == 50);
    CHECK(diff[0].subscript == 8);
    CHECK(diff[1].dim == 700);
    CHECK(diff[1].subscript == 16);
    CHECK(std::string(diff[0].group_type) == "E8");

    REQUIRE(asrep_table_sign_fact_count(e8) == 3);
    asrep_replabel left{}, right{};
    int provenance = -1;
    REQUIRE(asrep_table_sign_fact(e8, 0, &left, &right, &provenance) == ASREP_OK);
    CHECK(left.dim == 50);
    CHECK(left.subscript == 56);
    CHECK(right.subscript == 8);
    CHECK(provenance == ASREP_PROVENANCE_RECORDED);

    CHECK(asrep_table_exception_count(e8) == 2);
    asrep_replabel exc{};
    REQUIRE(asrep_table_exception(e8, 0, &exc) == ASREP_OK);
    CHECK(exc.dim == 4096);

    const asrep_table* missing = nullptr;
    CHECK(asrep_table_load("F4", &missing) == ASREP_ERR_DOMAIN);
    CHECK(asrep_table_load("Z9", &missing) == ASREP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("group queries") {
    unsigned order = 0;
    REQUIRE(asrep_group_order("S5", "D8", &order) == ASREP_OK);
    CHECK(order == 8);
    char* kind = nullptr;
    REQUIRE(asrep_group_quotient_kind("S5", "S3S2", "S2", &kind) == ASREP_OK);
    CHECK(take_string(kind) == "S3");
    kind = nullptr;
    REQUIRE(asrep_group_quotient_kind("S4", "D8", "S2S2", &kind) == ASREP_OK);
    CHECK(take_string(kind) == "S2");
    kind = nullptr;
    CHECK(asrep_group_quotient_kind("S3", "S3", "S2", &kind) == ASREP_ERR_DOMAIN);

    std::size_t count = 0;
    REQUIRE(asrep_catalog_count("S5", &count) == ASREP_OK);
    CHECK(count == 8);
    char* name = nullptr;
    char* gens = nullptr;
    REQUIRE(asrep_catalog_entry("S5", 0, &name, &gens) == ASREP_OK);
    CHECK(take_string(name) == "1");
    CHECK(take_string(gens) == "()");
}

TEST_CASE("strata through the C surface") {
    std::size_t count = 0;
    REQUIRE(asrep_strata_count("E8_S5", &count) == ASREP_OK);
    REQUIRE(count == 8);
    asrep_stratum first{};
    REQUIRE(asrep_strata_entry("E8_S5", 0, &first) == ASREP_OK);
    CHECK(first.rep.dim == 4480);
    CHECK(std::string(first.upper) == "S5");
    CHECK(std::string(first.lower) == "1");
    CHECK(std::string(first.claimed) == "S5");
    CHECK(std::string(first.recomputed) == "S5");
    CHECK(first.unipotent == 1);
    CHECK(first.ok == 1);

    asrep_stratum last{};
    REQUIRE(asrep_strata_entry("E8_S5", 7, &last) == ASREP_OK);
    CHECK(last.rep.dim == 168);
    CHECK(last.unipotent == 0);
    CHECK(std::string(last.recomputed) == "1");

    asrep_stratum g2{};
    REQUIRE(asrep_strata_count("G2_S3", &count) == ASREP_OK);
    REQUIRE(count == 4);
    REQUIRE(asrep_strata_entry("G2_S3", 3, &g2) == ASREP_OK);
    CHECK(g2.rep.variant == 2);

    CHECK(asrep_strata_entry("E8_S5", 99, &first) == ASREP_ERR_RANGE);
    CHECK(asrep_strata_count("B2_S2", &count) == ASREP_ERR_INVALID_ARGUMENT);
}
