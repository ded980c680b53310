#include <set>
#include <stdexcept>

#include "doctest.h"
#include "perm_groups.hpp"

using namespace asrep;

namespace {

Perm cyc(unsigned deg, std::initializer_list<std::initializer_list<unsigned>> cycles) {
    return Perm::from_cycles(deg, cycles);
}

PermGroup grp(unsigned deg, std::vector<Perm> gens) {
    return PermGroup(deg, std::move(gens));
}

// All subgroups of a small group, by closing every generating set of size <= 2.
// Sufficient for the groups used here (every subgroup of D8 is 2-generated).
std::vector<PermGroup> subgroups_upto_2gen(const PermGroup& g) {
    std::set<std::vector<Perm>> seen;
    std::vector<PermGroup> out;
    auto add = [&](std::vector<Perm> gens) {
        PermGroup h(g.degree(), std::move(gens));
        if (seen.insert(h.elements()).second) out.push_back(std::move(h));
    };
    add({});
    for (const Perm& a : g.elements()) {
        add({a});
        for (const Perm& b : g.elements()) add({a, b});
    }
    return out;
}

}  // namespace

TEST_CASE("perm basics") {
    const Perm p = cyc(5, {{1, 2, 3}});
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(3) == 1);
    CHECK(p.apply(5) == 5);
    CHECK(p.order() == 3);
    CHECK(p.compose(p.inverse()) == Perm::identity(5));
    CHECK(p.cycle_text() == "(1 2 3)");
    CHECK(cyc(5, {{1, 3}, {2, 4}}).cycle_text() == "(1 3)(2 4)");
    CHECK(Perm::identity(4).cycle_text() == "()");
    CHECK_THROWS_AS(cyc(3, {{1, 4}}), std::invalid_argument);
}

TEST_CASE("closure generation") {
    CHECK(grp(5, {cyc(5, {{1, 2}})}).order() == 2);
    CHECK(grp(5, {cyc(5, {{1, 2, 3, 4}}), cyc(5, {{1, 3}})}).order() == 8);
    CHECK(grp(5, {}).order() == 1);
    CHECK(grp(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2}})}).order() == 120);
    CHECK(grp(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 2}})}).order() == 24);
}

TEST_CASE("normality") {
    const PermGroup d8 = grp(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})});
    const PermGroup v = grp(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
    CHECK(is_normal(v, d8));

    const PermGroup s3 = grp(3, {cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2}})});
    CHECK_FALSE(is_normal(grp(3, {cyc(3, {{1, 2}})}), s3));

    const PermGroup s4 = grp(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 2}})});
    CHECK(is_normal(s4, s4));

    CHECK_THROWS_AS(is_normal(grp(4, {cyc(4, {{1, 2}})}), d8), std::invalid_argument);
}

TEST_CASE("quotients") {
    const PermGroup d8 = grp(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})});
    const PermGroup v = grp(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
    CHECK(quotient(d8, v).order == 2);

    const PermGroup s4 = grp(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 2}})});
    CHECK(quotient(s4, s4).order == 1);

    const PermGroup s3s2 = grp(5, {cyc(5, {{1, 2, 3}}), cyc(5, {{1, 2}}), cyc(5, {{4, 5}})});
    const QuotientGroup q = quotient(s3s2, grp(5, {cyc(5, {{4, 5}})}));
    CHECK(q.order == 6);
    CHECK_FALSE(q.abelian);

    const PermGroup s3 = grp(3, {cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2}})});
    CHECK_THROWS_WITH_AS(quotient(s3, grp(3, {cyc(3, {{1, 2}})})),
                         doctest::Contains("conjugates"), std::domain_error);
}

TEST_CASE("identification by fingerprint") {
    CHECK(identify(grp(5, {cyc(5, {{1, 2}})})).kind == Kind::S2);

    const PermGroup s3 = grp(3, {cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2}})});
    CHECK(identify(s3).kind == Kind::S3);

    const PermGroup s5 = grp(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2}})});
    CHECK(identify(s5).kind == Kind::S5);
    CHECK(identify(s5).label() == "S5");

    // cyclic groups of order 4 and 6 are none of the cataloged kinds
    const GroupKind c4 = identify(grp(4, {cyc(4, {{1, 2, 3, 4}})}));
    CHECK(c4.kind == Kind::Unknown);
    CHECK(c4.fp.order == 4);
    const GroupKind c6 = identify(grp(5, {cyc(5, {{1, 2, 3}, {4, 5}})}));
    CHECK(c6.kind == Kind::Unknown);
    CHECK(c6.label() == "unknown(order=6)");
}

TEST_CASE("reference fingerprints are pairwise distinct") {
    const auto& refs = reference_fingerprints();
    CHECK(refs.size() == 8);
    for (std::size_t i = 0; i < refs.size(); ++i)
        for (std::size_t j = i + 1; j < refs.size(); ++j)
            CHECK(refs[i].second != refs[j].second);
}

TEST_CASE("named subgroups") {
    CHECK(named_subgroup(Ambient::S5, "D8").order() == 8);
    CHECK(named_subgroup(Ambient::S4, "S2S2").order() == 4);
    CHECK(named_subgroup(Ambient::S3, "S2").order() == 2);
    CHECK(named_subgroup(Ambient::S5, "S3S2").order() == 12);
    CHECK(named_subgroup(Ambient::S5, "1").order() == 1);
    CHECK_THROWS_WITH_AS(named_subgroup(Ambient::S3, "S4"), doctest::Contains("not a subgroup"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(named_subgroup(Ambient::S5, "Q8"), doctest::Contains("unknown"),
                         std::invalid_argument);
}

TEST_CASE("catalog quotient identities") {
    for (Ambient a : {Ambient::S3, Ambient::S4, Ambient::S5}) {
        for (const CatalogEntry& e : catalog(a)) {
            const QuotientGroup whole = quotient(e.group, e.group);
            CHECK(identify(whole).kind == Kind::Trivial);
            const QuotientGroup by_trivial = quotient(e.group, named_subgroup(a, "1"));
            CHECK(identify(by_trivial) == identify(e.group));
            CHECK(by_trivial.order * 1 == e.group.order());
            CHECK(whole.order * e.group.order() == e.group.order());
        }
    }
}

TEST_CASE("nested pair resolution") {
    // the S2 inside S3S2 has to be the direct factor; <(12)> is not normal
    const PermGroup lower = resolve_lower(Ambient::S5, "S3S2", "S2");
    CHECK(lower.order() == 2);
    CHECK(lower.contains(cyc(5, {{4, 5}})));
    CHECK(quotient_kind(Ambient::S5, "S3S2", "S2").kind == Kind::S3);

    // the Klein subgroup chosen inside D8
    const PermGroup klein = resolve_lower(Ambient::S5, "D8", "S2S2");
    CHECK(klein.order() == 4);
    CHECK(klein.contains(cyc(5, {{1, 3}, {2, 4}})));
    CHECK(klein.contains(cyc(5, {{1, 2}, {3, 4}})));
    CHECK(quotient_kind(Ambient::S5, "D8", "S2S2").kind == Kind::S2);

    CHECK_THROWS_AS(resolve_lower(Ambient::S5, "S2S2", "S3"), std::domain_error);
}

TEST_CASE("every normal Klein subgroup of D8 gives the same quotient kind") {
    const PermGroup d8 = named_subgroup(Ambient::S5, "D8");
    const Fingerprint k4 = reference_fingerprints()[3].second;
    REQUIRE(reference_fingerprints()[3].first == Kind::K4);
    std::size_t found = 0;
    for (const PermGroup& h : subgroups_upto_2gen(d8)) {
        if (fingerprint(h) != k4 || !is_normal(h, d8)) continue;
        ++found;
        CHECK(identify(quotient(d8, h)).kind == Kind::S2);
    }
    CHECK(found == 2);
}

TEST_CASE("quotient kinds used by the strata lists") {
    CHECK(quotient_kind(Ambient::S5, "S5", "1").kind == Kind::S5);
    CHECK(quotient_kind(Ambient::S5, "S3S2", "S3").kind == Kind::S2);
    CHECK(quotient_kind(Ambient::S5, "S4", "S4").kind == Kind::Trivial);
    CHECK(quotient_kind(Ambient::S4, "S4", "1").kind == Kind::S4);
    CHECK(quotient_kind(Ambient::S4, "S2S2", "S2").kind == Kind::S2);
    CHECK(quotient_kind(Ambient::S4, "D8", "S2S2").kind == Kind::S2);
    CHECK(quotient_kind(Ambient::S3, "S3", "1").kind == Kind::S3);
    CHECK(quotient_kind(Ambient::S3, "S2", "1").kind == Kind::S2);
}
