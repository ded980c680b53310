// Acceptance suite: every headline claim at full desk scale, one line per
// criterion.  Exits nonzero if anything fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dn_classification.hpp"
#include "exceptional_tables.hpp"
#include "oracles.hpp"
#include "perm_groups.hpp"
#include "sign_twist.hpp"
#include "strata_map.hpp"
#include "symbols.hpp"
#include "verify.hpp"

using namespace asrep;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string note) {
        pass = false;
        notes.push_back(std::move(note));
    }
    void expect(bool ok, const std::string& note) {
        if (!ok) fail(note);
    }
};

int g_failures = 0;

template <typename Fn>
void criterion(int number, const char* description, double budget_seconds, Fn body) {
    Outcome out;
    const auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget_seconds > 0 && seconds > budget_seconds)
        out.fail("took " + std::to_string(seconds) + " s, budget " +
                 std::to_string(budget_seconds) + " s");
    std::printf("%-4s criterion %2d: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", number,
                description, seconds);
    for (const std::string& note : out.notes) std::printf("       %s\n", note.c_str());
    if (!out.pass) ++g_failures;
}

Symbol sym(Row top, Row bottom) {
    return Symbol(std::move(top), std::move(bottom));
}

}  // namespace

int main() {
    std::printf("acceptance: symbol calculus, sign twist, tables and strata groups\n");

    criterion(1, "2-special implies almost special, ranks 4..24, exhaustive", 60.0,
              [](Outcome& out) {
                  const VerificationReport rep = verify_theorem12_sweep(24, 4);
                  out.expect(rep.ok(), "violations found");
                  for (const std::string& v : rep.violations) out.fail(v);
                  out.expect(rep.instances > 0, "empty sweep");
              });

    criterion(2, "rank-10 worked example: twist, ranks and memberships", 0, [](Outcome& out) {
        const Symbol a = sym({0, 1, 2, 3, 4}, {2, 3, 4, 5, 6});
        const Symbol twisted = tensor_sign(a, 6);
        out.expect(twisted == sym({0, 1}, {5, 6}), "twist is not [0,1 | 5,6]");
        out.expect(rank(a) == 10, "first symbol rank");
        out.expect(rank(twisted) == 10, "second symbol rank");
        out.expect(in_X(canonical(a)), "first symbol must be 2-special");
        out.expect(in_Y(canonical(twisted)), "second symbol must be almost special");
        out.expect(!in_X(canonical(twisted)), "second symbol must not be 2-special");
    });

    criterion(3, "complement domination, rank <= 12, cutoffs to max entry + 3", 0,
              [](Outcome& out) {
                  const VerificationReport rep = verify_lemma_b_sweep(12, 4);
                  out.expect(rep.ok(), "counterexample found");
                  for (const std::string& v : rep.violations) out.fail(v);
                  out.expect(rep.instances > 0, "empty sweep");
              });

    criterion(4, "almost-special labels closed under the twist, ranks 4..20", 120.0,
              [](Outcome& out) {
                  const VerificationReport rep = verify_sign_closure_sweep(20, 4);
                  out.expect(rep.ok(), "counterexample found");
                  for (const std::string& v : rep.violations) out.fail(v);
              });

    criterion(5, "twist involution, rank preservation, cutoff independence", 0, [](Outcome& out) {
        const VerificationReport rep = verify_involution_sweep(14, 10000, 40, 0x5eedULL, 4);
        out.expect(rep.ok(), "twist algebra failure");
        for (const std::string& v : rep.violations) out.fail(v);
    });

    criterion(6, "label counts match the partition-pair oracle, ranks 1..20", 0, [](Outcome& out) {
        const auto p = oracles::partition_counts(20);
        out.expect(oracles::label_count(p, 4) == 13, "oracle value at rank 4");
        out.expect(oracles::label_count(p, 5) == 18, "oracle value at rank 5");
        for (unsigned n = 1; n <= 20; ++n) {
            const auto labels = enumerate_irr(n);
            if (static_cast<long long>(labels.size()) != oracles::label_count(p, n))
                out.fail("rank " + std::to_string(n) + ": enumerated " +
                         std::to_string(labels.size()) + ", oracle " +
                         std::to_string(oracles::label_count(p, n)));
        }
    });

    criterion(7, "difference sets: E6 {}, E7 {15_7}, E8 {50_8, 700_16}", 0, [](Outcome& out) {
        out.expect(diff_ca_cs2(GroupType::E6).empty(), "E6 difference not empty");
        const auto e7 = diff_ca_cs2(GroupType::E7);
        out.expect(e7.size() == 1 && to_text(e7[0]) == "15_7", "E7 difference");
        const auto e8 = diff_ca_cs2(GroupType::E8);
        out.expect(e8.size() == 2 && to_text(e8[0]) == "50_8" && to_text(e8[1]) == "700_16",
                   "E8 difference");
    });

    criterion(8, "crossing sign pairs with verified membership flags", 0, [](Outcome& out) {
        struct Expected {
            GroupType type;
            const char* left;
            const char* right;
        };
        const Expected expected[] = {{GroupType::E7, "15_28", "15_7"},
                                     {GroupType::E8, "50_56", "50_8"},
                                     {GroupType::E8, "700_28", "700_16"}};
        for (const Expected& e : expected) {
            bool found = false;
            for (const SignPairFact& f : sign_twist_facts(e.type)) {
                if (f.provenance != Provenance::Recorded) continue;
                if (to_text(f.left) != e.left || to_text(f.right) != e.right) continue;
                found = true;
                const ExcTable& table = load_table(e.type);
                const TableEntry* l = table.find(f.left.dim, f.left.subscript);
                const TableEntry* r = table.find(f.right.dim, f.right.subscript);
                out.expect(l && l->two_special, std::string(e.left) + " must be 2-special");
                out.expect(r && !r->two_special,
                           std::string(e.right) + " must be almost special only");
            }
            out.expect(found, std::string("missing pair ") + e.left + " / " + e.right);
        }
        for (GroupType t : {GroupType::E6, GroupType::E7, GroupType::E8})
            out.expect(check_sign_closure(t).ok(),
                       std::string(group_type_name(t)) + " sign-closure cross-check");
    });

    criterion(9, "all 20 strata entries recompute; unipotent flags 7/8, 5/8, 3/4", 5.0,
              [](Outcome& out) {
                  const VerificationReport rep = verify_strata_check();
                  out.expect(rep.ok(), "strata recomputation failure");
                  for (const std::string& v : rep.violations) out.fail(v);
                  std::size_t entries = 0;
                  for (StrataTable t :
                       {StrataTable::E8_S5, StrataTable::F4_S4, StrataTable::G2_S3})
                      entries += strata_table(t).size();
                  out.expect(entries == 20, "expected 20 printed entries");
              });

    criterion(10, "group engine sanity: distinct fingerprints, Lagrange identity", 0,
              [](Outcome& out) {
                  const auto& refs = reference_fingerprints();
                  out.expect(refs.size() == 8, "expected eight reference kinds");
                  for (std::size_t i = 0; i < refs.size(); ++i)
                      for (std::size_t j = i + 1; j < refs.size(); ++j)
                          if (refs[i].second == refs[j].second)
                              out.fail("fingerprint collision between reference kinds");

                  for (StrataTable t :
                       {StrataTable::E8_S5, StrataTable::F4_S4, StrataTable::G2_S3}) {
                      for (const StratumEntry& e : strata_table(t)) {
                          const PermGroup& upper = named_subgroup(e.family_group, e.upper_name);
                          const PermGroup lower =
                              resolve_lower(e.family_group, e.upper_name, e.lower_name);
                          const QuotientGroup q = quotient(upper, lower);
                          if (q.order * lower.order() != upper.order())
                              out.fail("Lagrange failure at " + to_text(e.rep));
                      }
                  }
                  for (Ambient a : {Ambient::S3, Ambient::S4, Ambient::S5}) {
                      for (const CatalogEntry& e : catalog(a)) {
                          const QuotientGroup q = quotient(e.group, named_subgroup(a, "1"));
                          if (q.order != e.group.order())
                              out.fail("Lagrange failure for catalog " + e.name);
                      }
                  }
              });

    std::printf("result: %d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
