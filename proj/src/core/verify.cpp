#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <thread>

#include "dn_classification.hpp"
#include "exceptional_tables.hpp"
#include "sign_twist.hpp"
#include "strata_map.hpp"
#include "symbols.hpp"

namespace asrep {

namespace {

using Clock = std::chrono::steady_clock;

struct RankPartial {
    std::uint64_t instances = 0;
    std::vector<std::string> violations;
};

// Runs fn over ranks lo..hi, possibly on several workers; partial results are
// merged in rank order, so the outcome does not depend on scheduling.
template <typename Fn>
std::vector<RankPartial> sweep_ranks(unsigned lo, unsigned hi, unsigned threads, Fn fn) {
    std::vector<unsigned> ranks;
    for (unsigned n = lo; n <= hi; ++n) ranks.push_back(n);
    std::vector<RankPartial> parts(ranks.size());
    if (threads <= 1 || ranks.size() <= 1) {
        for (std::size_t i = 0; i < ranks.size(); ++i) parts[i] = fn(ranks[i]);
        return parts;
    }
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(ranks.size()));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < ranks.size();) parts[i] = fn(ranks[i]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return parts;
}

VerificationReport merge(std::string name, std::string params, Clock::time_point t0,
                         const std::vector<RankPartial>& parts) {
    VerificationReport rep;
    rep.name = std::move(name);
    rep.params = std::move(params);
    for (const RankPartial& p : parts) {
        rep.instances += p.instances;
        rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

std::string label_text(const IrrLabelD& l) {
    std::string s = to_text(l.cls.rep());
    if (l.marker == Marker::I) s += " [I]";
    if (l.marker == Marker::II) s += " [II]";
    return s;
}

}  // namespace

VerificationReport verify_theorem12_sweep(unsigned max_rank, unsigned threads) {
    const auto t0 = Clock::now();
    auto parts = sweep_ranks(4, max_rank, threads, [](unsigned n) {
        RankPartial p;
        for (const IrrLabelD& label : enumerate_irr(n)) {
            ++p.instances;
            if (is_two_special(label) && !is_almost_special(label))
                p.violations.push_back("rank " + std::to_string(n) + ": " + label_text(label));
        }
        return p;
    });
    return merge("theorem12", "ranks 4.." + std::to_string(max_rank), t0, parts);
}

VerificationReport verify_lemma_b_sweep(unsigned max_rank, unsigned threads) {
    const auto t0 = Clock::now();
    auto parts = sweep_ranks(1, max_rank, threads, [](unsigned n) {
        RankPartial p;
        for (const SymbolClass& c : classes_of_rank(n)) {
            for (const Symbol& s : {c.rep(), shift_up(c.rep())}) {
                if (!has_dominated_order(s)) continue;
                const unsigned lo = default_cutoff(s);
                const unsigned hi = max_entry(s) + 3;
                for (unsigned cutoff = lo; cutoff <= hi; ++cutoff) {
                    ++p.instances;
                    if (!check_lemma_b(s, cutoff))
                        p.violations.push_back("rank " + std::to_string(n) + ": " + to_text(s) +
                                               " at cutoff " + std::to_string(cutoff));
                }
            }
        }
        return p;
    });
    return merge("lemma-b", "ranks 1.." + std::to_string(max_rank) + ", cutoffs to max entry + 3",
                 t0, parts);
}

VerificationReport verify_sign_closure_sweep(unsigned max_rank, unsigned threads) {
    const auto t0 = Clock::now();
    auto parts = sweep_ranks(4, max_rank, threads, [](unsigned n) {
        RankPartial p;
        for (const SymbolClass& c : classes_of_rank(n)) {
            ++p.instances;
            const SymbolClass tw = tensor_sign_class(c);
            if (is_degenerate(c.rep())) {
                if (!is_degenerate(tw.rep()))
                    p.violations.push_back("rank " + std::to_string(n) + ": degenerate " +
                                           to_text(c.rep()) + " twists to non-degenerate " +
                                           to_text(tw.rep()));
            } else if (in_Y(c)) {
                if (is_degenerate(tw.rep()) || !in_Y(tw))
                    p.violations.push_back("rank " + std::to_string(n) + ": almost-special " +
                                           to_text(c.rep()) + " twists outside, to " +
                                           to_text(tw.rep()));
            }
        }
        return p;
    });
    return merge("sign-closure", "ranks 4.." + std::to_string(max_rank), t0, parts);
}

namespace {

RankPartial involution_checks(unsigned n, const SymbolClass& c) {
    RankPartial p;
    ++p.instances;
    const Symbol& r = c.rep();
    const SymbolClass tw = tensor_sign_class(c);
    if (rank(tw.rep()) != n)
        p.violations.push_back("rank changed: " + to_text(r) + " -> " + to_text(tw.rep()));
    if (!(tensor_sign_class(tw) == c))
        p.violations.push_back("not an involution on " + to_text(r));
    const unsigned lo = default_cutoff(r);
    for (unsigned cutoff = lo; cutoff <= max_entry(r) + 5; ++cutoff) {
        if (!(canonical(tensor_sign(r, cutoff)) == tw)) {
            p.violations.push_back("cutoff " + std::to_string(cutoff) + " changes the twist of " +
                                   to_text(r));
        }
    }
    return p;
}

std::vector<unsigned> random_partition(std::mt19937_64& gen, unsigned total) {
    std::vector<unsigned> parts;
    unsigned left = total;
    while (left > 0) {
        const unsigned part = 1 + static_cast<unsigned>(gen() % left);
        parts.push_back(part);
        left -= part;
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace

VerificationReport verify_involution_sweep(unsigned max_rank_exhaustive, unsigned random_count,
                                           unsigned max_rank_random, std::uint64_t seed,
                                           unsigned threads) {
    const auto t0 = Clock::now();
    auto parts = sweep_ranks(1, max_rank_exhaustive, threads, [](unsigned n) {
        RankPartial p;
        for (const SymbolClass& c : classes_of_rank(n)) {
            const RankPartial one = involution_checks(n, c);
            p.instances += one.instances;
            p.violations.insert(p.violations.end(), one.violations.begin(), one.violations.end());
        }
        return p;
    });

    RankPartial rnd;
    std::mt19937_64 gen(seed);
    for (unsigned i = 0; i < random_count; ++i) {
        const unsigned n = 1 + static_cast<unsigned>(gen() % max_rank_random);
        const unsigned k = static_cast<unsigned>(gen() % (n + 1));
        const Bipartition b{random_partition(gen, k), random_partition(gen, n - k)};
        const SymbolClass c = canonical(from_bipartition(b));
        const RankPartial one = involution_checks(n, c);
        rnd.instances += one.instances;
        rnd.violations.insert(rnd.violations.end(), one.violations.begin(), one.violations.end());
    }
    parts.push_back(std::move(rnd));

    return merge("involution",
                 "exhaustive to rank " + std::to_string(max_rank_exhaustive) + ", " +
                     std::to_string(random_count) + " random classes to rank " +
                     std::to_string(max_rank_random) + ", cutoffs to max entry + 5",
                 t0, parts);
}

VerificationReport verify_tables_check() {
    const auto t0 = Clock::now();
    RankPartial p;
    for (GroupType t : {GroupType::E6, GroupType::E7, GroupType::E8}) {
        const std::string name(group_type_name(t));
        try {
            const ExcTable& table = load_table(t);
            p.instances += table.rows.size();
            const std::size_t expected_diff = t == GroupType::E6 ? 0 : t == GroupType::E7 ? 1 : 2;
            if (diff_ca_cs2(t).size() != expected_diff)
                p.violations.push_back(name + ": unexpected difference-set size");
            const TableCheckReport check = check_sign_closure(t);
            p.instances += sign_twist_facts(t).size() + sign_closure_exceptions(t).size();
            for (const std::string& problem : check.problems)
                p.violations.push_back(name + ": " + problem);
        } catch (const std::exception& e) {
            p.violations.push_back(name + ": " + e.what());
        }
    }
    return merge("tables", "E6 E7 E8", t0, {p});
}

VerificationReport verify_strata_check() {
    const auto t0 = Clock::now();
    RankPartial p;
    for (StrataTable t : {StrataTable::E8_S5, StrataTable::F4_S4, StrataTable::G2_S3}) {
        const std::string name(strata_table_name(t));
        const auto& entries = strata_table(t);
        const std::size_t expected_size = t == StrataTable::G2_S3 ? 4 : 8;
        const std::size_t expected_unip = t == StrataTable::E8_S5 ? 7
                                          : t == StrataTable::F4_S4 ? 5
                                                                    : 3;
        if (entries.size() != expected_size)
            p.violations.push_back(name + ": wrong entry count");
        std::size_t unip = 0;
        for (const StratumEntry& entry : entries) {
            ++p.instances;
            if (entry.has_unipotent_class) ++unip;
            try {
                const PermGroup& upper = named_subgroup(entry.family_group, entry.upper_name);
                const PermGroup lower = resolve_lower(entry.family_group, entry.upper_name,
                                                      entry.lower_name);
                if (!is_normal(lower, upper)) {
                    p.violations.push_back(name + " " + to_text(entry.rep) + ": " +
                                           entry.lower_name + " not normal in " + entry.upper_name);
                    continue;
                }
                const QuotientGroup q = quotient(upper, lower);
                if (q.order * lower.order() != upper.order())
                    p.violations.push_back(name + " " + to_text(entry.rep) + ": Lagrange failure");
                const GroupKind kind = identify(q);
                if (kind.kind != entry.claimed)
                    p.violations.push_back(name + " " + to_text(entry.rep) + ": recomputed " +
                                           kind.label() + ", expected " +
                                           GroupKind{entry.claimed, {}}.label());
            } catch (const std::exception& e) {
                p.violations.push_back(name + " " + to_text(entry.rep) + ": " + e.what());
            }
        }
        if (unip != expected_unip)
            p.violations.push_back(name + ": unipotent flags count " + std::to_string(unip) +
                                   ", expected " + std::to_string(expected_unip));
        try {
            const GroupKind special = special_stratum_kind(t);
            ++p.instances;
            if (special.label() != std::string(ambient_name(entries.front().family_group)))
                p.violations.push_back(name + ": special stratum kind " + special.label());
        } catch (const std::exception& e) {
            p.violations.push_back(name + ": " + e.what());
        }
    }
    return merge("strata", "E8_S5 F4_S4 G2_S3", t0, {p});
}

}  // namespace asrep
