#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asrep {

struct VerificationReport {
    std::string name;
    std::string params;
    std::uint64_t instances = 0;
    std::vector<std::string> violations;
    double wall_ms = 0.0;

    bool ok() const { return violations.empty(); }
};

// Exhaustive sweeps.  Rank sweeps fan out across `threads` workers; the
// merged report is independent of the worker count.

// Every 2-special label is almost special, ranks 4..max_rank.
VerificationReport verify_theorem12_sweep(unsigned max_rank, unsigned threads = 1);

// Complement domination for every reduced or once-shifted symbol of rank
// <= max_rank with a dominated row order, cutoffs up to max entry + 3.
VerificationReport verify_lemma_b_sweep(unsigned max_rank, unsigned threads = 1);

// The almost-special labels are closed under the sign twist, ranks
// 4..max_rank; degenerate classes stay degenerate.
VerificationReport verify_sign_closure_sweep(unsigned max_rank, unsigned threads = 1);

// Twist algebra: involution, rank preservation and cutoff-independence over
// [default, max entry + 5]; exhaustive to max_rank_exhaustive plus
// random_count pseudo-random classes of rank <= max_rank_random.
VerificationReport verify_involution_sweep(unsigned max_rank_exhaustive, unsigned random_count,
                                           unsigned max_rank_random, std::uint64_t seed,
                                           unsigned threads = 1);

// Digest, shape and sign-pair facts of the embedded E6/E7/E8 tables.
VerificationReport verify_tables_check();

// All strata entries recompute to their stored kinds; normality, Lagrange
// and unipotent-flag counts included.
VerificationReport verify_strata_check();

}  // namespace asrep
