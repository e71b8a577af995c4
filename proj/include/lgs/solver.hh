#ifndef LGS_SOLVER_HH
#define LGS_SOLVER_HH

#include <lgs/checker.hh>
#include <lgs/guest.hh>

#include <cstddef>
#include <optional>
#include <vector>

namespace lgs
{
    /* Greatest fixed point inside start of the two removal rules: an edge
     * goes when no choice set both contains its guest projection and is
     * fully realised at its source pair; a pair goes when it has no
     * out-edges and no empty choice set, or when some must node reachable
     * in the guest is unreachable from it in the current subgraph. No
     * element of any simulation contained in start is ever removed. */
    auto prune(const Guest & guest, const HostGraph & host,
        const CandidateSubgraph & start) -> CandidateSubgraph;

    /* The union of all simulations, which exists and is itself one when the
     * unique and exclusive sets are empty. Throws PreconditionError
     * otherwise; returns nullopt when some must node cannot be matched. */
    auto greatest_lgs(const Guest & guest, const HostGraph & host)
        -> std::optional<CandidateSubgraph>;

    struct SolveOptions
    {
        unsigned threads = 0; // 0 = sequential
    };

    /* Complete search: prune, then branch on unique/exclusive conflicts
     * (smallest branch set first, lexicographic tie-break), re-pruning each
     * branch. Returns a witness passing the full verifier iff one exists;
     * the witness is independent of the thread count. */
    auto solve_emptiness(const Guest & guest, const HostGraph & host,
        const SolveOptions & options = {}) -> std::optional<CandidateSubgraph>;

    /* Every structurally valid candidate is enumerated and verified.
     * Throws CapExceededError when |nodes| + |edges| of the product
     * exceeds the cap. */
    auto brute_force_lgs(const Guest & guest, const HostGraph & host,
        std::size_t cap = 14) -> std::vector<CandidateSubgraph>;
}

#endif
