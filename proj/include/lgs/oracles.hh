#ifndef LGS_ORACLES_HH
#define LGS_ORACLES_HH

#include <lgs/encoders.hh>
#include <lgs/graph.hh>
#include <lgs/regex.hh>

#include <cstddef>
#include <optional>
#include <set>
#include <utility>

namespace lgs
{
    /* Desk-scale reference implementations of the four classical notions,
     * written directly against their definitions. They are the independent
     * side of every encoder equivalence check. */

    struct OracleCaps
    {
        std::size_t max_query_nodes = 8;
        std::size_t max_host_nodes = 12;
    };

    // backtracking search for label-preserving injections on nodes and edges
    auto sgi_oracle(const HostGraph & query, const HostGraph & host,
        const OracleCaps & caps = {}) -> bool;

    /* Fixed-point refinement from the full relation; the maximal simulation
     * when every query node keeps a partner, nullopt otherwise. */
    auto gs_oracle(const HostGraph & query, const HostGraph & host)
        -> std::optional<std::set<std::pair<NodeId, NodeId>>>;

    // breadth-first search over the product of host and regex automaton
    auto rlpm_oracle(const RegexPtr & r, const HostGraph & host) -> bool;

    /* Enumerates injections of query nodes into host nodes; each decorated
     * edge needs a host path in its language whose inner nodes avoid the
     * image of the injection. */
    auto rlsgi_oracle(const DecoratedGraph & query, const HostGraph & host,
        const OracleCaps & caps = {}) -> bool;
}

#endif
