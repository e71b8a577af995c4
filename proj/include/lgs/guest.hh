#ifndef LGS_GUEST_HH
#define LGS_GUEST_HH

#include <lgs/graph.hh>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace lgs
{
    using ChoiceSet = std::set<Edge>;
    using ChoiceFamily = std::set<ChoiceSet>;

    /* A guest is a graph whose nodes carry usage constraints (must appear,
     * match at most one host node, claim their host node exclusively) and
     * whose out-edges are grouped into alternative obligations by the choice
     * function. Every node has a choice entry, possibly the empty family. */
    struct Guest
    {
        HostGraph graph;
        std::set<NodeId> must;
        std::set<NodeId> unique;
        std::set<NodeId> exclusive;
        std::map<NodeId, ChoiceFamily> choice;

        auto operator<=>(const Guest &) const = default;

        auto choice_of(const NodeId & v) const -> const ChoiceFamily &;
    };

    // keys choice for every node, dropping entries for unknown nodes
    auto canonicalise_choice(Guest & g) -> void;

    // structural problems, empty when well-formed
    auto validate_guest(const Guest & g) -> std::vector<std::string>;

    struct PairNode
    {
        NodeId guest_node;
        NodeId host_node;

        auto operator<=>(const PairNode &) const = default;
    };

    struct PairEdge
    {
        PairNode src;
        Symbol label;
        PairNode dst;

        auto operator<=>(const PairEdge &) const = default;
    };

    /* A subgraph of guest x host. Once it passes the five conditions it is a
     * loose graph simulation witness. */
    struct CandidateSubgraph
    {
        std::set<PairNode> pair_nodes;
        std::set<PairEdge> pair_edges;

        auto operator<=>(const CandidateSubgraph &) const = default;
    };

    // the full tensor product of guest and host as a candidate
    auto full_product(const Guest & guest, const HostGraph & host) -> CandidateSubgraph;

    // structural problems relative to guest and host, empty when well-formed
    auto validate_candidate(const Guest & guest, const HostGraph & host,
        const CandidateSubgraph & cand) -> std::vector<std::string>;

    // pairs with at least one candidate path of length >= 1 into targets
    auto pairs_reaching(const CandidateSubgraph & cand,
        const std::set<PairNode> & targets) -> std::set<PairNode>;
}

#endif
