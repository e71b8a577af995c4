#ifndef LGS_GRAPH_HH
#define LGS_GRAPH_HH

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lgs
{
    using NodeId = std::string;
    using Symbol = std::string;

    struct Edge
    {
        NodeId src;
        Symbol label;
        NodeId dst;

        auto operator<=>(const Edge &) const = default;
    };

    /* A finite labelled directed graph. Edges form a set of (src, label, dst)
     * triples, so parallel edges must carry distinct labels. */
    struct HostGraph
    {
        std::set<Symbol> alphabet;
        std::set<NodeId> nodes;
        std::set<Edge> edges;

        auto operator<=>(const HostGraph &) const = default;

        auto out(const NodeId & v) const -> std::vector<Edge>;
        auto in(const NodeId & v) const -> std::vector<Edge>;
    };

    // structural problems, empty when well-formed
    auto validate_graph(const HostGraph & g) -> std::vector<std::string>;

    /* A path is a chain of at least one edge; its label lives in Sigma^+, so
     * the empty word never labels a path. */
    struct Path
    {
        std::vector<Edge> edges;

        auto source() const -> NodeId;
        auto target() const -> NodeId;
        auto label() const -> std::vector<Symbol>;
    };

    // true iff p is a nonempty properly chained edge sequence of g
    auto is_path_of(const Path & p, const HostGraph & g) -> bool;

    // composite node name used when a product is flattened to a plain graph
    auto pair_name(const NodeId & a, const NodeId & b) -> NodeId;
    auto split_pair_name(const NodeId & name) -> std::pair<NodeId, NodeId>;

    auto tensor_product(const HostGraph & g1, const HostGraph & g2) -> HostGraph;

    // (u, v) present iff a path of length >= 1 runs from u to v
    auto reachability(const HostGraph & g) -> std::set<std::pair<NodeId, NodeId>>;
}

#endif
