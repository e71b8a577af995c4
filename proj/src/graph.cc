#include <lgs/graph.hh>

#include <algorithm>
#include <map>
#include <queue>

using std::map;
using std::pair;
using std::set;
using std::string;
using std::vector;

namespace lgs
{
    auto HostGraph::out(const NodeId & v) const -> vector<Edge>
    {
        vector<Edge> result;
        // edges sort by source first, so the out-set is a contiguous range
        for (auto it = edges.lower_bound(Edge{v, "", ""}); it != edges.end() && it->src == v; ++it)
            result.push_back(*it);
        return result;
    }

    auto HostGraph::in(const NodeId & v) const -> vector<Edge>
    {
        vector<Edge> result;
        for (auto & e : edges)
            if (e.dst == v)
                result.push_back(e);
        return result;
    }

    auto validate_graph(const HostGraph & g) -> vector<string>
    {
        vector<string> problems;
        for (auto & e : g.edges) {
            if (! g.nodes.contains(e.src))
                problems.push_back("edge (" + e.src + "," + e.label + "," + e.dst + "): unknown source node");
            if (! g.nodes.contains(e.dst))
                problems.push_back("edge (" + e.src + "," + e.label + "," + e.dst + "): unknown target node");
            if (! g.alphabet.contains(e.label))
                problems.push_back("edge (" + e.src + "," + e.label + "," + e.dst + "): label outside alphabet");
        }
        return problems;
    }

    auto Path::source() const -> NodeId
    {
        return edges.front().src;
    }

    auto Path::target() const -> NodeId
    {
        return edges.back().dst;
    }

    auto Path::label() const -> vector<Symbol>
    {
        vector<Symbol> result;
        for (auto & e : edges)
            result.push_back(e.label);
        return result;
    }

    auto is_path_of(const Path & p, const HostGraph & g) -> bool
    {
        if (p.edges.empty())
            return false;
        for (unsigned i = 0; i < p.edges.size(); ++i) {
            if (! g.edges.contains(p.edges[i]))
                return false;
            if (i > 0 && p.edges[i].src != p.edges[i - 1].dst)
                return false;
        }
        return true;
    }

    auto pair_name(const NodeId & a, const NodeId & b) -> NodeId
    {
        return "(" + a + "," + b + ")";
    }

    auto split_pair_name(const NodeId & name) -> pair<NodeId, NodeId>
    {
        // split at the comma at parenthesis depth one
        if (name.size() < 3 || name.front() != '(' || name.back() != ')')
            return {name, ""};
        int depth = 0;
        for (unsigned i = 0; i < name.size(); ++i) {
            if (name[i] == '(')
                ++depth;
            else if (name[i] == ')')
                --depth;
            else if (name[i] == ',' && depth == 1)
                return {name.substr(1, i - 1), name.substr(i + 1, name.size() - i - 2)};
        }
        return {name, ""};
    }

    auto tensor_product(const HostGraph & g1, const HostGraph & g2) -> HostGraph
    {
        HostGraph result;
        std::set_intersection(g1.alphabet.begin(), g1.alphabet.end(),
            g2.alphabet.begin(), g2.alphabet.end(),
            std::inserter(result.alphabet, result.alphabet.end()));

        for (auto & u : g1.nodes)
            for (auto & v : g2.nodes)
                result.nodes.insert(pair_name(u, v));

        map<Symbol, vector<Edge>> by_label;
        for (auto & e : g2.edges)
            by_label[e.label].push_back(e);

        for (auto & e1 : g1.edges) {
            auto matches = by_label.find(e1.label);
            if (matches == by_label.end())
                continue;
            for (auto & e2 : matches->second)
                result.edges.insert(Edge{pair_name(e1.src, e2.src), e1.label, pair_name(e1.dst, e2.dst)});
        }
        return result;
    }

    auto reachability(const HostGraph & g) -> set<pair<NodeId, NodeId>>
    {
        vector<NodeId> nodes(g.nodes.begin(), g.nodes.end());
        map<NodeId, unsigned> index;
        for (unsigned i = 0; i < nodes.size(); ++i)
            index.emplace(nodes[i], i);

        unsigned n = nodes.size();
        vector<vector<char>> reach(n, vector<char>(n, 0));
        for (auto & e : g.edges)
            reach[index.at(e.src)][index.at(e.dst)] = 1;

        // Warshall closure over the one-step relation: no reflexive seeds,
        // so a node reaches itself only through a cycle
        for (unsigned k = 0; k < n; ++k)
            for (unsigned i = 0; i < n; ++i)
                if (reach[i][k])
                    for (unsigned j = 0; j < n; ++j)
                        if (reach[k][j])
                            reach[i][j] = 1;

        set<pair<NodeId, NodeId>> result;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (reach[i][j])
                    result.emplace(nodes[i], nodes[j]);
        return result;
    }
}
