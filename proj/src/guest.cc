#include <lgs/guest.hh>

#include <algorithm>
#include <deque>
#include <map>

using std::move;
using std::deque;
using std::map;
using std::set;
using std::string;
using std::vector;

namespace lgs
{
    namespace
    {
        const ChoiceFamily empty_family;

        auto describe(const Edge & e) -> string
        {
            return "(" + e.src + "," + e.label + "," + e.dst + ")";
        }
    }

    auto Guest::choice_of(const NodeId & v) const -> const ChoiceFamily &
    {
        auto it = choice.find(v);
        return it == choice.end() ? empty_family : it->second;
    }

    auto canonicalise_choice(Guest & g) -> void
    {
        map<NodeId, ChoiceFamily> keyed;
        for (auto & v : g.graph.nodes) {
            auto it = g.choice.find(v);
            keyed[v] = it == g.choice.end() ? ChoiceFamily{} : it->second;
        }
        g.choice = move(keyed);
    }

    auto validate_guest(const Guest & g) -> vector<string>
    {
        vector<string> problems = validate_graph(g.graph);

        for (auto & v : g.must)
            if (! g.graph.nodes.contains(v))
                problems.push_back("must node " + v + " is not a graph node");
        for (auto & v : g.unique)
            if (! g.graph.nodes.contains(v))
                problems.push_back("unique node " + v + " is not a graph node");
        for (auto & v : g.exclusive)
            if (! g.graph.nodes.contains(v))
                problems.push_back("exclusive node " + v + " is not a graph node");

        for (auto & [v, _] : g.choice)
            if (! g.graph.nodes.contains(v))
                problems.push_back("choice defined for unknown node " + v);

        for (auto & v : g.graph.nodes) {
            auto out_edges = g.graph.out(v);
            set<Edge> out_set(out_edges.begin(), out_edges.end());
            set<Edge> covered;
            for (auto & gamma : g.choice_of(v))
                for (auto & e : gamma) {
                    if (! out_set.contains(e))
                        problems.push_back("choice of " + v + " contains " + describe(e) + " which is not an out-edge");
                    else
                        covered.insert(e);
                }
            if (covered != out_set)
                problems.push_back("choice of " + v + " does not cover all out-edges");
        }
        return problems;
    }

    auto full_product(const Guest & guest, const HostGraph & host) -> CandidateSubgraph
    {
        CandidateSubgraph result;
        for (auto & u : guest.graph.nodes)
            for (auto & v : host.nodes)
                result.pair_nodes.insert(PairNode{u, v});

        map<Symbol, vector<Edge>> by_label;
        for (auto & e : host.edges)
            by_label[e.label].push_back(e);

        for (auto & e1 : guest.graph.edges) {
            auto matches = by_label.find(e1.label);
            if (matches == by_label.end())
                continue;
            for (auto & e2 : matches->second)
                result.pair_edges.insert(PairEdge{PairNode{e1.src, e2.src}, e1.label, PairNode{e1.dst, e2.dst}});
        }
        return result;
    }

    auto validate_candidate(const Guest & guest, const HostGraph & host,
        const CandidateSubgraph & cand) -> vector<string>
    {
        vector<string> problems;
        for (auto & p : cand.pair_nodes) {
            if (! guest.graph.nodes.contains(p.guest_node))
                problems.push_back("pair (" + p.guest_node + "," + p.host_node + "): unknown guest node");
            if (! host.nodes.contains(p.host_node))
                problems.push_back("pair (" + p.guest_node + "," + p.host_node + "): unknown host node");
        }
        for (auto & e : cand.pair_edges) {
            string name = "pair edge ((" + e.src.guest_node + "," + e.src.host_node + ")," + e.label +
                ",(" + e.dst.guest_node + "," + e.dst.host_node + "))";
            if (! cand.pair_nodes.contains(e.src))
                problems.push_back(name + ": source pair missing");
            if (! cand.pair_nodes.contains(e.dst))
                problems.push_back(name + ": target pair missing");
            if (! guest.graph.edges.contains(Edge{e.src.guest_node, e.label, e.dst.guest_node}))
                problems.push_back(name + ": does not project to a guest edge");
            if (! host.edges.contains(Edge{e.src.host_node, e.label, e.dst.host_node}))
                problems.push_back(name + ": does not project to a host edge");
        }
        return problems;
    }

    auto pairs_reaching(const CandidateSubgraph & cand, const set<PairNode> & targets) -> set<PairNode>
    {
        map<PairNode, vector<PairNode>> rev;
        for (auto & e : cand.pair_edges)
            rev[e.dst].push_back(e.src);

        // start from the in-neighbours of the targets so that membership
        // always witnesses a path of length at least one
        set<PairNode> result;
        deque<PairNode> queue;
        for (auto & t : targets) {
            auto it = rev.find(t);
            if (it == rev.end())
                continue;
            for (auto & p : it->second)
                if (result.insert(p).second)
                    queue.push_back(p);
        }
        while (! queue.empty()) {
            auto p = queue.front();
            queue.pop_front();
            auto it = rev.find(p);
            if (it == rev.end())
                continue;
            for (auto & q : it->second)
                if (result.insert(q).second)
                    queue.push_back(q);
        }
        return result;
    }
}
