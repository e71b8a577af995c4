#include <lgs/errors.hh>
#include <lgs/nfa.hh>
#include <lgs/oracles.hh>

#include <algorithm>
#include <deque>
#include <map>

using std::deque;
using std::map;
using std::optional;
using std::pair;
using std::set;
using std::vector;

namespace lgs
{
    namespace
    {
        struct SgiSearch
        {
            const HostGraph & query;
            const HostGraph & host;
            vector<NodeId> query_nodes;
            map<NodeId, NodeId> assignment;
            set<NodeId> used_hosts;

            auto consistent(const NodeId & u, const NodeId & v) -> bool
            {
                // every query edge between assigned nodes needs the matching
                // host edge; u -> v is the assignment under trial
                for (auto & e : query.edges) {
                    auto src_it = e.src == u ? v : (assignment.contains(e.src) ? assignment.at(e.src) : NodeId{});
                    auto dst_it = e.dst == u ? v : (assignment.contains(e.dst) ? assignment.at(e.dst) : NodeId{});
                    if (src_it.empty() || dst_it.empty())
                        continue;
                    if (! host.edges.contains(Edge{src_it, e.label, dst_it}))
                        return false;
                }
                return true;
            }

            auto search(unsigned depth) -> bool
            {
                if (depth == query_nodes.size())
                    return true;
                auto & u = query_nodes[depth];
                for (auto & v : host.nodes) {
                    if (used_hosts.contains(v))
                        continue;
                    if (! consistent(u, v))
                        continue;
                    assignment.emplace(u, v);
                    used_hosts.insert(v);
                    if (search(depth + 1))
                        return true;
                    assignment.erase(u);
                    used_hosts.erase(v);
                }
                return false;
            }
        };
    }

    auto sgi_oracle(const HostGraph & query, const HostGraph & host, const OracleCaps & caps) -> bool
    {
        if (query.nodes.size() > caps.max_query_nodes || host.nodes.size() > caps.max_host_nodes)
            throw CapExceededError{"sgi_oracle: instance exceeds the configured caps"};
        SgiSearch search{query, host, {query.nodes.begin(), query.nodes.end()}, {}, {}};
        return search.search(0);
    }

    auto gs_oracle(const HostGraph & query, const HostGraph & host)
        -> optional<set<pair<NodeId, NodeId>>>
    {
        set<pair<NodeId, NodeId>> relation;
        for (auto & u : query.nodes)
            for (auto & v : host.nodes)
                relation.emplace(u, v);

        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = relation.begin(); it != relation.end();) {
                auto & [u, v] = *it;
                bool ok = true;
                for (auto & e : query.out(u)) {
                    bool matched = false;
                    for (auto & f : host.out(v))
                        if (f.label == e.label && relation.contains({e.dst, f.dst})) {
                            matched = true;
                            break;
                        }
                    if (! matched) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    ++it;
                else {
                    it = relation.erase(it);
                    changed = true;
                }
            }
        }

        for (auto & u : query.nodes) {
            bool represented = false;
            for (auto & v : host.nodes)
                if (relation.contains({u, v})) {
                    represented = true;
                    break;
                }
            if (! represented)
                return std::nullopt;
        }
        return relation;
    }

    auto rlpm_oracle(const RegexPtr & r, const HostGraph & host) -> bool
    {
        auto simplified = simplify_empty(r);
        if (std::holds_alternative<ReEmpty>(simplified->term))
            return false;
        auto nfa = regex_to_nfa(simplified);

        set<pair<NodeId, State>> seen;
        deque<pair<NodeId, State>> queue;
        for (auto & v : host.nodes) {
            seen.emplace(v, nfa.initial);
            queue.emplace_back(v, nfa.initial);
        }
        // acceptance is only tested on states reached through an edge, so
        // the matched path always has length at least one
        while (! queue.empty()) {
            auto [v, q] = queue.front();
            queue.pop_front();
            for (auto & e : host.out(v))
                for (auto & q2 : nfa.delta(q, e.label)) {
                    if (nfa.finals.contains(q2))
                        return true;
                    if (seen.emplace(e.dst, q2).second)
                        queue.emplace_back(e.dst, q2);
                }
        }
        return false;
    }

    namespace
    {
        /* Is there a host path from source to target whose label lies in the
         * automaton's language and whose inner nodes avoid the blocked set?
         * The source is exempt as the first step of the walk, the target by
         * arriving rather than passing through. */
        auto language_path_exists(const Nfa & nfa, const HostGraph & host,
            const NodeId & source, const NodeId & target, const set<NodeId> & blocked) -> bool
        {
            set<pair<NodeId, State>> seen;
            deque<pair<NodeId, State>> queue;

            auto accepting = [&](const NodeId & v, const State & q) {
                return v == target && nfa.finals.contains(q);
            };

            for (auto & e : host.out(source))
                for (auto & q2 : nfa.delta(nfa.initial, e.label)) {
                    if (accepting(e.dst, q2))
                        return true;
                    if (seen.emplace(e.dst, q2).second)
                        queue.emplace_back(e.dst, q2);
                }

            while (! queue.empty()) {
                auto [v, q] = queue.front();
                queue.pop_front();
                if (blocked.contains(v))
                    continue; // may not be passed through
                for (auto & e : host.out(v))
                    for (auto & q2 : nfa.delta(q, e.label)) {
                        if (accepting(e.dst, q2))
                            return true;
                        if (seen.emplace(e.dst, q2).second)
                            queue.emplace_back(e.dst, q2);
                    }
            }
            return false;
        }

        struct RlsgiSearch
        {
            const DecoratedGraph & query;
            const HostGraph & host;
            map<pair<NodeId, NodeId>, Nfa> automata;
            vector<NodeId> query_nodes;
            map<NodeId, NodeId> assignment;
            set<NodeId> used_hosts;

            auto all_edges_matched() -> bool
            {
                set<NodeId> image;
                for (auto & [_, v] : assignment)
                    image.insert(v);
                for (auto & [e, _] : query.edges)
                    if (! language_path_exists(automata.at(e), host,
                            assignment.at(e.first), assignment.at(e.second), image))
                        return false;
                return true;
            }

            auto search(unsigned depth) -> bool
            {
                if (depth == query_nodes.size())
                    return all_edges_matched();
                auto & u = query_nodes[depth];
                for (auto & v : host.nodes) {
                    if (used_hosts.contains(v))
                        continue;
                    assignment.emplace(u, v);
                    used_hosts.insert(v);
                    if (search(depth + 1))
                        return true;
                    assignment.erase(u);
                    used_hosts.erase(v);
                }
                return false;
            }
        };
    }

    auto rlsgi_oracle(const DecoratedGraph & query, const HostGraph & host, const OracleCaps & caps) -> bool
    {
        if (query.nodes.size() > caps.max_query_nodes || host.nodes.size() > caps.max_host_nodes)
            throw CapExceededError{"rlsgi_oracle: instance exceeds the configured caps"};
        auto problems = validate_decorated(query);
        if (! problems.empty())
            throw PreconditionError{"rlsgi_oracle: " + problems.front()};

        RlsgiSearch search{query, host, {}, {query.nodes.begin(), query.nodes.end()}, {}, {}};
        for (auto & [e, lang] : query.edges)
            search.automata.emplace(e, regex_to_nfa(simplify_empty(lang)));
        return search.search(0);
    }
}
