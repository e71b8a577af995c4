#include <lgs/errors.hh>
#include <lgs/solver.hh>

#include <algorithm>
#include <atomic>
#include <future>
#include <map>

using std::move;
using std::map;
using std::optional;
using std::pair;
using std::set;
using std::vector;

namespace lgs
{
    namespace
    {
        // guest-side facts that stay fixed across a whole solve
        struct GuestFacts
        {
            const Guest & guest;
            map<NodeId, vector<NodeId>> musts_reachable; // u -> must nodes with a path from u

            explicit GuestFacts(const Guest & g) :
                guest(g)
            {
                auto reach = reachability(g.graph);
                for (auto & u : g.graph.nodes)
                    for (auto & m : g.must)
                        if (reach.contains({u, m}))
                            musts_reachable[u].push_back(m);
            }
        };

        struct PruneState
        {
            set<PairNode> nodes;
            map<PairNode, set<PairEdge>> out, in;
            bool changed = false;

            explicit PruneState(const CandidateSubgraph & start) :
                nodes(start.pair_nodes)
            {
                for (auto & p : nodes) {
                    out[p];
                    in[p];
                }
                for (auto & e : start.pair_edges) {
                    out[e.src].insert(e);
                    in[e.dst].insert(e);
                }
            }

            auto erase_edge(const PairEdge & e) -> void
            {
                out[e.src].erase(e);
                in[e.dst].erase(e);
                changed = true;
            }

            auto erase_node(const PairNode & p) -> void
            {
                for (auto & e : vector<PairEdge>(out[p].begin(), out[p].end()))
                    erase_edge(e);
                for (auto & e : vector<PairEdge>(in[p].begin(), in[p].end()))
                    erase_edge(e);
                nodes.erase(p);
                out.erase(p);
                in.erase(p);
                changed = true;
            }

            auto to_candidate() const -> CandidateSubgraph
            {
                CandidateSubgraph result;
                result.pair_nodes = nodes;
                for (auto & [_, edges] : out)
                    result.pair_edges.insert(edges.begin(), edges.end());
                return result;
            }
        };

        auto realised_projections(const PruneState & s, const PairNode & p) -> set<Edge>
        {
            set<Edge> result;
            auto it = s.out.find(p);
            if (it == s.out.end())
                return result;
            for (auto & e : it->second)
                result.insert(Edge{e.src.guest_node, e.label, e.dst.guest_node});
            return result;
        }

        auto run_prune(const GuestFacts & facts, PruneState & state) -> void
        {
            auto & guest = facts.guest;
            do {
                state.changed = false;

                /* Backward reachability snapshot per must node. Removals in
                 * this sweep may stale it, but only towards keeping a pair
                 * one sweep longer; the loop runs to a fixed point. */
                map<NodeId, set<PairNode>> reaches_must;
                {
                    auto cand = state.to_candidate();
                    map<NodeId, set<PairNode>> pairs_of;
                    for (auto & p : state.nodes)
                        pairs_of[p.guest_node].insert(p);
                    for (auto & m : guest.must) {
                        auto targets = pairs_of.find(m);
                        reaches_must[m] = pairs_reaching(cand,
                            targets == pairs_of.end() ? set<PairNode>{} : targets->second);
                    }
                }

                auto snapshot = vector<PairNode>(state.nodes.begin(), state.nodes.end());
                for (auto & p : snapshot) {
                    if (! state.nodes.contains(p))
                        continue;
                    auto & family = guest.choice_of(p.guest_node);

                    // edge rule, iterated locally because removals shrink
                    // the realised set of this very pair
                    bool local_change = true;
                    while (local_change) {
                        local_change = false;
                        auto realised = realised_projections(state, p);
                        for (auto & e : vector<PairEdge>(state.out[p].begin(), state.out[p].end())) {
                            Edge projection{e.src.guest_node, e.label, e.dst.guest_node};
                            bool justified = false;
                            for (auto & gamma : family)
                                if (gamma.contains(projection) &&
                                    std::includes(realised.begin(), realised.end(), gamma.begin(), gamma.end())) {
                                    justified = true;
                                    break;
                                }
                            if (! justified) {
                                state.erase_edge(e);
                                local_change = true;
                            }
                        }
                    }

                    // node rule
                    bool remove = false;
                    if (state.out[p].empty() && ! family.contains(ChoiceSet{}))
                        remove = true;
                    else {
                        auto musts = facts.musts_reachable.find(p.guest_node);
                        if (musts != facts.musts_reachable.end())
                            for (auto & m : musts->second)
                                if (! reaches_must.at(m).contains(p)) {
                                    remove = true;
                                    break;
                                }
                    }
                    if (remove)
                        state.erase_node(p);
                }
            } while (state.changed);
        }

        auto must_nodes_matched(const Guest & guest, const PruneState & state) -> bool
        {
            set<NodeId> matched;
            for (auto & p : state.nodes)
                matched.insert(p.guest_node);
            for (auto & m : guest.must)
                if (! matched.contains(m))
                    return false;
            return true;
        }

        struct Conflict
        {
            // branches a pair must pick from: fewer branches first, then
            // lexicographic, so search order is reproducible
            vector<vector<PairNode>> removals_per_branch;
            std::size_t branch_count;
            int kind; // 0 = unique, 1 = exclusive
            NodeId a, b;

            auto key() const -> std::tuple<std::size_t, int, NodeId, NodeId>
            {
                return {branch_count, kind, a, b};
            }
        };

        auto find_conflict(const Guest & guest, const PruneState & state) -> optional<Conflict>
        {
            optional<Conflict> best;
            auto consider = [&](Conflict c) {
                if (! best || c.key() < best->key())
                    best = move(c);
            };

            map<NodeId, vector<NodeId>> partners;   // unique guest node -> hosts
            map<NodeId, vector<NodeId>> assigned_to; // host -> guest nodes
            for (auto & p : state.nodes) {
                if (guest.unique.contains(p.guest_node))
                    partners[p.guest_node].push_back(p.host_node);
                assigned_to[p.host_node].push_back(p.guest_node);
            }

            for (auto & [u, hosts] : partners) {
                if (hosts.size() < 2)
                    continue;
                Conflict c;
                c.branch_count = hosts.size();
                c.kind = 0;
                c.a = u;
                for (auto & keep : hosts) {
                    vector<PairNode> removals;
                    for (auto & other : hosts)
                        if (other != keep)
                            removals.push_back(PairNode{u, other});
                    c.removals_per_branch.push_back(move(removals));
                }
                consider(move(c));
            }

            for (auto & [h, guests] : assigned_to) {
                if (guests.size() < 2)
                    continue;
                for (auto & u : guests) {
                    if (! guest.exclusive.contains(u))
                        continue;
                    Conflict c;
                    c.branch_count = 2;
                    c.kind = 1;
                    c.a = u;
                    c.b = h;
                    c.removals_per_branch.push_back({PairNode{u, h}});
                    vector<PairNode> others;
                    for (auto & w : guests)
                        if (w != u)
                            others.push_back(PairNode{w, h});
                    c.removals_per_branch.push_back(move(others));
                    consider(move(c));
                    break; // one exclusive conflict per host node suffices
                }
            }
            return best;
        }

        struct SearchContext
        {
            const GuestFacts & facts;
            std::atomic<int> budget;
        };

        auto solve_rec(SearchContext & ctx, PruneState state) -> optional<CandidateSubgraph>
        {
            run_prune(ctx.facts, state);
            if (! must_nodes_matched(ctx.facts.guest, state))
                return std::nullopt;

            auto conflict = find_conflict(ctx.facts.guest, state);
            if (! conflict)
                return state.to_candidate();

            vector<PruneState> branches;
            for (auto & removals : conflict->removals_per_branch) {
                auto branch = state;
                branch.changed = false;
                for (auto & p : removals)
                    if (branch.nodes.contains(p))
                        branch.erase_node(p);
                branches.push_back(move(branch));
            }

            /* Parallel exploration still selects the earliest successful
             * branch, so the witness does not depend on the thread count. */
            bool parallel = false;
            if (branches.size() > 1) {
                int want = int(branches.size()) - 1;
                int have = ctx.budget.load();
                while (have >= want && ! ctx.budget.compare_exchange_weak(have, have - want))
                    ;
                parallel = have >= want;
            }

            if (parallel) {
                vector<std::future<optional<CandidateSubgraph>>> futures;
                for (std::size_t i = 1; i < branches.size(); ++i)
                    futures.push_back(std::async(std::launch::async,
                        [&ctx, branch = move(branches[i])]() mutable { return solve_rec(ctx, move(branch)); }));
                auto first = solve_rec(ctx, move(branches[0]));
                vector<optional<CandidateSubgraph>> results;
                results.push_back(move(first));
                for (auto & f : futures)
                    results.push_back(f.get());
                ctx.budget.fetch_add(int(branches.size()) - 1);
                for (auto & r : results)
                    if (r)
                        return r;
                return std::nullopt;
            }

            for (auto & branch : branches) {
                auto result = solve_rec(ctx, move(branch));
                if (result)
                    return result;
            }
            return std::nullopt;
        }
    }

    auto prune(const Guest & guest, const HostGraph & host, const CandidateSubgraph & start) -> CandidateSubgraph
    {
        auto problems = validate_candidate(guest, host, start);
        if (! problems.empty())
            throw PreconditionError{"prune: start is not a subgraph of the product: " + problems.front()};
        GuestFacts facts{guest};
        PruneState state{start};
        run_prune(facts, state);
        return state.to_candidate();
    }

    auto greatest_lgs(const Guest & guest, const HostGraph & host) -> optional<CandidateSubgraph>
    {
        if (! guest.unique.empty() || ! guest.exclusive.empty())
            throw PreconditionError{"greatest_lgs: the unique and exclusive sets must be empty"};
        GuestFacts facts{guest};
        PruneState state{full_product(guest, host)};
        run_prune(facts, state);
        if (! must_nodes_matched(guest, state))
            return std::nullopt;
        return state.to_candidate();
    }

    auto solve_emptiness(const Guest & guest, const HostGraph & host, const SolveOptions & options)
        -> optional<CandidateSubgraph>
    {
        GuestFacts facts{guest};
        SearchContext ctx{facts, options.threads == 0 ? 0 : int(options.threads) - 1};
        return solve_rec(ctx, PruneState{full_product(guest, host)});
    }

    auto brute_force_lgs(const Guest & guest, const HostGraph & host, std::size_t cap)
        -> vector<CandidateSubgraph>
    {
        auto product = full_product(guest, host);
        if (cap > 30)
            throw PreconditionError{"brute_force_lgs: cap must stay below 31"};
        if (product.pair_nodes.size() + product.pair_edges.size() > cap)
            throw CapExceededError{"brute_force_lgs: product has " +
                std::to_string(product.pair_nodes.size()) + " pairs and " +
                std::to_string(product.pair_edges.size()) + " edges, cap is " + std::to_string(cap)};

        vector<PairNode> nodes(product.pair_nodes.begin(), product.pair_nodes.end());
        vector<CandidateSubgraph> found;

        for (unsigned long node_mask = 0; node_mask < (1ul << nodes.size()); ++node_mask) {
            CandidateSubgraph cand;
            for (unsigned i = 0; i < nodes.size(); ++i)
                if (node_mask & (1ul << i))
                    cand.pair_nodes.insert(nodes[i]);

            vector<PairEdge> induced;
            for (auto & e : product.pair_edges)
                if (cand.pair_nodes.contains(e.src) && cand.pair_nodes.contains(e.dst))
                    induced.push_back(e);

            for (unsigned long edge_mask = 0; edge_mask < (1ul << induced.size()); ++edge_mask) {
                cand.pair_edges.clear();
                for (unsigned i = 0; i < induced.size(); ++i)
                    if (edge_mask & (1ul << i))
                        cand.pair_edges.insert(induced[i]);
                if (check_all(guest, host, cand).pass())
                    found.push_back(cand);
            }
        }
        return found;
    }
}
