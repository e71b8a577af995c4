#ifndef LGS_TESTS_HELPERS_HH
#define LGS_TESTS_HELPERS_HH

#include <lgs/algebra.hh>
#include <lgs/encoders.hh>
#include <lgs/guest.hh>
#include <lgs/regex.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace lgs::test
{
    using Rng = std::mt19937;

    inline auto coin(Rng & rng, double p) -> bool
    {
        return std::uniform_real_distribution<double>{0.0, 1.0}(rng) < p;
    }

    inline auto pick_int(Rng & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>{lo, hi}(rng);
    }

    template <typename T_>
    auto pick_one(Rng & rng, const std::vector<T_> & items) -> const T_ &
    {
        return items[pick_int(rng, 0, int(items.size()) - 1)];
    }

    inline auto random_graph(Rng & rng, int max_nodes, const std::vector<Symbol> & symbols,
        double edge_prob, const std::string & prefix = "n") -> HostGraph
    {
        HostGraph g;
        g.alphabet.insert(symbols.begin(), symbols.end());
        int n = pick_int(rng, 1, max_nodes);
        std::vector<NodeId> nodes;
        for (int i = 0; i < n; ++i) {
            nodes.push_back(prefix + std::to_string(i));
            g.nodes.insert(nodes.back());
        }
        for (auto & u : nodes)
            for (auto & v : nodes)
                for (auto & a : symbols)
                    if (coin(rng, edge_prob))
                        g.edges.insert(Edge{u, a, v});
        return g;
    }

    /* Random decorations over a fixed graph. The choice family of each node
     * partitions its out-set, sometimes with an extra subset or the empty
     * set thrown in, so the covering invariant holds by construction. */
    inline auto random_guest(Rng & rng, const HostGraph & graph) -> Guest
    {
        Guest g;
        g.graph = graph;
        for (auto & v : graph.nodes) {
            if (coin(rng, 0.4))
                g.must.insert(v);
            if (coin(rng, 0.3))
                g.unique.insert(v);
            if (coin(rng, 0.3))
                g.exclusive.insert(v);

            auto out = graph.out(v);
            ChoiceFamily family;
            if (out.empty()) {
                if (coin(rng, 0.7))
                    family.insert(ChoiceSet{});
            }
            else {
                std::shuffle(out.begin(), out.end(), rng);
                int groups = pick_int(rng, 1, int(out.size()));
                std::vector<ChoiceSet> parts(groups);
                for (unsigned i = 0; i < out.size(); ++i)
                    parts[i % groups].insert(out[i]);
                for (auto & part : parts)
                    family.insert(part);
                if (coin(rng, 0.25))
                    family.insert(ChoiceSet{});
                if (coin(rng, 0.25)) {
                    ChoiceSet extra;
                    for (auto & e : out)
                        if (coin(rng, 0.5))
                            extra.insert(e);
                    family.insert(extra);
                }
            }
            g.choice[v] = family;
        }
        return g;
    }

    // random structurally valid subgraph of the product
    inline auto random_candidate(Rng & rng, const Guest & guest, const HostGraph & host,
        double node_prob = 0.6, double edge_prob = 0.6) -> CandidateSubgraph
    {
        auto product = full_product(guest, host);
        CandidateSubgraph cand;
        for (auto & p : product.pair_nodes)
            if (coin(rng, node_prob))
                cand.pair_nodes.insert(p);
        for (auto & e : product.pair_edges)
            if (cand.pair_nodes.contains(e.src) && cand.pair_nodes.contains(e.dst) && coin(rng, edge_prob))
                cand.pair_edges.insert(e);
        return cand;
    }

    inline auto random_regex(Rng & rng, int depth, const std::vector<Symbol> & symbols) -> RegexPtr
    {
        if (depth == 0 || coin(rng, 0.3)) {
            if (coin(rng, 0.06))
                return re_empty();
            return re_lit(pick_one(rng, symbols));
        }
        switch (pick_int(rng, 0, 2)) {
        case 0: return re_concat(random_regex(rng, depth - 1, symbols), random_regex(rng, depth - 1, symbols));
        case 1: return re_union(random_regex(rng, depth - 1, symbols), random_regex(rng, depth - 1, symbols));
        default: return re_plus(random_regex(rng, depth - 1, symbols));
        }
    }

    inline auto random_nonempty_regex(Rng & rng, int depth, const std::vector<Symbol> & symbols) -> RegexPtr
    {
        while (true) {
            auto r = random_regex(rng, depth, symbols);
            if (! is_empty_language(r))
                return r;
        }
    }

    inline auto random_flags(Rng & rng) -> Flags
    {
        return Flags{coin(rng, 0.3), coin(rng, 0.2), coin(rng, 0.2), coin(rng, 0.3)};
    }

    /* Expression generator for the algebraic laws: depth-bounded terms over
     * a small shared pool of node names and symbols. */
    inline auto random_guest_expr(Rng & rng, int depth, const std::vector<NodeId> & names,
        const std::vector<Symbol> & symbols) -> GuestExprPtr
    {
        if (depth == 0 || coin(rng, 0.35)) {
            if (coin(rng, 0.08))
                return expr_empty();
            if (coin(rng, 0.45))
                return expr_unary(UnaryTerm{pick_one(rng, names), random_flags(rng)});
            return expr_arrow(UnaryTerm{pick_one(rng, names), random_flags(rng)},
                pick_one(rng, symbols),
                UnaryTerm{pick_one(rng, names), random_flags(rng)});
        }
        auto l = random_guest_expr(rng, depth - 1, names, symbols);
        auto r = random_guest_expr(rng, depth - 1, names, symbols);
        return coin(rng, 0.5) ? expr_add(l, r) : expr_mul(l, r);
    }

    // every word over symbols with length <= max_len, the empty word included
    inline auto words_up_to(const std::vector<Symbol> & symbols, int max_len)
        -> std::vector<std::vector<Symbol>>
    {
        std::vector<std::vector<Symbol>> result{{}};
        std::size_t level_start = 0;
        for (int len = 1; len <= max_len; ++len) {
            std::size_t level_end = result.size();
            for (std::size_t i = level_start; i < level_end; ++i)
                for (auto & a : symbols) {
                    auto w = result[i];
                    w.push_back(a);
                    result.push_back(move(w));
                }
            level_start = level_end;
        }
        return result;
    }

    /* Independent language membership over the syntax tree, by exhaustive
     * splitting. The implementation path under test never sees this. */
    inline auto regex_member(const std::vector<Symbol> & word, const RegexPtr & r) -> bool
    {
        struct Visitor
        {
            const std::vector<Symbol> & word;
            std::size_t from, to;

            auto sub(std::size_t f, std::size_t t, const RegexPtr & inner) const -> bool
            {
                return std::visit(Visitor{word, f, t}, inner->term);
            }

            auto operator()(const ReEmpty &) const -> bool
            {
                return false;
            }

            auto operator()(const ReLit & l) const -> bool
            {
                return to - from == 1 && word[from] == l.sym;
            }

            auto operator()(const ReConcat & c) const -> bool
            {
                for (std::size_t split = from + 1; split < to; ++split)
                    if (sub(from, split, c.left) && sub(split, to, c.right))
                        return true;
                return false;
            }

            auto operator()(const ReUnion & u) const -> bool
            {
                return sub(from, to, u.left) || sub(from, to, u.right);
            }

            auto operator()(const RePlus & p) const -> bool
            {
                if (sub(from, to, p.inner))
                    return true;
                for (std::size_t split = from + 1; split < to; ++split)
                    if (sub(from, split, p.inner) && Visitor{word, split, to}(p))
                        return true;
                return false;
            }
        };
        return std::visit(Visitor{word, 0, word.size()}, r->term);
    }

    // transitive closure by repeated squaring of the adjacency relation
    inline auto closure_by_squaring(const HostGraph & g) -> std::set<std::pair<NodeId, NodeId>>
    {
        std::vector<NodeId> nodes(g.nodes.begin(), g.nodes.end());
        std::map<NodeId, unsigned> index;
        for (unsigned i = 0; i < nodes.size(); ++i)
            index.emplace(nodes[i], i);
        unsigned n = nodes.size();
        std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
        for (auto & e : g.edges)
            r[index.at(e.src)][index.at(e.dst)] = 1;

        auto compose = [&](const auto & a, const auto & b) {
            std::vector<std::vector<char>> c(n, std::vector<char>(n, 0));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned k = 0; k < n; ++k)
                    if (a[i][k])
                        for (unsigned j = 0; j < n; ++j)
                            if (b[k][j])
                                c[i][j] = 1;
            return c;
        };
        auto unite = [&](auto a, const auto & b) {
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    if (b[i][j])
                        a[i][j] = 1;
            return a;
        };

        auto result = r;
        while (true) {
            auto next = unite(result, compose(result, result));
            if (next == result)
                break;
            result = move(next);
        }
        std::set<std::pair<NodeId, NodeId>> out;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (result[i][j])
                    out.emplace(nodes[i], nodes[j]);
        return out;
    }

    // plain breadth-first search from every node
    inline auto reach_by_bfs(const HostGraph & g) -> std::set<std::pair<NodeId, NodeId>>
    {
        std::set<std::pair<NodeId, NodeId>> result;
        for (auto & start : g.nodes) {
            std::set<NodeId> seen;
            std::deque<NodeId> queue;
            for (auto & e : g.out(start))
                if (seen.insert(e.dst).second)
                    queue.push_back(e.dst);
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                result.emplace(start, v);
                for (auto & e : g.out(v))
                    if (seen.insert(e.dst).second)
                        queue.push_back(e.dst);
            }
        }
        return result;
    }

    // reference instances from the worked examples

    inline auto fig2_host() -> HostGraph
    {
        HostGraph h;
        h.alphabet = {"a", "b"};
        h.nodes = {"x", "y", "z"};
        h.edges = {Edge{"x", "a", "z"}, Edge{"z", "a", "y"}, Edge{"y", "b", "x"}};
        return h;
    }

    inline auto fig2_guest() -> Guest
    {
        HostGraph g;
        g.alphabet = {"a", "b"};
        g.nodes = {"u", "m", "v"};
        g.edges = {Edge{"u", "a", "u"}, Edge{"u", "a", "m"}, Edge{"m", "b", "v"}};
        return linear_choice(g, {"m"});
    }

    inline auto fig2_witness() -> CandidateSubgraph
    {
        CandidateSubgraph w;
        w.pair_nodes = {PairNode{"u", "x"}, PairNode{"u", "z"}, PairNode{"m", "y"}, PairNode{"v", "x"}};
        w.pair_edges = {
            PairEdge{PairNode{"u", "x"}, "a", PairNode{"u", "z"}},
            PairEdge{PairNode{"u", "z"}, "a", PairNode{"m", "y"}},
            PairEdge{PairNode{"m", "y"}, "b", PairNode{"v", "x"}}};
        return w;
    }

    inline auto fig3_query() -> HostGraph
    {
        HostGraph q;
        q.alphabet = {"a", "b"};
        q.nodes = {"v0", "v1", "v2", "v3"};
        q.edges = {Edge{"v0", "b", "v1"}, Edge{"v2", "b", "v1"}, Edge{"v2", "a", "v0"},
            Edge{"v0", "a", "v3"}, Edge{"v3", "a", "v2"}};
        return q;
    }

    inline auto fig4_query() -> HostGraph
    {
        HostGraph q;
        q.alphabet = {"a", "b"};
        q.nodes = {"s0", "s1"};
        q.edges = {Edge{"s0", "a", "s0"}, Edge{"s0", "b", "s1"}};
        return q;
    }

    inline auto fig7_query() -> DecoratedGraph
    {
        DecoratedGraph q;
        q.alphabet = {"a", "b", "c"};
        q.nodes = {"u", "v", "w"};
        q.edges[{"u", "u"}] = parse_regex("a+");
        q.edges[{"u", "w"}] = parse_regex("b");
        q.edges[{"v", "u"}] = parse_regex("bb");
        q.edges[{"v", "w"}] = parse_regex("(a|b)c+");
        return q;
    }
}

#endif
