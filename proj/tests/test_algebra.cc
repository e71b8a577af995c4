#include "helpers.hh"

#include <lgs/algebra.hh>
#include <lgs/errors.hh>
#include <lgs/solver.hh>

#include <doctest.h>

using namespace lgs;
using namespace lgs::test;

namespace
{
    auto fig1_guest() -> Guest
    {
        // two nodes: p with an a-loop and a b-edge to q, one choice set
        // spanning both, q corked; both nodes must
        Guest g;
        g.graph.alphabet = {"a", "b"};
        g.graph.nodes = {"p", "q"};
        g.graph.edges = {Edge{"p", "a", "p"}, Edge{"p", "b", "q"}};
        g.must = {"p", "q"};
        g.choice["p"] = ChoiceFamily{ChoiceSet{Edge{"p", "a", "p"}, Edge{"p", "b", "q"}}};
        g.choice["q"] = ChoiceFamily{ChoiceSet{}};
        return g;
    }
}

TEST_SUITE("algebra")
{
    TEST_CASE("unary guests")
    {
        auto g = unary("p", Flags{.must = true, .uniq = false, .excl = false, .nil = true});
        CHECK(g.graph.nodes == std::set<NodeId>{"p"});
        CHECK(g.graph.edges.empty());
        CHECK(g.must == std::set<NodeId>{"p"});
        CHECK(g.unique.empty());
        CHECK(g.choice_of("p") == ChoiceFamily{ChoiceSet{}});

        auto bare = unary("p", Flags{});
        CHECK(bare.must.empty());
        CHECK(bare.choice_of("p") == ChoiceFamily{});
    }

    TEST_CASE("a must node with no choice sets admits no simulation at all")
    {
        auto g = unary("p", Flags{.must = true, .uniq = false, .excl = false, .nil = false});
        HostGraph host;
        host.nodes = {"h"};
        CHECK(brute_force_lgs(g, host).empty());

        // with the corked edge the single pair is a simulation
        auto corked = unary("p", Flags{.must = true, .uniq = false, .excl = false, .nil = true});
        auto all = brute_force_lgs(corked, host);
        CHECK(! all.empty());
    }

    TEST_CASE("arrow on a single node builds a self-loop")
    {
        auto g = arrow(UnaryTerm{"p", {}}, "a", UnaryTerm{"p", {}});
        CHECK(g.graph.nodes == std::set<NodeId>{"p"});
        CHECK(g.graph.edges == std::set<Edge>{Edge{"p", "a", "p"}});
        CHECK(g.choice_of("p") == ChoiceFamily{ChoiceSet{Edge{"p", "a", "p"}}});
    }

    TEST_CASE("arrow between distinct nodes")
    {
        auto g = arrow(UnaryTerm{"p", Flags{.must = true, .uniq = false, .excl = false, .nil = false}},
            "b", UnaryTerm{"q", {}});
        CHECK(g.must == std::set<NodeId>{"p"});
        CHECK(g.choice_of("p") == ChoiceFamily{ChoiceSet{Edge{"p", "b", "q"}}});
        CHECK(g.choice_of("q") == ChoiceFamily{});
    }

    TEST_CASE("arrow with corked endpoints keeps both empty choices")
    {
        Flags nil_only{.must = false, .uniq = false, .excl = false, .nil = true};
        auto g = arrow(UnaryTerm{"p", nil_only}, "a", UnaryTerm{"q", nil_only});
        CHECK(g.choice_of("p") == ChoiceFamily{ChoiceSet{}, ChoiceSet{Edge{"p", "a", "q"}}});
        CHECK(g.choice_of("q") == ChoiceFamily{ChoiceSet{}});
        CHECK(validate_guest(g).empty());
    }

    TEST_CASE("addition is idempotent and the empty guest is its identity")
    {
        Rng rng{2001};
        std::vector<NodeId> names{"p0", "p1", "p2", "p3", "p4"};
        std::vector<Symbol> symbols{"a", "b", "c"};
        for (int trial = 0; trial < 100; ++trial) {
            auto g = eval_unchecked(random_guest_expr(rng, 3, names, symbols));
            CHECK(add(g, g) == g);
            CHECK(add(g, Guest{}) == g);
            CHECK(mul(g, Guest{}) == g);
        }
    }

    TEST_CASE("two arrows sharing a source sum to two singleton choice sets")
    {
        auto g = add(arrow(UnaryTerm{"p", {}}, "a", UnaryTerm{"q", {}}),
            arrow(UnaryTerm{"p", {}}, "b", UnaryTerm{"r", {}}));
        CHECK(g.choice_of("p") ==
            ChoiceFamily{ChoiceSet{Edge{"p", "a", "q"}}, ChoiceSet{Edge{"p", "b", "r"}}});
    }

    TEST_CASE("multiplication joins choices across shared nodes")
    {
        auto g = mul(arrow(UnaryTerm{"p", Flags{.must = true, .uniq = false, .excl = false, .nil = false}},
                         "a", UnaryTerm{"p", {}}),
            arrow(UnaryTerm{"p", {}}, "b", UnaryTerm{"q", {}}));
        auto with_cork = add(unary("q", Flags{.must = true, .uniq = false, .excl = false, .nil = true}), g);
        CHECK(with_cork == fig1_guest());
    }

    TEST_CASE("multiplication of node-disjoint guests is addition")
    {
        Rng rng{2002};
        std::vector<Symbol> symbols{"a", "b"};
        for (int trial = 0; trial < 50; ++trial) {
            auto e1 = random_guest_expr(rng, 3, {"p0", "p1"}, symbols);
            auto e2 = random_guest_expr(rng, 3, {"q0", "q1"}, symbols);
            auto g1 = eval_unchecked(e1), g2 = eval_unchecked(e2);
            CHECK(mul(g1, g2) == add(g1, g2));
        }
    }

    TEST_CASE("renaming rewrites edges, decorations and choices")
    {
        auto g = arrow(UnaryTerm{"a", {}}, "x", UnaryTerm{"b", {}});
        auto renamed = rename(g, "a", "c");
        CHECK(renamed.graph.nodes == std::set<NodeId>{"b", "c"});
        CHECK(renamed.graph.edges == std::set<Edge>{Edge{"c", "x", "b"}});
        CHECK(renamed.choice_of("c") == ChoiceFamily{ChoiceSet{Edge{"c", "x", "b"}}});

        auto loop = arrow(UnaryTerm{"a", {}}, "x", UnaryTerm{"a", {}});
        auto loop_renamed = rename(loop, "a", "c");
        CHECK(loop_renamed.graph.edges == std::set<Edge>{Edge{"c", "x", "c"}});
    }

    TEST_CASE("renaming errors outside its contract")
    {
        auto g = unary("p", {});
        CHECK_THROWS_AS(rename(g, "zz", "q"), PreconditionError);
        CHECK_THROWS_AS(rename(add(g, unary("q", {})), "p", "q"), PreconditionError);
    }

    TEST_CASE("merge-mode renaming unions choices onto the survivor")
    {
        auto left = arrow(UnaryTerm{"p", {}}, "a", UnaryTerm{"t", Flags{.must = false, .uniq = false, .excl = false, .nil = true}});
        auto right = arrow(UnaryTerm{"q", Flags{.must = true, .uniq = false, .excl = false, .nil = false}},
            "b", UnaryTerm{"r", {}});
        auto g = add(left, right);
        auto merged = rename(g, "q", "t", RenameMode::merge);
        CHECK(merged.graph.nodes == std::set<NodeId>{"p", "r", "t"});
        CHECK(merged.graph.edges == std::set<Edge>{Edge{"p", "a", "t"}, Edge{"t", "b", "r"}});
        CHECK(merged.must == std::set<NodeId>{"t"});
        CHECK(merged.choice_of("t") == ChoiceFamily{ChoiceSet{}, ChoiceSet{Edge{"t", "b", "r"}}});
    }

    TEST_CASE("renaming to a fresh name and back is the identity")
    {
        Rng rng{2003};
        std::vector<NodeId> names{"p0", "p1", "p2"};
        std::vector<Symbol> symbols{"a", "b"};
        for (int trial = 0; trial < 100; ++trial) {
            auto g = eval_unchecked(random_guest_expr(rng, 3, names, symbols));
            if (g.graph.nodes.empty())
                continue;
            std::vector<NodeId> present(g.graph.nodes.begin(), g.graph.nodes.end());
            auto & victim = pick_one(rng, present);
            auto there = rename(g, victim, "fresh");
            auto back = rename(there, "fresh", victim);
            CHECK(back == g);
        }
    }

    TEST_CASE("eval rejects terms denoting no guest")
    {
        // q is a bare target on the left but a source on the right, so the
        // multiplication leaves its edge uncovered by any choice set
        auto e = expr_mul(expr_arrow(UnaryTerm{"p", {}}, "a", UnaryTerm{"q", {}}),
            expr_arrow(UnaryTerm{"q", {}}, "b", UnaryTerm{"r", {}}));
        CHECK_THROWS_AS(eval(e), InvariantError);
        CHECK(validate_guest(eval_unchecked(e)).size() > 0);
    }

    TEST_CASE("evaluated flags union across mentions of the same name")
    {
        auto e = expr_add(expr_arrow(UnaryTerm{"p", Flags{.must = true, .uniq = false, .excl = false, .nil = false}},
                              "a", UnaryTerm{"p", {}}),
            expr_unary(UnaryTerm{"p", Flags{.must = false, .uniq = true, .excl = false, .nil = false}}));
        auto g = eval(e);
        CHECK(g.must == std::set<NodeId>{"p"});
        CHECK(g.unique == std::set<NodeId>{"p"});
    }

    TEST_CASE("the worked normal form example")
    {
        auto expr = normal_form(fig1_guest());
        CHECK(is_normal_form(expr));
        CHECK(eval(expr) == fig1_guest());
    }

    TEST_CASE("normal form of the empty guest is the empty term")
    {
        auto expr = normal_form(Guest{});
        CHECK(std::holds_alternative<ExprEmpty>(expr->term));
    }

    TEST_CASE("normal forms round-trip random valid guests")
    {
        Rng rng{2004};
        for (int trial = 0; trial < 200; ++trial) {
            auto graph = random_graph(rng, 4, {"a", "b"}, 0.35);
            auto g = random_guest(rng, graph);
            // the term algebra cannot carry unused symbols
            g.graph.alphabet.clear();
            for (auto & e : g.graph.edges)
                g.graph.alphabet.insert(e.label);
            REQUIRE(validate_guest(g).empty());
            auto expr = normal_form(g);
            CHECK(is_normal_form(expr));
            CHECK(eval(expr) == g);
        }
    }

    TEST_CASE("linear choice singles out each edge")
    {
        auto guest = fig2_guest();
        CHECK(guest.choice_of("u") ==
            ChoiceFamily{ChoiceSet{Edge{"u", "a", "u"}}, ChoiceSet{Edge{"u", "a", "m"}}});
        CHECK(guest.choice_of("v") == ChoiceFamily{ChoiceSet{}});

        Rng rng{2005};
        for (int trial = 0; trial < 50; ++trial) {
            auto graph = random_graph(rng, 4, {"a", "b"}, 0.4);
            auto g = linear_choice(graph, {});
            CHECK(validate_guest(g).empty());
            for (auto & [v, family] : g.choice)
                for (auto & gamma : family)
                    CHECK(gamma.size() <= 1);
        }
    }

    TEST_CASE("linear choice rejects foreign must nodes")
    {
        CHECK_THROWS_AS(linear_choice(HostGraph{}, {"ghost"}), PreconditionError);
    }

    TEST_CASE("multiplication is not idempotent once choices alternate")
    {
        // two singleton choice sets at p; multiplying the guest with itself
        // manufactures their union as a third set
        auto g = add(arrow(UnaryTerm{"p", {}}, "a", UnaryTerm{"q", {}}),
            arrow(UnaryTerm{"p", {}}, "b", UnaryTerm{"r", {}}));
        auto squared = mul(g, g);
        CHECK(squared != g);
        CHECK(squared.choice_of("p").contains(ChoiceSet{Edge{"p", "a", "q"}, Edge{"p", "b", "r"}}));
    }

    TEST_CASE("multiplication does not distribute over addition across node sets")
    {
        // x is shared with g2 but not with g3, so the right-hand side keeps
        // an extra unjoined copy of x's choice
        auto g1 = arrow(UnaryTerm{"x", {}}, "a", UnaryTerm{"y", {}});
        auto g2 = arrow(UnaryTerm{"x", {}}, "b", UnaryTerm{"z", {}});
        auto g3 = arrow(UnaryTerm{"w", {}}, "c", UnaryTerm{"w", {}});
        auto lhs = mul(g1, add(g2, g3));
        auto rhs = add(mul(g1, g2), mul(g1, g3));
        CHECK(lhs != rhs);
    }
}
