#include <lgs/algebra.hh>
#include <lgs/errors.hh>

#include <algorithm>

using std::move;
using std::make_shared;
using std::set;
using std::string;
using std::vector;

namespace lgs
{
    auto expr_empty() -> GuestExprPtr
    {
        return make_shared<const GuestExpr>(GuestExpr{ExprEmpty{}});
    }

    auto expr_unary(UnaryTerm u) -> GuestExprPtr
    {
        return make_shared<const GuestExpr>(GuestExpr{ExprUnary{move(u)}});
    }

    auto expr_arrow(UnaryTerm src, Symbol label, UnaryTerm dst) -> GuestExprPtr
    {
        return make_shared<const GuestExpr>(GuestExpr{ExprArrow{move(src), move(label), move(dst)}});
    }

    auto expr_add(GuestExprPtr l, GuestExprPtr r) -> GuestExprPtr
    {
        return make_shared<const GuestExpr>(GuestExpr{ExprAdd{move(l), move(r)}});
    }

    auto expr_mul(GuestExprPtr l, GuestExprPtr r) -> GuestExprPtr
    {
        return make_shared<const GuestExpr>(GuestExpr{ExprMul{move(l), move(r)}});
    }

    auto expr_rename(GuestExprPtr inner, NodeId from, NodeId to) -> GuestExprPtr
    {
        return make_shared<const GuestExpr>(GuestExpr{ExprRename{move(inner), move(from), move(to)}});
    }

    auto unary(const NodeId & name, const Flags & flags) -> Guest
    {
        Guest g;
        g.graph.nodes.insert(name);
        if (flags.must)
            g.must.insert(name);
        if (flags.uniq)
            g.unique.insert(name);
        if (flags.excl)
            g.exclusive.insert(name);
        g.choice[name] = flags.nil ? ChoiceFamily{{}} : ChoiceFamily{};
        return g;
    }

    auto arrow(const UnaryTerm & src, const Symbol & label, const UnaryTerm & dst) -> Guest
    {
        Guest g;
        g.graph.alphabet.insert(label);
        g.graph.nodes.insert(src.name);
        g.graph.nodes.insert(dst.name);
        Edge e{src.name, label, dst.name};
        g.graph.edges.insert(e);

        auto decorate = [&](const UnaryTerm & t) {
            if (t.flags.must)
                g.must.insert(t.name);
            if (t.flags.uniq)
                g.unique.insert(t.name);
            if (t.flags.excl)
                g.exclusive.insert(t.name);
        };
        decorate(src);
        decorate(dst);

        ChoiceFamily c_src = src.flags.nil ? ChoiceFamily{{}} : ChoiceFamily{};
        ChoiceFamily c_dst = dst.flags.nil ? ChoiceFamily{{}} : ChoiceFamily{};

        if (src.name == dst.name) {
            ChoiceFamily merged = c_src;
            merged.insert(ChoiceSet{e});
            merged.insert(c_dst.begin(), c_dst.end());
            g.choice[src.name] = merged;
        }
        else {
            ChoiceFamily with_edge = c_src;
            with_edge.insert(ChoiceSet{e});
            g.choice[src.name] = with_edge;
            g.choice[dst.name] = c_dst;
        }
        return g;
    }

    namespace
    {
        template <typename CombineShared_>
        auto combine(const Guest & g1, const Guest & g2, CombineShared_ && shared) -> Guest
        {
            Guest g;
            auto union_into = [](const auto & a, const auto & b, auto & out) {
                out = a;
                out.insert(b.begin(), b.end());
            };
            union_into(g1.graph.alphabet, g2.graph.alphabet, g.graph.alphabet);
            union_into(g1.graph.nodes, g2.graph.nodes, g.graph.nodes);
            union_into(g1.graph.edges, g2.graph.edges, g.graph.edges);
            union_into(g1.must, g2.must, g.must);
            union_into(g1.unique, g2.unique, g.unique);
            union_into(g1.exclusive, g2.exclusive, g.exclusive);

            for (auto & v : g.graph.nodes) {
                bool in1 = g1.graph.nodes.contains(v), in2 = g2.graph.nodes.contains(v);
                if (in1 && in2)
                    g.choice[v] = shared(g1.choice_of(v), g2.choice_of(v));
                else if (in1)
                    g.choice[v] = g1.choice_of(v);
                else
                    g.choice[v] = g2.choice_of(v);
            }
            return g;
        }
    }

    auto add(const Guest & g1, const Guest & g2) -> Guest
    {
        return combine(g1, g2, [](const ChoiceFamily & a, const ChoiceFamily & b) {
            ChoiceFamily result = a;
            result.insert(b.begin(), b.end());
            return result;
        });
    }

    auto mul(const Guest & g1, const Guest & g2) -> Guest
    {
        return combine(g1, g2, [](const ChoiceFamily & a, const ChoiceFamily & b) {
            ChoiceFamily result;
            for (auto & ga : a)
                for (auto & gb : b) {
                    ChoiceSet u = ga;
                    u.insert(gb.begin(), gb.end());
                    result.insert(move(u));
                }
            return result;
        });
    }

    namespace
    {
        auto subst(const NodeId & x, const NodeId & from, const NodeId & to) -> NodeId
        {
            return x == from ? to : x;
        }

        auto subst_edge(const Edge & e, const NodeId & from, const NodeId & to) -> Edge
        {
            return Edge{subst(e.src, from, to), e.label, subst(e.dst, from, to)};
        }

        auto subst_family(const ChoiceFamily & f, const NodeId & from, const NodeId & to) -> ChoiceFamily
        {
            ChoiceFamily result;
            for (auto & gamma : f) {
                ChoiceSet s;
                for (auto & e : gamma)
                    s.insert(subst_edge(e, from, to));
                result.insert(move(s));
            }
            return result;
        }
    }

    auto rename(const Guest & g, const NodeId & from, const NodeId & to, RenameMode mode) -> Guest
    {
        if (! g.graph.nodes.contains(from))
            throw PreconditionError{"rename: unknown node " + from};
        bool target_exists = g.graph.nodes.contains(to);
        if (target_exists && mode == RenameMode::strict)
            throw PreconditionError{"rename: node " + to + " already exists"};

        Guest result;
        result.graph.alphabet = g.graph.alphabet;
        for (auto & v : g.graph.nodes)
            result.graph.nodes.insert(subst(v, from, to));
        for (auto & e : g.graph.edges)
            result.graph.edges.insert(subst_edge(e, from, to));
        for (auto & v : g.must)
            result.must.insert(subst(v, from, to));
        for (auto & v : g.unique)
            result.unique.insert(subst(v, from, to));
        for (auto & v : g.exclusive)
            result.exclusive.insert(subst(v, from, to));

        for (auto & v : result.graph.nodes) {
            if (v == to) {
                ChoiceFamily family = subst_family(g.choice_of(from), from, to);
                if (target_exists) {
                    // merge combines the two nodes' families by union
                    auto other = subst_family(g.choice_of(to), from, to);
                    family.insert(other.begin(), other.end());
                }
                result.choice[v] = family;
            }
            else
                result.choice[v] = subst_family(g.choice_of(v), from, to);
        }
        return result;
    }

    auto eval_unchecked(const GuestExprPtr & expr) -> Guest
    {
        struct Visitor
        {
            auto operator()(const ExprEmpty &) -> Guest
            {
                return Guest{};
            }

            auto operator()(const ExprUnary & u) -> Guest
            {
                return unary(u.node.name, u.node.flags);
            }

            auto operator()(const ExprArrow & a) -> Guest
            {
                return arrow(a.src, a.label, a.dst);
            }

            auto operator()(const ExprAdd & a) -> Guest
            {
                return add(eval_unchecked(a.left), eval_unchecked(a.right));
            }

            auto operator()(const ExprMul & m) -> Guest
            {
                return mul(eval_unchecked(m.left), eval_unchecked(m.right));
            }

            auto operator()(const ExprRename & r) -> Guest
            {
                return rename(eval_unchecked(r.inner), r.from, r.to);
            }
        };
        return std::visit(Visitor{}, expr->term);
    }

    auto eval(const GuestExprPtr & expr) -> Guest
    {
        auto g = eval_unchecked(expr);
        auto problems = validate_guest(g);
        if (! problems.empty()) {
            string message = "expression does not denote a guest:";
            for (auto & p : problems)
                message += "\n  " + p;
            throw InvariantError{message};
        }
        return g;
    }

    namespace
    {
        auto flags_of(const Guest & g, const NodeId & v) -> Flags
        {
            return Flags{
                .must = g.must.contains(v),
                .uniq = g.unique.contains(v),
                .excl = g.exclusive.contains(v),
                .nil = g.choice_of(v).contains(ChoiceSet{})};
        }
    }

    auto normal_form(const Guest & g) -> GuestExprPtr
    {
        vector<GuestExprPtr> terms;
        for (auto & v : g.graph.nodes)
            terms.push_back(expr_unary(UnaryTerm{v, flags_of(g, v)}));

        for (auto & v : g.graph.nodes)
            for (auto & gamma : g.choice_of(v)) {
                if (gamma.empty())
                    continue; // carried by the unary's nil flag
                GuestExprPtr product;
                for (auto & e : gamma) {
                    auto factor = expr_arrow(UnaryTerm{e.src, {}}, e.label, UnaryTerm{e.dst, {}});
                    product = product ? expr_mul(product, factor) : factor;
                }
                terms.push_back(product);
            }

        if (terms.empty())
            return expr_empty();
        GuestExprPtr sum;
        for (auto & t : terms)
            sum = sum ? expr_add(sum, t) : t;
        return sum;
    }

    auto is_normal_form(const GuestExprPtr & expr) -> bool
    {
        struct Check
        {
            static auto elementary(const GuestExprPtr & e) -> bool
            {
                return std::holds_alternative<ExprEmpty>(e->term) ||
                    std::holds_alternative<ExprUnary>(e->term) ||
                    std::holds_alternative<ExprArrow>(e->term);
            }

            static auto product(const GuestExprPtr & e) -> bool
            {
                if (auto m = std::get_if<ExprMul>(&e->term))
                    return product(m->left) && product(m->right);
                return elementary(e);
            }

            static auto sum(const GuestExprPtr & e) -> bool
            {
                if (auto a = std::get_if<ExprAdd>(&e->term))
                    return sum(a->left) && sum(a->right);
                return product(e);
            }
        };
        return Check::sum(expr);
    }

    auto linear_choice(const HostGraph & graph, const set<NodeId> & must) -> Guest
    {
        for (auto & m : must)
            if (! graph.nodes.contains(m))
                throw PreconditionError{"linear_choice: must node " + m + " is not a graph node"};

        Guest g;
        g.graph = graph;
        g.must = must;
        for (auto & v : graph.nodes) {
            ChoiceFamily family;
            auto out = graph.out(v);
            if (out.empty())
                family.insert(ChoiceSet{});
            else
                for (auto & e : out)
                    family.insert(ChoiceSet{e});
            g.choice[v] = move(family);
        }
        return g;
    }
}
