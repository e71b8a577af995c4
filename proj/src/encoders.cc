#include <lgs/algebra.hh>
#include <lgs/encoders.hh>
#include <lgs/errors.hh>
#include <lgs/nfa.hh>

using std::set;
using std::string;
using std::vector;

namespace lgs
{
    namespace
    {
        /* The translations for subgraph isomorphism and graph simulation
         * share everything but the node decorations: choice demands each
         * node's whole out-set at once, and sinks are corked. */
        auto whole_out_choice(const HostGraph & query) -> Guest
        {
            Guest g;
            g.graph = query;
            for (auto & v : query.nodes) {
                auto out = query.out(v);
                if (out.empty())
                    g.choice[v] = ChoiceFamily{{}};
                else
                    g.choice[v] = ChoiceFamily{ChoiceSet(out.begin(), out.end())};
            }
            return g;
        }
    }

    auto encode_sgi(const HostGraph & query) -> Guest
    {
        auto g = whole_out_choice(query);
        g.must = query.nodes;
        g.unique = query.nodes;
        g.exclusive = query.nodes;
        return g;
    }

    auto encode_gs(const HostGraph & query) -> Guest
    {
        auto g = whole_out_choice(query);
        g.must = query.nodes;
        return g;
    }

    auto encode_rlpm(const RegexPtr & r) -> Guest
    {
        if (is_empty_language(r))
            throw PreconditionError{"encode_rlpm: the empty language matches no path"};
        return nfa_to_guest(normalize_nfa(regex_to_nfa(r)));
    }

    auto validate_decorated(const DecoratedGraph & q) -> vector<string>
    {
        vector<string> problems;
        for (auto & v : q.nodes)
            if (v.find('#') != string::npos)
                problems.push_back("node " + v + ": '#' is reserved for automaton states");
        for (auto & [e, lang] : q.edges) {
            string name = "edge (" + e.first + "," + e.second + ")";
            if (! q.nodes.contains(e.first))
                problems.push_back(name + ": unknown source node");
            if (! q.nodes.contains(e.second))
                problems.push_back(name + ": unknown target node");
            if (is_empty_language(lang))
                problems.push_back(name + ": empty language");
            for (auto & a : regex_alphabet(lang))
                if (! q.alphabet.contains(a))
                    problems.push_back(name + ": symbol " + a + " outside alphabet");
        }
        return problems;
    }

    auto encode_rlsgi(const DecoratedGraph & query) -> Guest
    {
        auto problems = validate_decorated(query);
        if (! problems.empty()) {
            string message = "encode_rlsgi:";
            for (auto & p : problems)
                message += "\n  " + p;
            throw PreconditionError{message};
        }

        Guest result;
        bool have_product = false;
        Guest product;
        for (auto & [e, lang] : query.edges) {
            auto & [src, dst] = e;
            auto prefix = src + "#" + dst + "#";
            auto automaton = normalize_nfa(regex_to_nfa(lang, prefix));
            auto piece = nfa_to_guest(automaton);
            piece = rename(piece, automaton.nfa.initial, src);
            piece = rename(piece, automaton.final_state, dst,
                src == dst ? RenameMode::merge : RenameMode::strict);
            product = have_product ? mul(product, piece) : piece;
            have_product = true;
        }

        for (auto & v : query.nodes)
            result = add(result, unary(v, Flags{.must = true, .uniq = true, .excl = true, .nil = false}));
        if (have_product)
            result = add(result, product);
        canonicalise_choice(result);
        return result;
    }
}
