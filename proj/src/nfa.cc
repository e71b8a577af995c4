#include <lgs/errors.hh>
#include <lgs/nfa.hh>

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
        const set<State> no_states;
    }

    auto Nfa::delta(const State & q, const Symbol & a) const -> const set<State> &
    {
        auto it = transitions.find({q, a});
        return it == transitions.end() ? no_states : it->second;
    }

    namespace
    {
        /* Position data for the Glushkov construction. Since the grammar is
         * epsilon-free no subterm is nullable, which removes the usual
         * nullability cases from first and follow. */
        struct Positions
        {
            vector<Symbol> symbol_of; // position index -> symbol, 1-based
            vector<set<unsigned>> follow;

            struct Sets
            {
                set<unsigned> first, last;
            };

            auto analyse(const RegexPtr & r) -> Sets
            {
                struct Visitor
                {
                    Positions & p;

                    auto operator()(const ReEmpty &) -> Sets
                    {
                        throw InvariantError{"empty language inside construction"};
                    }

                    auto operator()(const ReLit & l) -> Sets
                    {
                        p.symbol_of.push_back(l.sym);
                        p.follow.emplace_back();
                        unsigned index = p.symbol_of.size();
                        return Sets{{index}, {index}};
                    }

                    auto operator()(const ReConcat & c) -> Sets
                    {
                        auto l = p.analyse(c.left), r = p.analyse(c.right);
                        for (auto & x : l.last)
                            p.follow[x - 1].insert(r.first.begin(), r.first.end());
                        return Sets{l.first, r.last};
                    }

                    auto operator()(const ReUnion & u) -> Sets
                    {
                        auto l = p.analyse(u.left), r = p.analyse(u.right);
                        l.first.insert(r.first.begin(), r.first.end());
                        l.last.insert(r.last.begin(), r.last.end());
                        return l;
                    }

                    auto operator()(const RePlus & q) -> Sets
                    {
                        auto i = p.analyse(q.inner);
                        for (auto & x : i.last)
                            p.follow[x - 1].insert(i.first.begin(), i.first.end());
                        return i;
                    }
                };
                return std::visit(Visitor{*this}, r->term);
            }
        };
    }

    auto regex_to_nfa(const RegexPtr & r, const string & state_prefix) -> Nfa
    {
        auto simplified = simplify_empty(r);

        Nfa n;
        n.initial = state_prefix + "0";
        n.states.insert(n.initial);
        if (std::holds_alternative<ReEmpty>(simplified->term))
            return n; // accepts nothing

        n.alphabet = regex_alphabet(simplified);

        Positions positions;
        auto sets = positions.analyse(simplified);

        auto state_name = [&](unsigned index) { return state_prefix + std::to_string(index); };
        for (unsigned i = 1; i <= positions.symbol_of.size(); ++i)
            n.states.insert(state_name(i));

        for (auto & p : sets.first)
            n.transitions[{n.initial, positions.symbol_of[p - 1]}].insert(state_name(p));
        for (unsigned p = 1; p <= positions.follow.size(); ++p)
            for (auto & q : positions.follow[p - 1])
                n.transitions[{state_name(p), positions.symbol_of[q - 1]}].insert(state_name(q));
        for (auto & p : sets.last)
            n.finals.insert(state_name(p));
        return n;
    }

    namespace
    {
        auto forward_reachable(const Nfa & n, const State & from) -> set<State>
        {
            set<State> seen{from};
            deque<State> queue{from};
            while (! queue.empty()) {
                auto q = queue.front();
                queue.pop_front();
                for (auto & a : n.alphabet)
                    for (auto & q2 : n.delta(q, a))
                        if (seen.insert(q2).second)
                            queue.push_back(q2);
            }
            return seen;
        }

        auto backward_reachable(const Nfa & n, const set<State> & from) -> set<State>
        {
            map<State, vector<State>> rev;
            for (auto & [key, targets] : n.transitions)
                for (auto & t : targets)
                    rev[t].push_back(key.first);
            set<State> seen = from;
            deque<State> queue(from.begin(), from.end());
            while (! queue.empty()) {
                auto q = queue.front();
                queue.pop_front();
                auto it = rev.find(q);
                if (it == rev.end())
                    continue;
                for (auto & q2 : it->second)
                    if (seen.insert(q2).second)
                        queue.push_back(q2);
            }
            return seen;
        }

        auto fresh_name(const set<State> & taken, string base) -> State
        {
            while (taken.contains(base))
                base += "'";
            return base;
        }
    }

    auto normalize_nfa(const Nfa & n) -> NormalizedNfa
    {
        if (n.finals.contains(n.initial))
            throw PreconditionError{"normalize_nfa: automaton accepts the empty word"};
        {
            auto reach = forward_reachable(n, n.initial);
            bool some_final = false;
            for (auto & f : n.finals)
                if (reach.contains(f))
                    some_final = true;
            if (! some_final)
                throw PreconditionError{"normalize_nfa: automaton accepts the empty language"};
        }

        State start = fresh_name(n.states, n.initial + "S");
        State finish = fresh_name(n.states, n.initial + "F");

        Nfa out;
        out.alphabet = n.alphabet;
        out.states = n.states;
        out.states.insert(start);
        out.states.insert(finish);
        out.initial = start;
        out.finals = {finish};

        // every transition into an old final is doubled into the new final
        for (auto & [key, targets] : n.transitions) {
            auto expanded = targets;
            for (auto & t : targets)
                if (n.finals.contains(t)) {
                    expanded.insert(finish);
                    break;
                }
            out.transitions[key] = expanded;
        }
        for (auto & a : n.alphabet) {
            auto it = out.transitions.find({n.initial, a});
            if (it != out.transitions.end())
                out.transitions[{start, a}] = it->second;
        }

        // keep only states lying on some accepting run
        auto useful = forward_reachable(out, start);
        auto coreach = backward_reachable(out, {finish});
        set<State> keep;
        for (auto & q : useful)
            if (coreach.contains(q) || q == finish)
                keep.insert(q);
        keep.insert(start);
        keep.insert(finish);

        Nfa restricted;
        restricted.alphabet = out.alphabet;
        restricted.states = keep;
        restricted.initial = start;
        restricted.finals = {finish};
        for (auto & [key, targets] : out.transitions) {
            if (! keep.contains(key.first))
                continue;
            set<State> kept_targets;
            for (auto & t : targets)
                if (keep.contains(t))
                    kept_targets.insert(t);
            if (! kept_targets.empty())
                restricted.transitions[key] = kept_targets;
        }
        return NormalizedNfa{restricted, finish};
    }

    auto nfa_accepts(const Nfa & n, const vector<Symbol> & word) -> bool
    {
        set<State> current{n.initial};
        for (auto & a : word) {
            if (! n.alphabet.contains(a))
                throw PreconditionError{"nfa_accepts: unknown symbol " + a};
            set<State> next;
            for (auto & q : current) {
                auto & targets = n.delta(q, a);
                next.insert(targets.begin(), targets.end());
            }
            current = move(next);
        }
        for (auto & q : current)
            if (n.finals.contains(q))
                return true;
        return false;
    }

    auto nfa_to_guest(const NormalizedNfa & nn) -> Guest
    {
        auto & n = nn.nfa;
        Guest g;
        g.graph.nodes = n.states;
        g.must.insert(n.initial);
        g.must.insert(nn.final_state);

        for (auto & [key, targets] : n.transitions)
            for (auto & t : targets) {
                g.graph.alphabet.insert(key.second);
                g.graph.edges.insert(Edge{key.first, key.second, t});
            }

        for (auto & q : n.states) {
            ChoiceFamily family;
            for (auto & e : g.graph.out(q))
                family.insert(ChoiceSet{e});
            g.choice[q] = move(family);
        }
        g.choice[nn.final_state].insert(ChoiceSet{});
        return g;
    }
}
