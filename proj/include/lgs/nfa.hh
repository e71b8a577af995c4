#ifndef LGS_NFA_HH
#define LGS_NFA_HH

#include <lgs/guest.hh>
#include <lgs/regex.hh>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace lgs
{
    using State = std::string;

    struct Nfa
    {
        std::set<Symbol> alphabet;
        std::set<State> states;
        std::map<std::pair<State, Symbol>, std::set<State>> transitions;
        State initial;
        std::set<State> finals;

        auto delta(const State & q, const Symbol & a) const -> const std::set<State> &;
    };

    /* Single initial state with no incoming transitions, single final state
     * with no outgoing ones, same language as the source automaton. */
    struct NormalizedNfa
    {
        Nfa nfa;
        State final_state;
    };

    /* Position (Glushkov) construction: natively epsilon-free. States are
     * named prefix + index with the initial state at index 0. */
    auto regex_to_nfa(const RegexPtr & r, const std::string & state_prefix = "q") -> Nfa;

    /* Requires a nonempty language without the empty word; the result is
     * restricted to states on some accepting run. */
    auto normalize_nfa(const Nfa & n) -> NormalizedNfa;

    auto nfa_accepts(const Nfa & n, const std::vector<Symbol> & word) -> bool;

    /* States become nodes, transitions become edges with linear choice,
     * initial and final states are must nodes and the final is corked. */
    auto nfa_to_guest(const NormalizedNfa & n) -> Guest;
}

#endif
