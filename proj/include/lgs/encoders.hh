#ifndef LGS_ENCODERS_HH
#define LGS_ENCODERS_HH

#include <lgs/guest.hh>
#include <lgs/regex.hh>

#include <map>
#include <set>
#include <utility>

namespace lgs
{
    /* A graph whose edges are unlabelled pairs decorated with nonempty
     * epsilon-free regular languages. */
    struct DecoratedGraph
    {
        std::set<Symbol> alphabet;
        std::set<NodeId> nodes;
        std::map<std::pair<NodeId, NodeId>, RegexPtr> edges;
    };

    auto validate_decorated(const DecoratedGraph & q) -> std::vector<std::string>;

    /* Subgraph isomorphism query: every node must, unique and exclusive;
     * choice demands the full out-set at once; sinks are corked. */
    auto encode_sgi(const HostGraph & query) -> Guest;

    /* Graph simulation query: every node must; choice demands the full
     * out-set; sinks are corked. */
    auto encode_gs(const HostGraph & query) -> Guest;

    // rejects regexes denoting the empty language
    auto encode_rlpm(const RegexPtr & r) -> Guest;

    /* One automaton guest per decorated edge, endpoints renamed onto the
     * query nodes (merged on self-loops), multiplied together and summed
     * with must-unique-exclusive unaries for the query nodes. Internal
     * automaton states are named "<src>#<dst>#<k>"; query node names must
     * not contain '#'. */
    auto encode_rlsgi(const DecoratedGraph & query) -> Guest;
}

#endif
