#ifndef LGS_CHECKER_HH
#define LGS_CHECKER_HH

#include <lgs/guest.hh>

#include <string>
#include <utility>
#include <vector>

namespace lgs
{
    struct MustCheck
    {
        std::vector<NodeId> unmatched;

        auto pass() const -> bool { return unmatched.empty(); }
    };

    struct UniqueCheck
    {
        std::vector<NodeId> ambiguous;

        auto pass() const -> bool { return ambiguous.empty(); }
    };

    struct ExclusiveCheck
    {
        std::vector<NodeId> contested_hosts;

        auto pass() const -> bool { return contested_hosts.empty(); }
    };

    struct ChoiceCheck
    {
        std::vector<PairNode> unsatisfied_pairs;
        std::vector<PairEdge> unjustified_edges;

        auto pass() const -> bool { return unsatisfied_pairs.empty() && unjustified_edges.empty(); }
    };

    struct ConnectivityCheck
    {
        std::vector<std::pair<PairNode, NodeId>> unreachable_musts;

        auto pass() const -> bool { return unreachable_musts.empty(); }
    };

    auto check_lgs1(const Guest &, const HostGraph &, const CandidateSubgraph &) -> MustCheck;
    auto check_lgs2(const Guest &, const HostGraph &, const CandidateSubgraph &) -> UniqueCheck;
    auto check_lgs3(const Guest &, const HostGraph &, const CandidateSubgraph &) -> ExclusiveCheck;
    auto check_lgs4(const Guest &, const HostGraph &, const CandidateSubgraph &) -> ChoiceCheck;
    auto check_lgs5(const Guest &, const HostGraph &, const CandidateSubgraph &) -> ConnectivityCheck;

    /* The polynomial verifier. A candidate that breaks the subgraph
     * invariants is reported through structural_errors and the five
     * conditions are not evaluated. */
    struct VerificationReport
    {
        std::vector<std::string> structural_errors;
        MustCheck must;
        UniqueCheck unique;
        ExclusiveCheck exclusive;
        ChoiceCheck choice;
        ConnectivityCheck connectivity;

        auto pass() const -> bool
        {
            return structural_errors.empty() && must.pass() && unique.pass() &&
                exclusive.pass() && choice.pass() && connectivity.pass();
        }
    };

    auto check_all(const Guest &, const HostGraph &, const CandidateSubgraph &) -> VerificationReport;
}

#endif
