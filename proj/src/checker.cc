#include <lgs/checker.hh>

#include <map>

using std::map;
using std::pair;
using std::set;
using std::vector;

namespace lgs
{
    namespace
    {
        // guest edges realised by some out-edge of p in the candidate
        auto realised_projections(const CandidateSubgraph & cand, const PairNode & p) -> set<Edge>
        {
            set<Edge> result;
            for (auto it = cand.pair_edges.lower_bound(PairEdge{p, "", PairNode{}});
                 it != cand.pair_edges.end() && it->src == p; ++it)
                result.insert(Edge{it->src.guest_node, it->label, it->dst.guest_node});
            return result;
        }

        auto some_set_realised(const ChoiceFamily & family, const set<Edge> & realised) -> bool
        {
            for (auto & gamma : family)
                if (std::includes(realised.begin(), realised.end(), gamma.begin(), gamma.end()))
                    return true;
            return false;
        }

        auto edge_justified(const ChoiceFamily & family, const Edge & guest_edge,
            const set<Edge> & realised) -> bool
        {
            for (auto & gamma : family)
                if (gamma.contains(guest_edge) &&
                    std::includes(realised.begin(), realised.end(), gamma.begin(), gamma.end()))
                    return true;
            return false;
        }
    }

    auto check_lgs1(const Guest & guest, const HostGraph &, const CandidateSubgraph & cand) -> MustCheck
    {
        MustCheck result;
        set<NodeId> matched;
        for (auto & p : cand.pair_nodes)
            matched.insert(p.guest_node);
        for (auto & m : guest.must)
            if (! matched.contains(m))
                result.unmatched.push_back(m);
        return result;
    }

    auto check_lgs2(const Guest & guest, const HostGraph &, const CandidateSubgraph & cand) -> UniqueCheck
    {
        UniqueCheck result;
        map<NodeId, set<NodeId>> partners;
        for (auto & p : cand.pair_nodes)
            if (guest.unique.contains(p.guest_node))
                partners[p.guest_node].insert(p.host_node);
        for (auto & [u, hosts] : partners)
            if (hosts.size() > 1)
                result.ambiguous.push_back(u);
        return result;
    }

    auto check_lgs3(const Guest & guest, const HostGraph &, const CandidateSubgraph & cand) -> ExclusiveCheck
    {
        ExclusiveCheck result;
        map<NodeId, set<NodeId>> assigned; // host node -> guest nodes
        for (auto & p : cand.pair_nodes)
            assigned[p.host_node].insert(p.guest_node);
        for (auto & [h, guests] : assigned)
            if (guests.size() > 1)
                for (auto & u : guests)
                    if (guest.exclusive.contains(u)) {
                        result.contested_hosts.push_back(h);
                        break;
                    }
        return result;
    }

    auto check_lgs4(const Guest & guest, const HostGraph &, const CandidateSubgraph & cand) -> ChoiceCheck
    {
        ChoiceCheck result;
        for (auto & p : cand.pair_nodes) {
            auto realised = realised_projections(cand, p);
            auto & family = guest.choice_of(p.guest_node);
            if (! some_set_realised(family, realised))
                result.unsatisfied_pairs.push_back(p);
            for (auto it = cand.pair_edges.lower_bound(PairEdge{p, "", PairNode{}});
                 it != cand.pair_edges.end() && it->src == p; ++it) {
                Edge projection{it->src.guest_node, it->label, it->dst.guest_node};
                if (! edge_justified(family, projection, realised))
                    result.unjustified_edges.push_back(*it);
            }
        }
        return result;
    }

    auto check_lgs5(const Guest & guest, const HostGraph &, const CandidateSubgraph & cand) -> ConnectivityCheck
    {
        ConnectivityCheck result;
        auto guest_reach = reachability(guest.graph);

        map<NodeId, set<PairNode>> pairs_of; // guest node -> its pairs
        for (auto & p : cand.pair_nodes)
            pairs_of[p.guest_node].insert(p);

        for (auto & m : guest.must) {
            auto targets = pairs_of.find(m);
            auto reachers = pairs_reaching(cand, targets == pairs_of.end() ? set<PairNode>{} : targets->second);
            for (auto & p : cand.pair_nodes)
                if (guest_reach.contains({p.guest_node, m}) && ! reachers.contains(p))
                    result.unreachable_musts.emplace_back(p, m);
        }
        return result;
    }

    auto check_all(const Guest & guest, const HostGraph & host, const CandidateSubgraph & cand) -> VerificationReport
    {
        VerificationReport report;
        report.structural_errors = validate_candidate(guest, host, cand);
        if (! report.structural_errors.empty())
            return report;
        report.must = check_lgs1(guest, host, cand);
        report.unique = check_lgs2(guest, host, cand);
        report.exclusive = check_lgs3(guest, host, cand);
        report.choice = check_lgs4(guest, host, cand);
        report.connectivity = check_lgs5(guest, host, cand);
        return report;
    }
}
