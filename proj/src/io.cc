#include <lgs/errors.hh>
#include <lgs/io.hh>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

using std::move;
using nlohmann::json;
using std::map;
using std::string;
using std::vector;

namespace lgs
{
    namespace
    {
        auto parse_document(const string & text) -> json
        {
            try {
                return json::parse(text);
            }
            catch (const json::parse_error & e) {
                throw SchemaError{string{"not valid JSON: "} + e.what()};
            }
        }

        auto require_string(const json & j, const string & path) -> string
        {
            if (! j.is_string())
                throw SchemaError{path + ": expected a string"};
            return j.get<string>();
        }

        auto require_array(const json & j, const string & path) -> const json &
        {
            if (! j.is_array())
                throw SchemaError{path + ": expected an array"};
            return j;
        }

        auto require_field(const json & j, const string & name, const string & path) -> const json &
        {
            if (! j.is_object() || ! j.contains(name))
                throw SchemaError{path + ": missing field '" + name + "'"};
            return j.at(name);
        }

        auto check_manifest(const json & j, const string & expected_kind) -> void
        {
            auto format = require_string(require_field(j, "format", "document"), "format");
            if (format != format_tag)
                throw SchemaError{"format: unrecognised version tag '" + format + "', expected '" + format_tag + "'"};
            auto kind = require_string(require_field(j, "kind", "document"), "kind");
            if (kind != expected_kind)
                throw SchemaError{"kind: expected '" + expected_kind + "', found '" + kind + "'"};
        }

        auto string_set(const json & j, const string & path) -> std::set<string>
        {
            std::set<string> result;
            unsigned i = 0;
            for (auto & item : require_array(j, path))
                result.insert(require_string(item, path + "[" + std::to_string(i++) + "]"));
            return result;
        }

        auto graph_from_fields(const json & j, const string & path) -> HostGraph
        {
            HostGraph g;
            g.alphabet = string_set(require_field(j, "alphabet", path), path + ".alphabet");
            g.nodes = string_set(require_field(j, "nodes", path), path + ".nodes");
            unsigned i = 0;
            for (auto & item : require_array(require_field(j, "edges", path), path + ".edges")) {
                auto epath = path + ".edges[" + std::to_string(i++) + "]";
                if (! item.is_array() || item.size() != 3)
                    throw SchemaError{epath + ": expected [source, label, target]"};
                g.edges.insert(Edge{require_string(item[0], epath + "[0]"),
                    require_string(item[1], epath + "[1]"),
                    require_string(item[2], epath + "[2]")});
            }
            auto problems = validate_graph(g);
            if (! problems.empty())
                throw SchemaError{path + ": " + problems.front()};
            return g;
        }

        auto graph_to_fields(const HostGraph & g, json & j) -> void
        {
            j["alphabet"] = g.alphabet;
            j["nodes"] = g.nodes;
            auto edges = json::array();
            for (auto & e : g.edges)
                edges.push_back(json::array({e.src, e.label, e.dst}));
            j["edges"] = edges;
        }
    }

    auto peek_manifest(const string & text) -> Manifest
    {
        auto j = parse_document(text);
        return Manifest{
            require_string(require_field(j, "format", "document"), "format"),
            require_string(require_field(j, "kind", "document"), "kind")};
    }

    auto read_host(const string & text) -> HostGraph
    {
        auto j = parse_document(text);
        check_manifest(j, "host");
        return graph_from_fields(j, "host");
    }

    auto write_host(const HostGraph & g) -> string
    {
        json j;
        j["format"] = format_tag;
        j["kind"] = "host";
        graph_to_fields(g, j);
        return j.dump(2) + "\n";
    }

    auto read_guest(const string & text) -> Guest
    {
        auto j = parse_document(text);
        auto kind = require_string(require_field(j, "kind", "document"), "kind");

        if (kind == "guest-expr") {
            check_manifest(j, "guest-expr");
            auto expr_text = require_string(require_field(j, "expr", "guest-expr"), "expr");
            try {
                return eval(parse_guest_dsl(expr_text));
            }
            catch (const SyntaxError & e) {
                throw SchemaError{string{"expr: "} + e.what()};
            }
            catch (const InvariantError & e) {
                throw SchemaError{string{"expr: "} + e.what()};
            }
        }

        check_manifest(j, "guest");
        Guest g;
        g.graph = graph_from_fields(j, "guest");
        g.must = string_set(require_field(j, "must", "guest"), "guest.must");
        g.unique = string_set(require_field(j, "unique", "guest"), "guest.unique");
        g.exclusive = string_set(require_field(j, "exclusive", "guest"), "guest.exclusive");

        vector<Edge> edge_list(g.graph.edges.begin(), g.graph.edges.end());
        auto & choice = require_field(j, "choice", "guest");
        if (! choice.is_object())
            throw SchemaError{"guest.choice: expected an object keyed by node"};
        for (auto & [node, families] : choice.items()) {
            auto npath = "guest.choice." + node;
            if (! g.graph.nodes.contains(node))
                throw SchemaError{npath + ": unknown node"};
            ChoiceFamily family;
            unsigned i = 0;
            for (auto & gamma : require_array(families, npath)) {
                auto gpath = npath + "[" + std::to_string(i++) + "]";
                ChoiceSet cset;
                unsigned k = 0;
                for (auto & index : require_array(gamma, gpath)) {
                    auto ipath = gpath + "[" + std::to_string(k++) + "]";
                    if (! index.is_number_unsigned() || index.get<std::size_t>() >= edge_list.size())
                        throw SchemaError{ipath + ": edge index out of range"};
                    cset.insert(edge_list[index.get<std::size_t>()]);
                }
                family.insert(move(cset));
            }
            g.choice[node] = move(family);
        }
        canonicalise_choice(g);

        auto problems = validate_guest(g);
        if (! problems.empty())
            throw SchemaError{"guest: " + problems.front()};
        return g;
    }

    auto write_guest(const Guest & g) -> string
    {
        json j;
        j["format"] = format_tag;
        j["kind"] = "guest";
        graph_to_fields(g.graph, j);
        j["must"] = g.must;
        j["unique"] = g.unique;
        j["exclusive"] = g.exclusive;

        vector<Edge> edge_list(g.graph.edges.begin(), g.graph.edges.end());
        map<Edge, std::size_t> index;
        for (std::size_t i = 0; i < edge_list.size(); ++i)
            index.emplace(edge_list[i], i);

        json choice = json::object();
        for (auto & v : g.graph.nodes) {
            auto sets = json::array();
            for (auto & gamma : g.choice_of(v)) {
                vector<std::size_t> indices;
                for (auto & e : gamma)
                    indices.push_back(index.at(e));
                std::sort(indices.begin(), indices.end());
                sets.push_back(indices);
            }
            choice[v] = sets;
        }
        j["choice"] = choice;
        return j.dump(2) + "\n";
    }

    auto read_decorated(const string & text) -> DecoratedGraph
    {
        auto j = parse_document(text);
        check_manifest(j, "decorated-graph");
        DecoratedGraph q;
        q.alphabet = string_set(require_field(j, "alphabet", "decorated-graph"), "decorated-graph.alphabet");
        q.nodes = string_set(require_field(j, "nodes", "decorated-graph"), "decorated-graph.nodes");
        unsigned i = 0;
        for (auto & item : require_array(require_field(j, "edges", "decorated-graph"), "decorated-graph.edges")) {
            auto epath = "decorated-graph.edges[" + std::to_string(i++) + "]";
            if (! item.is_array() || item.size() != 3)
                throw SchemaError{epath + ": expected [source, target, language]"};
            auto src = require_string(item[0], epath + "[0]");
            auto dst = require_string(item[1], epath + "[1]");
            auto lang_text = require_string(item[2], epath + "[2]");
            RegexPtr lang;
            try {
                lang = parse_regex(lang_text);
            }
            catch (const SyntaxError & e) {
                throw SchemaError{epath + "[2]: " + e.what()};
            }
            q.edges[{src, dst}] = lang;
        }
        auto problems = validate_decorated(q);
        if (! problems.empty())
            throw SchemaError{"decorated-graph: " + problems.front()};
        return q;
    }

    auto write_decorated(const DecoratedGraph & q) -> string
    {
        json j;
        j["format"] = format_tag;
        j["kind"] = "decorated-graph";
        j["alphabet"] = q.alphabet;
        j["nodes"] = q.nodes;
        auto edges = json::array();
        for (auto & [e, lang] : q.edges)
            edges.push_back(json::array({e.first, e.second, regex_to_string(lang)}));
        j["edges"] = edges;
        return j.dump(2) + "\n";
    }

    namespace
    {
        auto pair_from_json(const json & j, const string & path) -> PairNode
        {
            if (! j.is_array() || j.size() != 2)
                throw SchemaError{path + ": expected [guest node, host node]"};
            return PairNode{require_string(j[0], path + "[0]"), require_string(j[1], path + "[1]")};
        }
    }

    auto read_witness(const string & text) -> CandidateSubgraph
    {
        auto j = parse_document(text);
        check_manifest(j, "witness");
        CandidateSubgraph w;
        unsigned i = 0;
        for (auto & item : require_array(require_field(j, "pair_nodes", "witness"), "witness.pair_nodes"))
            w.pair_nodes.insert(pair_from_json(item, "witness.pair_nodes[" + std::to_string(i++) + "]"));
        i = 0;
        for (auto & item : require_array(require_field(j, "pair_edges", "witness"), "witness.pair_edges")) {
            auto epath = "witness.pair_edges[" + std::to_string(i++) + "]";
            if (! item.is_array() || item.size() != 3)
                throw SchemaError{epath + ": expected [source pair, label, target pair]"};
            w.pair_edges.insert(PairEdge{pair_from_json(item[0], epath + "[0]"),
                require_string(item[1], epath + "[1]"),
                pair_from_json(item[2], epath + "[2]")});
        }
        return w;
    }

    auto write_witness(const CandidateSubgraph & w) -> string
    {
        json j;
        j["format"] = format_tag;
        j["kind"] = "witness";
        auto nodes = json::array();
        for (auto & p : w.pair_nodes)
            nodes.push_back(json::array({p.guest_node, p.host_node}));
        j["pair_nodes"] = nodes;
        auto edges = json::array();
        for (auto & e : w.pair_edges)
            edges.push_back(json::array({json::array({e.src.guest_node, e.src.host_node}),
                e.label,
                json::array({e.dst.guest_node, e.dst.host_node})}));
        j["pair_edges"] = edges;
        return j.dump(2) + "\n";
    }

    namespace
    {
        auto quote(const string & s) -> string
        {
            string result = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    result += '\\';
                result += c;
            }
            return result + "\"";
        }
    }

    auto export_dot(const HostGraph & g) -> string
    {
        std::ostringstream out;
        out << "digraph host {\n";
        for (auto & v : g.nodes)
            out << "  " << quote(v) << ";\n";
        for (auto & e : g.edges)
            out << "  " << quote(e.src) << " -> " << quote(e.dst) << " [label=" << quote(e.label) << "];\n";
        out << "}\n";
        return out.str();
    }

    auto export_dot(const Guest & g) -> string
    {
        std::ostringstream out;
        out << "digraph guest {\n";
        for (auto & v : g.graph.nodes) {
            string marks;
            if (g.must.contains(v))
                marks += "\xe2\x88\x83"; // existential mark
            if (g.unique.contains(v))
                marks += "\xf0\x9d\x9f\x99"; // uniqueness mark
            if (g.exclusive.contains(v))
                marks += "\xe2\x9c\x95"; // exclusivity mark
            if (g.choice_of(v).contains(ChoiceSet{}))
                marks += "\xe2\x88\x85"; // corked: the empty choice set
            out << "  " << quote(v) << " [label=" << quote(marks.empty() ? v : v + ":" + marks) << "];\n";
        }
        for (auto & e : g.graph.edges)
            out << "  " << quote(e.src) << " -> " << quote(e.dst) << " [label=" << quote(e.label) << "];\n";
        for (auto & v : g.graph.nodes) {
            for (auto & gamma : g.choice_of(v)) {
                out << "  // choice " << v << ":";
                if (gamma.empty())
                    out << " {}";
                for (auto & e : gamma)
                    out << " " << e.src << "-" << e.label << "->" << e.dst;
                out << "\n";
            }
        }
        out << "}\n";
        return out.str();
    }

    auto export_dot(const CandidateSubgraph & w) -> string
    {
        std::ostringstream out;
        auto name = [](const PairNode & p) { return "(" + p.guest_node + "," + p.host_node + ")"; };
        out << "digraph witness {\n";
        for (auto & p : w.pair_nodes)
            out << "  " << quote(name(p)) << ";\n";
        for (auto & e : w.pair_edges)
            out << "  " << quote(name(e.src)) << " -> " << quote(name(e.dst))
                << " [label=" << quote(e.label) << "];\n";
        out << "}\n";
        return out.str();
    }
}
