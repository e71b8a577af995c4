#ifndef LGS_IO_HH
#define LGS_IO_HH

#include <lgs/algebra.hh>
#include <lgs/encoders.hh>
#include <lgs/guest.hh>

#include <string>

namespace lgs
{
    /* Every file carries {"format": "lgs/1", "kind": ...} beside its
     * payload; kinds are host, guest, guest-expr, decorated-graph and
     * witness. Readers throw SchemaError with a path into the document;
     * writers emit sorted, byte-stable output. */

    constexpr const char * format_tag = "lgs/1";

    struct Manifest
    {
        std::string format;
        std::string kind;
    };

    auto peek_manifest(const std::string & text) -> Manifest;

    auto read_host(const std::string & text) -> HostGraph;
    auto write_host(const HostGraph & g) -> std::string;

    // accepts both the component form and the guest-expr form
    auto read_guest(const std::string & text) -> Guest;
    auto write_guest(const Guest & g) -> std::string;

    auto read_decorated(const std::string & text) -> DecoratedGraph;
    auto write_decorated(const DecoratedGraph & q) -> std::string;

    auto read_witness(const std::string & text) -> CandidateSubgraph;
    auto write_witness(const CandidateSubgraph & w) -> std::string;

    /* Guest term syntax: expr := mul ('+' mul)*; mul := atom ('*' atom)*;
     * atom := '(' expr ')' | node | node '-' LABEL '->' node;
     * node := IDENT ('{' flag (',' flag)* '}')?;
     * flag := must | uniq | excl | nil. IDENT is [A-Za-z0-9_]+ without '#';
     * LABEL is a single symbol. */
    auto parse_guest_dsl(const std::string & text) -> GuestExprPtr;
    auto print_guest_expr(const GuestExprPtr & expr) -> std::string;

    auto export_dot(const HostGraph & g) -> std::string;
    auto export_dot(const Guest & g) -> std::string;
    auto export_dot(const CandidateSubgraph & w) -> std::string;
}

#endif
