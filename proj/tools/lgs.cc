#include <lgs/algebra.hh>
#include <lgs/checker.hh>
#include <lgs/encoders.hh>
#include <lgs/errors.hh>
#include <lgs/io.hh>
#include <lgs/oracles.hh>
#include <lgs/solver.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using std::cerr;
using std::cout;
using std::endl;
using std::string;

namespace
{
    constexpr int exit_found = 0;
    constexpr int exit_empty = 1;
    constexpr int exit_error = 2;

    auto slurp(const string & path) -> string
    {
        if (path == "-") {
            std::ostringstream buffer;
            buffer << std::cin.rdbuf();
            return buffer.str();
        }
        std::ifstream in{path};
        if (! in)
            throw lgs::Error{"cannot open " + path};
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto emit(const string & path, const string & content) -> void
    {
        if (path == "-") {
            cout << content;
            return;
        }
        std::ofstream out{path};
        if (! out)
            throw lgs::Error{"cannot write " + path};
        out << content;
    }

    auto solver_options() -> lgs::SolveOptions
    {
        lgs::SolveOptions options;
        if (const char * env = std::getenv("LGS_THREADS")) {
            try {
                options.threads = unsigned(std::stoul(env));
            }
            catch (const std::exception &) {
                throw lgs::Error{"LGS_THREADS must be a non-negative integer"};
            }
        }
        return options;
    }

    auto print_witness(const lgs::CandidateSubgraph & witness, const string & dot_path) -> void
    {
        cout << lgs::write_witness(witness);
        if (! dot_path.empty())
            emit(dot_path, lgs::export_dot(witness));
    }

    auto report_verification(const lgs::VerificationReport & report) -> void
    {
        if (! report.structural_errors.empty()) {
            cout << "structure: violated" << endl;
            for (auto & p : report.structural_errors)
                cout << "  " << p << endl;
            return;
        }
        cout << "structure: ok" << endl;

        auto line = [&](const char * name, bool ok) { cout << name << (ok ? ": ok" : ": violated") << endl; };
        line("LGS1 (must)", report.must.pass());
        for (auto & v : report.must.unmatched)
            cout << "  must node " << v << " is unmatched" << endl;
        line("LGS2 (unique)", report.unique.pass());
        for (auto & v : report.unique.ambiguous)
            cout << "  unique node " << v << " is paired with several host nodes" << endl;
        line("LGS3 (exclusive)", report.exclusive.pass());
        for (auto & v : report.exclusive.contested_hosts)
            cout << "  host node " << v << " is shared with an exclusive node" << endl;
        line("LGS4 (choice)", report.choice.pass());
        for (auto & p : report.choice.unsatisfied_pairs)
            cout << "  pair (" << p.guest_node << "," << p.host_node << ") realises no choice set" << endl;
        for (auto & e : report.choice.unjustified_edges)
            cout << "  edge from (" << e.src.guest_node << "," << e.src.host_node << ") over " << e.label
                 << " is justified by no realised choice set" << endl;
        line("LGS5 (connectivity)", report.connectivity.pass());
        for (auto & [p, m] : report.connectivity.unreachable_musts)
            cout << "  pair (" << p.guest_node << "," << p.host_node << ") cannot reach must node " << m << endl;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"loose graph simulation toolkit"};
    app.require_subcommand(1);

    string guest_path, host_path, witness_path, query_path, regex_text, dot_path;

    auto * solve = app.add_subcommand("solve", "decide emptiness and print a witness");
    solve->add_option("guest", guest_path, "guest file, - for stdin")->required();
    solve->add_option("host", host_path, "host file, - for stdin")->required();
    solve->add_option("--dot", dot_path, "also write the witness in DOT form");

    auto * greatest = app.add_subcommand("greatest", "greatest simulation for the polynomial fragment");
    greatest->add_option("guest", guest_path, "guest file, - for stdin")->required();
    greatest->add_option("host", host_path, "host file, - for stdin")->required();
    greatest->add_option("--dot", dot_path, "also write the witness in DOT form");

    auto * verify = app.add_subcommand("verify", "check a stored witness against guest and host");
    verify->add_option("guest", guest_path)->required();
    verify->add_option("host", host_path)->required();
    verify->add_option("witness", witness_path)->required();

    auto * encode = app.add_subcommand("encode", "translate a classical problem into a guest");
    encode->require_subcommand(1);
    auto * encode_sgi_cmd = encode->add_subcommand("sgi", "subgraph isomorphism query");
    encode_sgi_cmd->add_option("query", query_path)->required();
    auto * encode_gs_cmd = encode->add_subcommand("gs", "graph simulation query");
    encode_gs_cmd->add_option("query", query_path)->required();
    auto * encode_rlpm_cmd = encode->add_subcommand("rlpm", "regular language path query");
    encode_rlpm_cmd->add_option("regex", regex_text)->required();
    auto * encode_rlsgi_cmd = encode->add_subcommand("rlsgi", "regular-language subgraph isomorphism query");
    encode_rlsgi_cmd->add_option("query", query_path)->required();

    auto * oracle = app.add_subcommand("oracle", "reference decision procedures");
    oracle->require_subcommand(1);
    auto * oracle_sgi_cmd = oracle->add_subcommand("sgi");
    oracle_sgi_cmd->add_option("query", query_path)->required();
    oracle_sgi_cmd->add_option("host", host_path)->required();
    auto * oracle_gs_cmd = oracle->add_subcommand("gs");
    oracle_gs_cmd->add_option("query", query_path)->required();
    oracle_gs_cmd->add_option("host", host_path)->required();
    auto * oracle_rlpm_cmd = oracle->add_subcommand("rlpm");
    oracle_rlpm_cmd->add_option("regex", regex_text)->required();
    oracle_rlpm_cmd->add_option("host", host_path)->required();
    auto * oracle_rlsgi_cmd = oracle->add_subcommand("rlsgi");
    oracle_rlsgi_cmd->add_option("query", query_path)->required();
    oracle_rlsgi_cmd->add_option("host", host_path)->required();

    auto * product = app.add_subcommand("product", "tensor product of two graphs");
    product->add_option("left", guest_path)->required();
    product->add_option("right", host_path)->required();

    auto * normalform = app.add_subcommand("normalform", "sum-of-products term for a guest");
    normalform->add_option("guest", guest_path)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (solve->parsed()) {
            auto guest = lgs::read_guest(slurp(guest_path));
            auto host = lgs::read_host(slurp(host_path));
            auto witness = lgs::solve_emptiness(guest, host, solver_options());
            if (! witness) {
                cerr << "no loose graph simulation exists" << endl;
                return exit_empty;
            }
            print_witness(*witness, dot_path);
            return exit_found;
        }

        if (greatest->parsed()) {
            auto guest = lgs::read_guest(slurp(guest_path));
            auto host = lgs::read_host(slurp(host_path));
            auto witness = lgs::greatest_lgs(guest, host);
            if (! witness) {
                cerr << "no loose graph simulation exists" << endl;
                return exit_empty;
            }
            print_witness(*witness, dot_path);
            return exit_found;
        }

        if (verify->parsed()) {
            auto guest = lgs::read_guest(slurp(guest_path));
            auto host = lgs::read_host(slurp(host_path));
            auto witness = lgs::read_witness(slurp(witness_path));
            auto report = lgs::check_all(guest, host, witness);
            report_verification(report);
            return report.pass() ? exit_found : exit_empty;
        }

        if (encode_sgi_cmd->parsed()) {
            cout << lgs::write_guest(lgs::encode_sgi(lgs::read_host(slurp(query_path))));
            return exit_found;
        }
        if (encode_gs_cmd->parsed()) {
            cout << lgs::write_guest(lgs::encode_gs(lgs::read_host(slurp(query_path))));
            return exit_found;
        }
        if (encode_rlpm_cmd->parsed()) {
            cout << lgs::write_guest(lgs::encode_rlpm(lgs::parse_regex(regex_text)));
            return exit_found;
        }
        if (encode_rlsgi_cmd->parsed()) {
            cout << lgs::write_guest(lgs::encode_rlsgi(lgs::read_decorated(slurp(query_path))));
            return exit_found;
        }

        if (oracle_sgi_cmd->parsed()) {
            bool found = lgs::sgi_oracle(lgs::read_host(slurp(query_path)), lgs::read_host(slurp(host_path)));
            cout << (found ? "true" : "false") << endl;
            return found ? exit_found : exit_empty;
        }
        if (oracle_gs_cmd->parsed()) {
            auto relation = lgs::gs_oracle(lgs::read_host(slurp(query_path)), lgs::read_host(slurp(host_path)));
            if (! relation) {
                cout << "false" << endl;
                return exit_empty;
            }
            for (auto & [u, v] : *relation)
                cout << u << " " << v << endl;
            return exit_found;
        }
        if (oracle_rlpm_cmd->parsed()) {
            bool found = lgs::rlpm_oracle(lgs::parse_regex(regex_text), lgs::read_host(slurp(host_path)));
            cout << (found ? "true" : "false") << endl;
            return found ? exit_found : exit_empty;
        }
        if (oracle_rlsgi_cmd->parsed()) {
            bool found = lgs::rlsgi_oracle(lgs::read_decorated(slurp(query_path)), lgs::read_host(slurp(host_path)));
            cout << (found ? "true" : "false") << endl;
            return found ? exit_found : exit_empty;
        }

        if (product->parsed()) {
            cout << lgs::write_host(lgs::tensor_product(lgs::read_host(slurp(guest_path)),
                lgs::read_host(slurp(host_path))));
            return exit_found;
        }

        if (normalform->parsed()) {
            auto guest = lgs::read_guest(slurp(guest_path));
            cout << lgs::print_guest_expr(lgs::normal_form(guest)) << endl;
            return exit_found;
        }
    }
    catch (const lgs::Error & e) {
        cerr << "error: " << e.what() << endl;
        return exit_error;
    }
    catch (const std::exception & e) {
        cerr << "unexpected error: " << e.what() << endl;
        return exit_error;
    }

    return exit_error;
}
