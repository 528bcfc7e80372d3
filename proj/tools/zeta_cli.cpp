#include "zeta/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw zeta::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool parse_complex(const std::string& text, std::complex<double>& value) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) return false;
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) return false;
    }
    value = {re, im};
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ihara-type zeta functions of finite graphs and Z^d-periodic covers,\n"
                 "computed with exact truncated power series"};
    app.require_subcommand(1);

    zeta::CliOptions options;
    std::string input_path = "-";
    std::string evaluate_text;
    std::string convention_text = "paper";
    std::string format_text = "json";
    int max_length = 8;
    std::string selector = "all";

    auto add_common = [&](CLI::App* cmd, bool with_convention) {
        cmd->add_option("input", input_path, "graph document path, or - for stdin");
        cmd->add_option("--order", options.order, "series truncation order")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format_text, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--evaluate", evaluate_text,
                        "evaluate the zeta series at RE[,IM] (floating point, with a "
                        "convergence-radius warning)");
        if (with_convention)
            cmd->add_option("--convention", convention_text,
                            "paper: Z = Det(I - Tu); classical: the reciprocal product")
                ->check(CLI::IsMember({"paper", "classical"}));
    };

    CLI::App* finite = app.add_subcommand("finite", "zeta function of a finite graph (rank 0)");
    add_common(finite, true);

    CLI::App* periodic =
        app.add_subcommand("periodic", "zeta function of a Z^d-periodic cover (rank >= 1)");
    add_common(periodic, true);

    CLI::App* loops =
        app.add_subcommand("loops", "primitive loop counts: enumeration vs series inversion");
    add_common(loops, false);
    loops->add_option("-L,--max-length", max_length, "largest loop length to tabulate")
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "run randomized/fixed property suites");
    verify->add_option("selector", selector,
                       "det-axioms | bass-hashimoto | trace-lemma | inversion-roundtrip | all");
    verify->add_option("--seed", options.seed, "seed for the randomized suites (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return zeta::kExitInputError;
    }

    options.convention =
        convention_text == "classical" ? zeta::Convention::classical : zeta::Convention::paper;
    if (loops->parsed() && loops->count("--format") == 0) format_text = "csv";
    options.format = format_text == "csv" ? zeta::OutputFormat::csv : zeta::OutputFormat::json;
    if (!evaluate_text.empty()) {
        if (!parse_complex(evaluate_text, options.evaluate_at)) {
            std::cerr << "input error: --evaluate expects RE or RE,IM\n";
            return zeta::kExitInputError;
        }
        options.has_evaluation = true;
    }

    try {
        if (verify->parsed()) return zeta::cmd_verify(std::cout, std::cerr, selector, options);

        zeta::GraphDocument doc = zeta::parse_graph_document(read_input(input_path));
        if (finite->parsed()) return zeta::cmd_finite(std::cout, std::cerr, doc, options);
        if (periodic->parsed()) return zeta::cmd_periodic(std::cout, std::cerr, doc, options);
        if (loops->parsed())
            return zeta::cmd_loops(std::cout, std::cerr, doc, max_length, options);
    } catch (const zeta::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return zeta::kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return zeta::kExitInputError;
    }
    return zeta::kExitInputError;
}
