// Batch front end: jet / lisse / vpa-check / virasoro / affine.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jetvpa/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct CommonArgs {
    std::string input_path;
    std::string format = "text";
    std::map<std::string, std::string> options;
};

void add_option_flag(CLI::App* cmd, CommonArgs& args, const std::string& flag,
                     const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
           flag, [&args, key](const std::string& value) { args.options[key] = value; }, help)
        ->expected(1);
}

int run(const std::string& verb, CommonArgs& args, bool needs_input) {
    std::string text;
    if (!args.input_path.empty())
        text = read_input(args.input_path);
    else if (needs_input)
        text = read_input("-");  // default to standard input

    jetvpa::JobSpec spec;
    spec.command = verb;
    spec.input_path = args.input_path.empty() ? (needs_input ? "-" : "") : args.input_path;
    spec.input_text = text;
    spec.options = args.options;

    jetvpa::CommandResult result = jetvpa::run_command(spec);
    if (args.format == "structured")
        std::cout << result.report.dump(2) << "\n";
    else if (args.format == "text")
        std::cout << jetvpa::render_text(result.report);
    else {
        std::cerr << "error: unknown format '" << args.format << "' (use text|structured)\n";
        return 2;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact jet-scheme, vertex-Poisson and Virasoro/affine C2-cofiniteness computations"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        CommonArgs args;
        bool needs_input;
    };
    std::vector<std::shared_ptr<Sub>> subs;

    auto make_sub = [&](const std::string& verb, const std::string& help, bool needs_input,
                        bool takes_file) {
        auto sub = std::make_shared<Sub>();
        sub->cmd = app.add_subcommand(verb, help);
        sub->needs_input = needs_input;
        if (takes_file)
            sub->cmd->add_option("input", sub->args.input_path,
                                 "input file path ('-' for standard input)");
        sub->cmd->add_option("--format", sub->args.format, "text|structured (default text)");
        subs.push_back(sub);
        return sub;
    };

    auto jet = make_sub("jet", "jet ideal, reduced Groebner basis and Krull dimension", true,
                        true);
    add_option_flag(jet->cmd, jet->args, "--order", "order", "jet truncation order (default 1)");
    add_option_flag(jet->cmd, jet->args, "--monomial-order", "monomial-order",
                    "wdegrevlex|degrevlex|lex (default wdegrevlex)");

    auto lisse = make_sub("lisse", "C2-cofiniteness / lisse verdict for a base ideal", true,
                          true);
    add_option_flag(lisse->cmd, lisse->args, "--order", "order",
                    "max jet order for diagnostics (default 2)");
    add_option_flag(lisse->cmd, lisse->args, "--monomial-order", "monomial-order",
                    "wdegrevlex|degrevlex|lex (default wdegrevlex)");

    auto vpa = make_sub("vpa-check", "verify the vertex Poisson axioms on random elements",
                        true, true);
    add_option_flag(vpa->cmd, vpa->args, "--samples", "samples", "sample count (default 200)");
    add_option_flag(vpa->cmd, vpa->args, "--seed", "seed", "RNG seed (default 0)");
    add_option_flag(vpa->cmd, vpa->args, "--max-weight", "max-weight",
                    "weight bound for sampled elements (default 4)");

    auto virasoro = make_sub(
        "virasoro", "Gram determinants, singular levels and the C2 quotient", false, false);
    add_option_flag(virasoro->cmd, virasoro->args, "--central-charge", "central-charge",
                    "central charge as a rational literal, e.g. -22/5");
    virasoro->cmd
        ->add_option_function<std::vector<int>>(
            "--minimal",
            [virasoro](const std::vector<int>& pq) {
                virasoro->args.options["minimal"] =
                    std::to_string(pq[0]) + " " + std::to_string(pq[1]);
            },
            "minimal-series parameters p q (coprime, >= 2)")
        ->expected(2);
    add_option_flag(virasoro->cmd, virasoro->args, "--cutoff", "cutoff",
                    "conformal-weight cutoff (default 6)");
    add_option_flag(virasoro->cmd, virasoro->args, "--weight", "weight",
                    "highest weight h (default: the vacuum module)");

    auto affine = make_sub("affine", "Kirillov-Kostant closure argument and PBW gradings",
                           true, true);
    add_option_flag(affine->cmd, affine->args, "--root", "root",
                    "root vector name (default: first basis element)");
    add_option_flag(affine->cmd, affine->args, "--power", "power",
                    "nilpotency power n (default 2)");
    add_option_flag(affine->cmd, affine->args, "--max-weight", "max-weight",
                    "graded-dimension comparison bound (default 6)");
    add_option_flag(affine->cmd, affine->args, "--level", "level",
                    "level k (accepted, unused by the computation)");

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& sub : subs)
            if (sub->cmd->parsed())
                return run(sub->cmd->get_name(), sub->args, sub->needs_input);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command given\n";
    return 2;
}
