#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sphcox/errors.hpp"
#include "sphcox/input.hpp"
#include "sphcox/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Cox-ring presentations of spherical embeddings from combinatorial data"};
    app.require_subcommand(0, 0);

    std::string command, input_path, format = "text";
    app.add_option("command", command,
                   "one of: cox, valcone, roots, fan-check, clgroup, lift, brion-compare")
        ->required();
    app.add_option("--input", input_path, "problem description file")->required();
    sphcox::ReportOptions opts;
    app.add_flag("--allow-outside-valuation-cone", opts.allow_outside_valuation_cone,
                 "demote rays outside the valuation cone from an error to a warning");
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    bool serial = false;
    app.add_flag("--serial", serial, "disable internal parallelism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    opts.parallel = !serial;

    try {
        sphcox::Problem p = sphcox::load_problem_file(input_path);
        sphcox::Report rep = sphcox::run_command(command, p, opts);
        if (format == "json")
            std::cout << rep.data.dump(2) << "\n";
        else
            std::cout << rep.text;
        return rep.exit_code;
    } catch (const sphcox::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sphcox::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sphcox::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
