#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "landau_paraxial/cli.hpp"
#include "landau_paraxial/config.hpp"
#include "landau_paraxial/io_format.hpp"

namespace lp = landau_paraxial;

int main(int argc, char** argv)
{
    CLI::App app{"Landau modes, Laguerre-Gauss beams and Gouy phases of paraxial electrons", "landau-paraxial"};
    app.set_version_flag("--version", std::string(lp::version_string));
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_dir;
    int jobs = 1;

    for (const char* name : {"spectrum", "mode", "propagate", "gouy", "validate"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "key = value run configuration");
        sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
        sub->add_option("--jobs", jobs, "parallel validation cases")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lp::cli::exit_usage;
    }

    lp::RunConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = lp::parse_run_config(lp::read_text_file(config_path));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << config_path << ": " << e.what() << "\n";
        return lp::cli::exit_usage;
    }
    if (!out_dir.empty()) {
        cfg.output_dir = out_dir;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    return lp::cli::run_command(command, cfg, jobs, lp::cli::Streams{std::cout, std::cerr});
}
