#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cayley/lab.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cayleylab experiment runner"};
    app.require_subcommand(1);

    std::string config_path, out_prefix;
    int threads = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "experiment config (JSON)")->required();
        cmd->add_option("--out", out_prefix, "output path prefix (overrides config)");
        cmd->add_option("--threads", threads, "worker threads (overrides config and CAYLEY_THREADS)");
    };

    std::vector<std::string> experiments = {"census",      "genericity", "conjugacy", "barriers",
                                            "contraction", "paths",      "bbf"};
    for (const auto& name : experiments) add_common(app.add_subcommand(name, name + " experiment"));
    auto* validate = app.add_subcommand("validate", "check a config without running it");
    validate->add_option("--config", config_path, "experiment config (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cayley::lab::kConfigError;
    }

    std::string text;
    try {
        text = slurp(config_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return cayley::lab::kConfigError;
    }

    if (validate->parsed()) {
        auto diags = cayley::lab::validate_config(text);
        for (const auto& d : diags)
            std::cout << d.field << ": " << d.message << "\n";
        std::cout << (diags.empty() ? "config ok" : "config has diagnostics") << "\n";
        return 0; // diagnostics are returned, not thrown
    }

    std::string experiment = app.get_subcommands().front()->get_name();
    auto report = cayley::lab::run_config(text, experiment, out_prefix, threads);
    for (const auto& line : report.lines) std::cout << line << "\n";
    for (const auto& f : report.files) std::cout << "wrote " << f << "\n";
    std::cout << "wall time " << report.wall_seconds << " s\n";
    return report.exit_code;
}
