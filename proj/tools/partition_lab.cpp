#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "plab/harness.hpp"

namespace {

unsigned threads_from_env() {
    if (const char* env = std::getenv("PARTITION_LAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-lab: seeded experiments on finite pair colorings"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "json";
    std::string flavor;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    unsigned threads = threads_from_env();
    bool have_seed = false, have_trials = false;

    for (const auto& kind : plab::harness::known_kinds()) {
        auto* sub = app.add_subcommand(kind);
        sub->add_option("--config", config_path, "experiment config (JSON)")->required();
        sub->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });
        sub->add_option("--trials", trials)->each([&](const std::string&) { have_trials = true; });
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--flavor", flavor, "path-bound flavor override")
            ->check(CLI::IsMember({"injective", "walk"}));
        sub->add_option("--threads,-j", threads, "worker count for trial fan-out");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints the message; 0 means --help
        return code == 0 ? 0 : 2;
    }
    const std::string kind = app.get_subcommands().front()->get_name();

    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot open config: " << config_path << "\n";
            return 2;
        }
        plab::harness::json config;
        in >> config;
        if (config.contains("kind") && config.at("kind").get<std::string>() != kind)
            throw plab::Error(plab::Errc::config_invalid,
                              "config kind disagrees with the subcommand");

        plab::harness::RunOptions opts;
        opts.caps = plab::harness::caps_from_env();
        opts.workers = threads;
        opts.seed = have_seed ? seed : config.value("seed", 0ull);
        opts.trials = have_trials ? trials : config.value("trials", 1ull);

        plab::harness::json params = config;
        params.erase("kind");
        params.erase("seed");
        params.erase("trials");
        params.erase("expect_exit");
        if (!flavor.empty()) params["flavor"] = flavor;

        const auto report = plab::harness::run(kind, params, opts);
        const auto body = plab::harness::emit(
            report, format == "csv" ? plab::harness::Format::csv : plab::harness::Format::json);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
            out << body;
            if (!out) {
                std::cerr << "cannot write report: " << out_path << "\n";
                return 2;
            }
        }
        std::cerr << kind << ": " << report.trials << " trials, " << report.failures
                  << " failures, " << report.wall_ms << " ms\n";
        return report.failures == 0 ? 0 : 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const plab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
