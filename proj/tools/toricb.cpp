#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toricb/problem.hpp"

int main(int argc, char** argv) {
    using namespace toricb;

    CLI::App app{"Bernstein-Sato polynomials, multiplier ideals and jumping coefficients of monomial ideals "
                 "in normal toric rings"};
    std::string command, path;
    std::string alpha, max, mode, schedule;
    unsigned box_cap = 0, kappa = 0;
    bool assume_normal = false, check_normal = false;

    app.add_option("command", command, "check | facets | transport | bfunction | lct | multiplier | jumping | verify")
        ->required()
        ->check(CLI::IsMember(commands()));
    app.add_option("document", path, "problem document (JSON); '-' reads stdin")->required();
    auto* o_alpha = app.add_option("--alpha", alpha, "dilation factor p/q (multiplier)");
    auto* o_max = app.add_option("--max", max, "upper bound p/q for jumping coefficients");
    auto* o_mode = app.add_option("--mode", mode, "membership mode")->check(CLI::IsMember({"relint", "closed"}));
    auto* o_cap = app.add_option("--box-cap", box_cap, "largest box bound for the b-function");
    auto* o_kappa = app.add_option("--kappa", kappa, "window growth factor of the witness search")
                        ->check(CLI::Range(2u, 1000u));
    auto* o_sched = app.add_option("--schedule", schedule, "box bounds B0,B1,... for the b-function");
    app.add_flag("--assume-normal", assume_normal, "skip the normality test");
    app.add_flag("--check-normal", check_normal, "run the normality test in 'check'");
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ExitCode::malformed;
    }

    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open " << path << "\n";
            return ExitCode::malformed;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    ProblemDocument doc;
    try {
        doc = parse_problem_text(text);
        ProblemOptions flags;
        if (*o_alpha) flags.alpha = parse_rational(alpha);
        if (*o_max) flags.max = parse_rational(max);
        if (*o_mode) flags.mode = parse_membership_mode(mode);
        if (*o_cap) flags.box_cap = box_cap;
        if (*o_kappa) flags.kappa = kappa;
        if (*o_sched) flags.schedule = parse_schedule(schedule);
        if (assume_normal) flags.assume_normal = true;
        if (check_normal) flags.check_normal = true;
        doc.options.merge(flags);
    } catch (const std::exception& e) {
        Json err{{"command", command}, {"error", e.what()}, {"exit_code", int(ExitCode::malformed)}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "malformed input: " << e.what() << "\n";
        return ExitCode::malformed;
    }

    RunResult r = run(command, doc);
    std::cout << r.report.dump(2) << "\n";
    std::cerr << r.summary;
    return r.exit_code;
}
