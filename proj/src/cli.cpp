#include "gaptopo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "gaptopo/report_io.hpp"

namespace gaptopo::cli {

namespace {

struct Options {
    std::string permutation;
    std::string mode = "greedy";
    std::string format = "human";
    std::string output;
    int n = 0;
    int jobs = 0;
    bool long_run = false;
    bool timing = false;
};

const std::map<std::string, io::Format> kFormats{
    {"human", io::Format::Human}, {"json", io::Format::Json}, {"csv", io::Format::Csv}};

void emit_record(std::ostream& out, const io::Json& record, io::Format format) {
    switch (format) {
        case io::Format::Json: out << record.dump(2) << '\n'; break;
        case io::Format::Csv: io::write_record_csv(out, record); break;
        case io::Format::Human: io::write_record_human(out, record); break;
    }
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw CapacityError("cannot open '" + path + "' for writing");
    file << body;
}

void emit_report(std::ostream& out, const VerificationReport& report, const std::string& command,
                 const Options& opt) {
    const io::Format format = kFormats.at(opt.format);
    switch (format) {
        case io::Format::Json:
            out << io::report_record(report, command, opt.timing).dump(2) << '\n';
            return;
        case io::Format::Human:
            io::write_report_human(out, report, opt.timing);
            return;
        case io::Format::Csv: {
            std::ostringstream census_csv, histogram_csv;
            io::write_census_csv(census_csv, report);
            io::write_histogram_csv(histogram_csv, report);
            if (opt.output.empty()) {
                out << census_csv.str() << '\n' << histogram_csv.str();
            } else {
                write_file(opt.output + ".census.csv", census_csv.str());
                write_file(opt.output + ".histogram.csv", histogram_csv.str());
                out << opt.output << ".census.csv\n" << opt.output << ".histogram.csv\n";
            }
            return;
        }
    }
}

void add_format(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Gap heuristic topology for the pancake puzzle", "gap_topology"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "Gap count, strips, moves and taxonomy class of a state");
    classify->add_option("permutation", opt.permutation, "Stack top to bottom, e.g. 2,1,4,3")->required();
    add_format(classify, opt);

    auto* solve = app.add_subcommand("solve", "Sort a state with the optimal oracle or the greedy escape solver");
    solve->add_option("permutation", opt.permutation, "Stack top to bottom, e.g. 2,1,4,3")->required();
    solve->add_option("--mode", opt.mode, "optimal or greedy")
        ->check(CLI::IsMember({"optimal", "greedy"}))
        ->capture_default_str();
    add_format(solve, opt);

    auto* exit_cmd = app.add_subcommand("exit-distance", "Plateau exit distance and constructive escape plan");
    exit_cmd->add_option("permutation", opt.permutation, "Stack top to bottom, e.g. 2,1,4,3")->required();
    add_format(exit_cmd, opt);

    auto* verify = app.add_subcommand("verify", "Exhaustively check every theorem over all states of size n");
    verify->add_option("--n", opt.n, "Stack size")->required();
    verify->add_flag("--long", opt.long_run, "Allow n above " + std::to_string(kDefaultVerifySize));
    verify->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    verify->add_option("--output", opt.output, "CSV file prefix (writes <prefix>.census.csv, <prefix>.histogram.csv)");
    verify->add_flag("--timing", opt.timing, "Include elapsed time (output is then run-dependent)");
    add_format(verify, opt);

    auto* census_cmd = app.add_subcommand("census", "Class census and exit-distance histogram, no checks");
    census_cmd->add_option("--n", opt.n, "Stack size")->required();
    census_cmd->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    census_cmd->add_option("--output", opt.output, "CSV file prefix");
    census_cmd->add_flag("--timing", opt.timing, "Include elapsed time");
    add_format(census_cmd, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const io::Format format = kFormats.at(opt.format);
        if (classify->parsed()) {
            emit_record(out, io::classify_record(parse_permutation(opt.permutation)), format);
            return kExitOk;
        }
        if (solve->parsed()) {
            const PancakeState state = parse_permutation(opt.permutation);
            const bool optimal = opt.mode == "optimal";
            const SolveResult result = optimal ? optimal_solve(state) : greedy_solve(state);
            emit_record(out, io::solve_record(state, result, optimal), format);
            return kExitOk;
        }
        if (exit_cmd->parsed()) {
            emit_record(out, io::exit_distance_record(parse_permutation(opt.permutation)), format);
            return kExitOk;
        }
        const VerifyOptions verify_options{opt.jobs, opt.long_run};
        if (verify->parsed()) {
            const VerificationReport report = verify_theorems(opt.n, verify_options);
            emit_report(out, report, "verify", opt);
            return report.passed() ? kExitOk : kExitViolations;
        }
        if (census_cmd->parsed()) {
            emit_report(out, census(opt.n, verify_options), "census", opt);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TheoremViolation& e) {
        err << "violation: " << e.what() << '\n';
        return kExitViolations;
    }
    return kExitUsage;
}

}  // namespace gaptopo::cli
