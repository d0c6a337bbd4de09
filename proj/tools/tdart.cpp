#include "tdart/bench.hpp"
#include "tdart/dart_engine.hpp"
#include "tdart/model_io.hpp"
#include "tdart/modelgen.hpp"
#include "tdart/naive_engine.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using namespace tdart;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResourceLimit = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

NatInf parse_bound(const std::string& text)
{
    if (text == "inf")
        return NatInf::inf();
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size())
        throw std::invalid_argument("bad bound '" + text + "'");
    return NatInf(v);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::uint64_t v = std::stoull(text);
        return {v, v};
    }
    const std::uint64_t lo = std::stoull(text.substr(0, dots));
    const std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (lo > hi)
        throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
}

struct CheckArgs {
    std::string model_path;
    std::string goal;
    std::string engine = "darts";
    std::string order = "fifo";
    std::uint64_t max_stored = ReachLimits{}.max_stored;
    std::uint64_t timeout_ms = std::uint64_t(ReachLimits{}.timeout.count());
    bool trace = false;
};

int cmd_check(const CheckArgs& args)
{
    ValidatedModel model = [&] {
        const TimedAutomaton parsed = load_model(read_file(args.model_path));
        return validate(parsed);
    }();

    const auto goal = model.automaton().find_location(args.goal);
    if (!goal) {
        std::cerr << "error: goal location '" << args.goal << "' not in model\n";
        return kExitUsage;
    }
    if (args.trace && args.engine != "darts") {
        std::cerr << "error: --trace needs --engine darts\n";
        return kExitUsage;
    }

    const SearchOrder order = args.order == "lifo" ? SearchOrder::Lifo : SearchOrder::Fifo;
    ReachLimits limits;
    limits.max_stored = args.max_stored;
    limits.timeout = std::chrono::milliseconds(args.timeout_ms);

    ReachResult res;
    if (args.engine == "naive") {
        res = reach_naive(model, *goal, order, limits);
    } else {
        DartOptions options;
        options.order = order;
        options.limits = limits;
        if (args.trace)
            options.trace = [&model](const DartTraceEvent& ev) {
                std::cerr << render_trace_line(ev, model) << '\n';
            };
        res = run_darts(model, *goal, options).result;
    }

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(res.elapsed).count();
    std::cerr << "discovered=" << res.discovered << " stored=" << res.stored
              << " iterations=" << res.iterations << " time_ms=" << ms << '\n';

    if (res.status != RunStatus::Complete) {
        std::cerr << "resource limit: "
                  << (res.status == RunStatus::Timeout ? "timeout" : "stored cap") << '\n';
        return kExitResourceLimit;
    }
    std::cout << (res.reachable ? "REACHABLE" : "UNREACHABLE") << '\n';
    return kExitOk;
}

struct GenArgs {
    std::string kind;
    std::string out = "-";
    std::uint32_t n = 3;
    std::string bound = "inf";
    std::uint32_t k = 3;
    RandomModelParams random;
};

int cmd_gen(const GenArgs& args)
{
    TimedAutomaton model;
    if (args.kind == "fig4")
        model = gen_fig4();
    else if (args.kind == "lcm")
        model = gen_lcm(args.n, parse_bound(args.bound));
    else if (args.kind == "fischer")
        model = gen_fischer(args.k);
    else
        model = gen_random(args.random);
    write_output(args.out, dump_model(model));
    return kExitOk;
}

struct BenchArgs {
    std::string suite;
    std::string range = "3..6";
    std::string engines = "both";
    std::string bound = "inf";
    std::vector<std::string> models;
    std::string goal;
    std::string csv = "-";
    std::uint64_t max_stored = ReachLimits{}.max_stored;
    std::uint64_t timeout_ms = std::uint64_t(ReachLimits{}.timeout.count());
    std::size_t jobs = 1;
};

int cmd_bench(const BenchArgs& args)
{
    std::vector<std::string> engines;
    if (args.engines == "both")
        engines = {"naive", "darts"};
    else if (args.engines == "naive" || args.engines == "darts")
        engines = {args.engines};
    else
        throw std::invalid_argument("unknown engine '" + args.engines + "'");

    std::vector<BenchCell> cells;
    auto add_cells = [&](const std::string& name, std::uint64_t param,
                         std::function<ValidatedModel()> make, const std::string& goal) {
        for (const std::string& engine : engines)
            cells.push_back({name, param, engine, make, goal});
    };

    if (args.suite == "fischer") {
        const auto [lo, hi] = parse_range(args.range);
        for (std::uint64_t k = lo; k <= hi; ++k)
            add_cells("fischer", k,
                      [k] { return validate(gen_fischer(ClockValue(k))); }, "violation");
    } else if (args.suite == "lcm") {
        const auto [lo, hi] = parse_range(args.range);
        const NatInf bound = parse_bound(args.bound);
        for (std::uint64_t n = lo; n <= hi; ++n)
            add_cells("lcm", n,
                      [n, bound] { return validate(gen_lcm(std::uint32_t(n), bound)); }, "Goal");
    } else if (args.suite == "custom") {
        if (args.models.empty() || args.goal.empty())
            throw std::invalid_argument("custom suite needs --models and --goal");
        for (std::size_t i = 0; i < args.models.size(); ++i) {
            const std::string path = args.models[i];
            auto slash = path.find_last_of('/');
            std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
            if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
                stem = stem.substr(0, dot);
            add_cells(stem, i, [path] { return validate(load_model(read_file(path))); },
                      args.goal);
        }
    } else {
        throw std::invalid_argument("unknown suite '" + args.suite + "'");
    }

    ReachLimits limits;
    limits.max_stored = args.max_stored;
    limits.timeout = std::chrono::milliseconds(args.timeout_ms);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (args.csv != "-") {
        file.open(args.csv, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write '" + args.csv + "'");
        out = &file;
    }

    *out << csv_header() << '\n' << std::flush;
    run_bench(cells, limits, args.jobs, [&](const BenchRow& row) {
        *out << to_csv(row) << '\n' << std::flush; // keep partial results on interruption
    });
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reachability checking for closed timed automata over integer time"};
    app.require_subcommand(1);

    CheckArgs check;
    CLI::App* check_cmd = app.add_subcommand("check", "Decide goal-location reachability");
    check_cmd->add_option("model", check.model_path, "Model file (JSON)")->required();
    check_cmd->add_option("--goal", check.goal, "Goal location name")->required();
    check_cmd->add_option("--engine", check.engine, "Search engine")
        ->check(CLI::IsMember({"naive", "darts"}));
    check_cmd->add_option("--order", check.order, "Waiting order")
        ->check(CLI::IsMember({"fifo", "lifo"}));
    check_cmd->add_option("--max-stored", check.max_stored, "Stored-state cap");
    check_cmd->add_option("--timeout-ms", check.timeout_ms, "Wall-clock budget");
    check_cmd->add_flag("--trace", check.trace, "Per-iteration dump (darts only)");

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a generated model");
    gen_cmd->add_option("kind", gen.kind, "fig4|lcm|fischer|random")
        ->required()
        ->check(CLI::IsMember({"fig4", "lcm", "fischer", "random"}));
    gen_cmd->add_option("--out", gen.out, "Output path, - for stdout");
    gen_cmd->add_option("--n", gen.n, "lcm: number of looping clocks");
    gen_cmd->add_option("--bound", gen.bound, "lcm: upper bound on y, or inf");
    gen_cmd->add_option("--k", gen.k, "fischer: lock constant");
    gen_cmd->add_option("--seed", gen.random.seed, "random: seed");
    gen_cmd->add_option("--clocks", gen.random.clocks, "random: clock count");
    gen_cmd->add_option("--locations", gen.random.locations, "random: location count");
    gen_cmd->add_option("--edges", gen.random.edges, "random: edge count");
    gen_cmd->add_option("--max-bound", gen.random.max_bound, "random: largest guard constant");
    gen_cmd->add_option("--reset-prob", gen.random.reset_prob, "random: per-clock reset chance");
    gen_cmd->add_option("--guard-density", gen.random.guard_density,
                        "random: per-clock constraint chance");

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite to CSV");
    bench_cmd->add_option("suite", bench.suite, "fischer|lcm|custom")->required();
    bench_cmd->add_option("--range", bench.range, "Parameter range a..b");
    bench_cmd->add_option("--engine", bench.engines, "naive|darts|both");
    bench_cmd->add_option("--bound", bench.bound, "lcm suite: bound on y");
    bench_cmd->add_option("--models", bench.models, "custom suite: model files")
        ->delimiter(',');
    bench_cmd->add_option("--goal", bench.goal, "custom suite: goal location");
    bench_cmd->add_option("--csv", bench.csv, "CSV path, - for stdout");
    bench_cmd->add_option("--max-stored", bench.max_stored, "Stored-state cap");
    bench_cmd->add_option("--timeout-ms", bench.timeout_ms, "Per-run wall-clock budget");
    bench_cmd->add_option("--jobs", bench.jobs, "Concurrent runs (timings get noisy)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check_cmd->parsed())
            return cmd_check(check);
        if (gen_cmd->parsed())
            return cmd_gen(gen);
        return cmd_bench(bench);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
