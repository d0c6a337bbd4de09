#include "tdart/bench.hpp"
#include "tdart/modelgen.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace tdart;

namespace {

BenchCell fig4_cell(std::string engine, std::string goal)
{
    BenchCell cell;
    cell.model_name = "fig4";
    cell.param = 0;
    cell.engine = std::move(engine);
    cell.make_model = [] { return validate(gen_fig4()); };
    cell.goal = std::move(goal);
    return cell;
}

std::vector<BenchCell> fischer_cells(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<BenchCell> cells;
    for (std::uint64_t k = lo; k <= hi; ++k)
        for (const char* engine : {"naive", "darts"}) {
            BenchCell cell;
            cell.model_name = "fischer";
            cell.param = k;
            cell.engine = engine;
            cell.make_model = [k] { return validate(gen_fischer(ClockValue(k))); };
            cell.goal = "violation";
            cells.push_back(std::move(cell));
        }
    return cells;
}

} // namespace

TEST_CASE("csv rows match the fixed column layout")
{
    CHECK(csv_header() == "model,param,engine,reachable,discovered,stored,time_ms,status");

    BenchRow row;
    row.model = "fischer";
    row.param = 4;
    row.engine = "darts";
    row.reachable = false;
    row.discovered = 123;
    row.stored = 45;
    row.time_ms = 6;
    row.status = "ok";
    CHECK(to_csv(row) == "fischer,4,darts,false,123,45,6,ok");

    row.reachable = true;
    CHECK(to_csv(row) == "fischer,4,darts,true,123,45,6,ok");

    row.reachable.reset();
    row.status = "timeout";
    CHECK(to_csv(row) == "fischer,4,darts,,123,45,6,timeout");
}

TEST_CASE("a cell run carries the verdict and the terminal status")
{
    const BenchRow done = run_cell(fig4_cell("darts", "l3"), ReachLimits{});
    CHECK(done.model == "fig4");
    CHECK(done.engine == "darts");
    CHECK(done.status == "ok");
    REQUIRE(done.reachable.has_value());
    CHECK_FALSE(*done.reachable);
    CHECK(done.discovered == 16);
    CHECK(done.stored == 6);

    const BenchRow hit = run_cell(fig4_cell("naive", "l1"), ReachLimits{});
    CHECK(hit.status == "ok");
    REQUIRE(hit.reachable.has_value());
    CHECK(*hit.reachable);

    ReachLimits rushed;
    rushed.timeout = std::chrono::milliseconds(0);
    const BenchRow cut = run_cell(fig4_cell("darts", "l3"), rushed);
    CHECK(cut.status == "timeout");
    CHECK_FALSE(cut.reachable.has_value());

    ReachLimits cramped;
    cramped.max_stored = 1;
    const BenchRow full = run_cell(fig4_cell("naive", "l3"), cramped);
    CHECK(full.status == "oom-cap");
    CHECK_FALSE(full.reachable.has_value());
}

TEST_CASE("a cell with an unknown goal or engine is rejected")
{
    CHECK_THROWS(run_cell(fig4_cell("darts", "nowhere"), ReachLimits{}));
    CHECK_THROWS(run_cell(fig4_cell("quantum", "l3"), ReachLimits{}));
}

TEST_CASE("a benchmark sweep delivers rows in cell order")
{
    const std::vector<BenchCell> cells = fischer_cells(3, 4);
    REQUIRE(cells.size() == 4);

    std::vector<BenchRow> rows;
    run_bench(cells, ReachLimits{}, 1, [&](const BenchRow& r) { rows.push_back(r); });
    REQUIRE(rows.size() == 4);

    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].model == "fischer");
        CHECK(rows[i].param == cells[i].param);
        CHECK(rows[i].engine == cells[i].engine);
        CHECK(rows[i].status == "ok");
        REQUIRE(rows[i].reachable.has_value());
        CHECK_FALSE(*rows[i].reachable);
    }
    // Engine pairs share a param and must share a verdict.
    CHECK(rows[0].reachable == rows[1].reachable);
    CHECK(rows[2].reachable == rows[3].reachable);

    std::vector<BenchRow> parallel;
    run_bench(cells, ReachLimits{}, 2, [&](const BenchRow& r) { parallel.push_back(r); });
    REQUIRE(parallel.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parallel[i].param == rows[i].param);
        CHECK(parallel[i].engine == rows[i].engine);
        CHECK(parallel[i].reachable == rows[i].reachable);
        CHECK(parallel[i].discovered == rows[i].discovered);
        CHECK(parallel[i].stored == rows[i].stored);
    }
}
