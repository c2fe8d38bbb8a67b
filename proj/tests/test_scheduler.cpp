#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icolor/io.hpp"
#include "icolor/scheduler.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <fstream>

#include <filesystem>
#include <random>
#include <sstream>

using namespace icolor;

namespace {

ConferenceInstance csv(const std::string& text) {
    std::istringstream in(text);
    return load_instance_csv(in);
}

} // namespace

TEST_CASE("CSV loading and validation") {
    ConferenceInstance inst = csv("parent,teacher\n"
                                  "alice,mr_x\n"
                                  "alice,ms_y\n"
                                  "bob,mr_x\n"
                                  "bob,ms_y\n");
    CHECK(inst.parents == std::vector<std::string>{"alice", "bob"});
    CHECK(inst.teachers == std::vector<std::string>{"mr_x", "ms_y"});
    CHECK(inst.meetings.size() == 4);
    CHECK(inst.warnings.empty());

    Graph g = meeting_graph(inst);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4); // K_{2,2}, a 4-cycle
    CHECK(g.bipartition().bipartite);
}

TEST_CASE("CSV duplicate rows are dropped with a warning") {
    ConferenceInstance inst = csv("parent,teacher\nalice,mr_x\nalice,mr_x\n");
    CHECK(inst.meetings.size() == 1);
    REQUIRE(inst.warnings.size() == 1);
    CHECK(inst.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("CSV errors carry line numbers") {
    CHECK_THROWS_WITH_AS(csv("parent,teacher\nalice,alice\n"),
                         doctest::Contains("both parent and teacher"), ScheduleError);
    CHECK_THROWS_WITH_AS(csv("parent,teacher\njustonefield\n"),
                         doctest::Contains("line 2"), ScheduleError);
    CHECK_THROWS_WITH_AS(csv("parent,teacher\na,b,c\n"),
                         doctest::Contains("line 2"), ScheduleError);
    // A name on both sides across rows.
    CHECK_THROWS_AS(csv("parent,teacher\nalice,bob\nbob,carol\n"), ScheduleError);
}

TEST_CASE("K22 schedules in two slots with everyone fully busy") {
    ConferenceInstance inst = csv("parent,teacher\np1,t1\np1,t2\np2,t1\np2,t2\n");
    ScheduleResult r = schedule_no_wait(inst);
    REQUIRE(r.status == ScheduleStatus::Ok);
    CHECK(r.timetable->horizon() == 2);
    CHECK(check_no_wait(inst, *r.timetable).empty());
}

TEST_CASE("a star instance needs as many slots as meetings") {
    ConferenceInstance inst =
        csv("parent,teacher\np1,t\np2,t\np3,t\np4,t\np5,t\n");
    ScheduleResult r = schedule_no_wait(inst);
    REQUIRE(r.status == ScheduleStatus::Ok);
    CHECK(r.timetable->horizon() == 5);
    CHECK(check_no_wait(inst, *r.timetable).empty());
}

TEST_CASE("horizon demands are exact on connected instances") {
    ConferenceInstance inst = csv("parent,teacher\np1,t1\np1,t2\np2,t1\np2,t2\n");
    ScheduleResult three = schedule_no_wait(inst, 3);
    REQUIRE(three.status == ScheduleStatus::Ok);
    CHECK(three.timetable->horizon() == 3);
    CHECK(check_no_wait(inst, *three.timetable).empty());

    // The 4-cycle has no 4-slot no-wait schedule.
    ScheduleResult four = schedule_no_wait(inst, 4);
    CHECK(four.status == ScheduleStatus::None);
}

TEST_CASE("disconnected instances are scheduled per component from slot 1") {
    ConferenceInstance inst = csv("parent,teacher\np1,t1\np2,t2\np3,t2\n");
    ScheduleResult r = schedule_no_wait(inst);
    REQUIRE(r.status == ScheduleStatus::Ok);
    CHECK(check_no_wait(inst, *r.timetable).empty());
    int min_slot = 99;
    for (const auto& e : r.timetable->entries)
        min_slot = std::min(min_slot, e.slot);
    CHECK(min_slot == 1);
    CHECK(r.timetable->horizon() == 2);
}

TEST_CASE("timetable and coloring checkers agree both ways") {
    std::mt19937_64 rng(808);
    int rounds = 0;
    while (rounds < 60) {
        // Random bipartite instance with random slots, valid or not.
        int np = 2 + static_cast<int>(rng() % 3);
        int nt = 2 + static_cast<int>(rng() % 3);
        std::set<std::pair<std::string, std::string>> pairs;
        int want = 3 + static_cast<int>(rng() % 6);
        for (int i = 0; i < want; ++i)
            pairs.insert({"p" + std::to_string(rng() % np),
                          "t" + std::to_string(rng() % nt)});
        std::vector<std::pair<std::string, std::string>> meetings(pairs.begin(), pairs.end());

        ConferenceInstance inst;
        std::set<std::string> ps, ts;
        for (auto& [p, t] : meetings) {
            ps.insert(p);
            ts.insert(t);
        }
        inst.parents.assign(ps.begin(), ps.end());
        inst.teachers.assign(ts.begin(), ts.end());
        inst.meetings = meetings;

        Timetable tt;
        std::vector<int> slots;
        for (auto& [p, t] : meetings) {
            int slot = 1 + static_cast<int>(rng() % 4);
            tt.entries.push_back({p, t, 1, slot});
            slots.push_back(slot);
        }

        bool checker_ok = check_no_wait(inst, tt).empty();
        Graph mg = meeting_graph(inst);
        EdgeColoring c = coloring_from_timetable(mg, tt);
        bool coloring_ok = verify_interval(mg, c).empty();
        CHECK(checker_ok == coloring_ok);
        CHECK(checker_ok == testsupport::naive_no_wait(meetings, slots));
        ++rounds;
    }
}

TEST_CASE("multi-session scheduling partitions the meetings") {
    // A triangle-free but odd-cycle-free... any bipartite instance; use one
    // whose graph the solver certifies, so a single session suffices.
    ConferenceInstance k33 = csv("parent,teacher\n"
                                 "p1,t1\np1,t2\np1,t3\n"
                                 "p2,t1\np2,t2\np2,t3\n"
                                 "p3,t1\np3,t2\np3,t3\n");
    Timetable tt = schedule_multi_session(k33);
    CHECK(tt.sessions() == 1);
    CHECK(tt.horizon() == 3);
    CHECK(check_no_wait(k33, tt).empty());

    ConferenceInstance tree = csv("parent,teacher\np1,t1\np2,t1\np2,t2\np3,t2\n");
    Timetable tree_tt = schedule_multi_session(tree);
    CHECK(tree_tt.sessions() == 1);
    CHECK(check_no_wait(tree, tree_tt).empty());
    CHECK(tree_tt.entries.size() == tree.meetings.size());
}

TEST_CASE("timetable CSV round trip") {
    ConferenceInstance inst = csv("parent,teacher\np1,t1\np1,t2\np2,t1\n");
    ScheduleResult r = schedule_no_wait(inst);
    REQUIRE(r.status == ScheduleStatus::Ok);
    std::string text = timetable_to_csv(*r.timetable);
    std::istringstream in(text);
    Timetable back = timetable_from_csv(in);
    CHECK(back.entries.size() == r.timetable->entries.size());
    CHECK(check_no_wait(inst, back).empty());
}

TEST_CASE("instance JSON loading") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "icolor_sched_test";
    fs::create_directories(dir);
    fs::path path = dir / "inst.json";
    write_text_file(path, R"({"meetings": [["alice","mr_x"], ["bob","mr_x"]]})");
    ConferenceInstance inst = load_instance_json(path);
    CHECK(inst.meetings.size() == 2);
    CHECK(inst.parents == std::vector<std::string>{"alice", "bob"});
}

TEST_CASE("instability demo emits verified artifacts") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "icolor_demo_test";
    fs::remove_all(dir);

    SearchOptions probe;
    probe.budget.max_nodes = 5000;
    InstabilityReport report = demo_instability(1, 24, dir, probe);

    CHECK(report.realized_horizons == std::vector<int>{74, 99});
    REQUIRE(report.gaps.size() == 1);
    CHECK(report.gaps[0].size() == 24);
    CHECK(fs::exists(dir / "instance.csv"));
    CHECK(fs::exists(dir / "timetable_74.csv"));
    CHECK(fs::exists(dir / "timetable_99.csv"));
    CHECK(fs::exists(dir / "report.md"));
    CHECK(report.text.find("74") != std::string::npos);
    CHECK(report.text.find("99") != std::string::npos);
    CHECK(report.text.find("TIMEOUT") != std::string::npos);

    // Round trip: the emitted instance and timetables satisfy the checker.
    ConferenceInstance inst = load_instance_csv(dir / "instance.csv");
    for (int t : report.realized_horizons) {
        std::ifstream in(dir / ("timetable_" + std::to_string(t) + ".csv"));
        Timetable tt = timetable_from_csv(in);
        CHECK(check_no_wait(inst, tt).empty());
        CHECK(tt.horizon() == t);
    }

    // A horizon inside the gap cannot be certified either way at this size;
    // with a bounded budget that must surface as timeout (never a schedule).
    ScheduleResult blocked = schedule_no_wait(inst, 80, probe);
    CHECK((blocked.status == ScheduleStatus::Timeout ||
           blocked.status == ScheduleStatus::None));
    CHECK_FALSE(blocked.timetable.has_value());
}

TEST_CASE("instability demo with two gaps") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "icolor_demo_test_k2";
    fs::remove_all(dir);

    SearchOptions probe;
    probe.budget.max_nodes = 1000;
    InstabilityReport report = demo_instability(2, 24, dir, probe);

    REQUIRE(report.gaps.size() == 2);
    for (const Gap& gap : report.gaps)
        CHECK(gap.size() >= 24);
    // Flanking horizons of both gaps: 290 | gap | 362..363 | gap | 458.
    CHECK(report.realized_horizons == std::vector<int>{290, 362, 363, 458});
    ConferenceInstance inst = load_instance_csv(dir / "instance.csv");
    for (int t : report.realized_horizons) {
        std::ifstream in(dir / ("timetable_" + std::to_string(t) + ".csv"));
        Timetable tt = timetable_from_csv(in);
        CHECK(check_no_wait(inst, tt).empty());
        CHECK(tt.horizon() == t);
    }
}
