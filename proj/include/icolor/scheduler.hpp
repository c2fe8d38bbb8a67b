#pragma once

#include "icolor/graph.hpp"
#include "icolor/spectrum.hpp"
#include "icolor/thickness.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace icolor {

// Parent-teacher conference: every meeting takes one slot, and nobody is
// willing to sit idle between their meetings.
struct ConferenceInstance {
    std::vector<std::string> parents;  // sorted
    std::vector<std::string> teachers; // sorted
    std::vector<std::pair<std::string, std::string>> meetings; // (parent, teacher)
    std::vector<std::string> warnings; // e.g. dropped duplicate rows
};

// CSV with header "parent,teacher". Duplicate rows are dropped with a
// warning; a name on both sides or a malformed row is an error (with its
// line number).
ConferenceInstance load_instance_csv(std::istream& in);
ConferenceInstance load_instance_csv(const std::filesystem::path& path);

// JSON: {"meetings": [["alice","mr_x"], ...]}.
ConferenceInstance load_instance_json(const std::filesystem::path& path);

std::string instance_to_csv(const ConferenceInstance& inst);

// The bipartite meeting graph (parents on one side, teachers on the other).
Graph meeting_graph(const ConferenceInstance& inst);

struct Timetable {
    struct Entry {
        std::string parent, teacher;
        int session = 1;
        int slot = 0;
    };
    std::vector<Entry> entries;

    int horizon() const; // max slot over all entries
    int sessions() const;
};

// Independent no-wait validator: knows nothing about edge colorings. Checks
// each meeting is scheduled once per instance, and per session each
// participant's slots are distinct and consecutive. Returns problems found.
std::vector<std::string> check_no_wait(const ConferenceInstance& inst, const Timetable& tt);

// Timetable <-> coloring translation (slot = color; one session).
Timetable timetable_from_coloring(const ConferenceInstance& inst, const EdgeColoring& c);
EdgeColoring coloring_from_timetable(const Graph& meeting_graph, const Timetable& tt);

enum class ScheduleStatus { Ok, None, Timeout };

struct ScheduleResult {
    ScheduleStatus status = ScheduleStatus::None;
    std::optional<Timetable> timetable;
};

// One-session no-wait schedule. With a horizon, demands a schedule spanning
// exactly that many slots (on a connected instance this is t-interval
// colorability of the meeting graph); otherwise returns the shortest
// schedule found within budget. Disconnected instances are scheduled per
// component, all starting at slot 1.
ScheduleResult schedule_no_wait(const ConferenceInstance& inst,
                                std::optional<int> horizon = {},
                                const SearchOptions& opt = {});

// Multi-day fallback: decompose the meeting graph into interval colorable
// parts; each part becomes one no-wait session.
Timetable schedule_multi_session(const ConferenceInstance& inst,
                                 const SearchOptions& opt = {});

std::string timetable_to_csv(const Timetable& tt);
Timetable timetable_from_csv(std::istream& in);

// Spectrum-gap instability demo: writes the gadget conference instance, a
// checker-verified timetable for each achievable horizon flanking a gap, and
// a human-readable report. Gap infeasibility itself is guaranteed by the
// gadget construction, not re-proved by search; a budgeted solver probe per
// gap records its status honestly.
struct InstabilityReport {
    int k = 0, d = 0;
    std::vector<int> realized_horizons;
    std::vector<Gap> gaps;
    std::vector<std::filesystem::path> artifacts;
    std::string text;
};

InstabilityReport demo_instability(int k, int d, const std::filesystem::path& out_dir,
                                   const SearchOptions& probe_opt = {});

} // namespace icolor
