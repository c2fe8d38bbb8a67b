#include "icolor/scheduler.hpp"

#include "icolor/gadgets.hpp"
#include "icolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace icolor {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

void validate_name(const std::string& name, int line) {
    if (name.empty())
        throw ScheduleError("line " + std::to_string(line) + ": empty name");
    if (name.find("--") != std::string::npos)
        throw ScheduleError("line " + std::to_string(line) + ": name '" + name +
                            "' may not contain \"--\"");
}

ConferenceInstance build_instance(
    std::vector<std::pair<std::string, std::string>> rows,
    std::vector<int> row_lines) {
    ConferenceInstance inst;
    std::set<std::string> parents, teachers;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& [p, t] = rows[i];
        if (!seen.insert(rows[i]).second) {
            inst.warnings.push_back("line " + std::to_string(row_lines[i]) +
                                    ": duplicate meeting " + p + "," + t + " dropped");
            continue;
        }
        parents.insert(p);
        teachers.insert(t);
        inst.meetings.push_back(rows[i]);
    }
    for (const auto& p : parents)
        if (teachers.count(p))
            throw ScheduleError("name '" + p + "' appears as both parent and teacher");
    inst.parents.assign(parents.begin(), parents.end());
    inst.teachers.assign(teachers.begin(), teachers.end());
    std::sort(inst.meetings.begin(), inst.meetings.end());
    return inst;
}

} // namespace

ConferenceInstance load_instance_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<std::string, std::string>> rows;
    std::vector<int> row_lines;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty())
            continue;
        auto comma = t.find(',');
        if (comma == std::string::npos)
            throw ScheduleError("line " + std::to_string(line_no) +
                                ": expected \"parent,teacher\", got '" + t + "'");
        std::string a = trim(t.substr(0, comma));
        std::string b = trim(t.substr(comma + 1));
        if (b.find(',') != std::string::npos)
            throw ScheduleError("line " + std::to_string(line_no) + ": too many fields");
        if (!header_seen) {
            header_seen = true;
            if (a == "parent" && b == "teacher")
                continue; // header row
        }
        validate_name(a, line_no);
        validate_name(b, line_no);
        rows.emplace_back(a, b);
        row_lines.push_back(line_no);
    }
    return build_instance(std::move(rows), std::move(row_lines));
}

ConferenceInstance load_instance_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return load_instance_csv(in);
}

ConferenceInstance load_instance_json(const std::filesystem::path& path) {
    nlohmann::json j = load_json_file(path);
    std::vector<std::pair<std::string, std::string>> rows;
    std::vector<int> row_lines;
    try {
        int i = 0;
        for (const auto& pair : j.at("meetings")) {
            rows.emplace_back(pair.at(0).get<std::string>(),
                              pair.at(1).get<std::string>());
            row_lines.push_back(++i);
            validate_name(rows.back().first, i);
            validate_name(rows.back().second, i);
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError("bad instance JSON: " + std::string(e.what()));
    }
    return build_instance(std::move(rows), std::move(row_lines));
}

std::string instance_to_csv(const ConferenceInstance& inst) {
    std::ostringstream out;
    out << "parent,teacher\n";
    for (const auto& [p, t] : inst.meetings)
        out << p << "," << t << "\n";
    return out.str();
}

Graph meeting_graph(const ConferenceInstance& inst) {
    std::vector<VertexId> vertices;
    vertices.insert(vertices.end(), inst.parents.begin(), inst.parents.end());
    vertices.insert(vertices.end(), inst.teachers.begin(), inst.teachers.end());
    std::vector<std::pair<VertexId, VertexId>> edges(inst.meetings.begin(),
                                                     inst.meetings.end());
    std::map<VertexId, std::string> roles;
    for (const auto& p : inst.parents)
        roles[p] = "parent";
    for (const auto& t : inst.teachers)
        roles[t] = "teacher";
    return Graph::build(std::move(vertices), std::move(edges), std::move(roles));
}

int Timetable::horizon() const {
    int h = 0;
    for (const auto& e : entries)
        h = std::max(h, e.slot);
    return h;
}

int Timetable::sessions() const {
    int s = 0;
    for (const auto& e : entries)
        s = std::max(s, e.session);
    return s;
}

std::vector<std::string> check_no_wait(const ConferenceInstance& inst,
                                       const Timetable& tt) {
    std::vector<std::string> problems;
    std::set<std::pair<std::string, std::string>> scheduled;
    std::set<std::pair<std::string, std::string>> wanted(inst.meetings.begin(),
                                                         inst.meetings.end());

    // (session, participant) -> slots
    std::map<std::pair<int, std::string>, std::vector<int>> busy;
    for (const auto& e : tt.entries) {
        if (!wanted.count({e.parent, e.teacher}))
            problems.push_back("unknown meeting " + e.parent + "," + e.teacher);
        if (!scheduled.insert({e.parent, e.teacher}).second)
            problems.push_back("meeting " + e.parent + "," + e.teacher +
                               " scheduled twice");
        if (e.slot < 1)
            problems.push_back("meeting " + e.parent + "," + e.teacher +
                               " has slot < 1");
        busy[{e.session, e.parent}].push_back(e.slot);
        busy[{e.session, e.teacher}].push_back(e.slot);
    }
    for (const auto& m : wanted)
        if (!scheduled.count(m))
            problems.push_back("meeting " + m.first + "," + m.second +
                               " not scheduled");

    for (auto& [key, slots] : busy) {
        std::sort(slots.begin(), slots.end());
        for (std::size_t i = 1; i < slots.size(); ++i) {
            if (slots[i] == slots[i - 1]) {
                problems.push_back("session " + std::to_string(key.first) + ": " +
                                   key.second + " is double-booked in slot " +
                                   std::to_string(slots[i]));
            } else if (slots[i] != slots[i - 1] + 1) {
                problems.push_back("session " + std::to_string(key.first) + ": " +
                                   key.second + " waits between slot " +
                                   std::to_string(slots[i - 1]) + " and " +
                                   std::to_string(slots[i]));
            }
        }
    }
    return problems;
}

Timetable timetable_from_coloring(const ConferenceInstance& inst,
                                  const EdgeColoring& c) {
    Timetable tt;
    for (const auto& [p, t] : inst.meetings) {
        Timetable::Entry e;
        e.parent = p;
        e.teacher = t;
        e.session = 1;
        e.slot = c.at(Edge(p, t));
        tt.entries.push_back(std::move(e));
    }
    return tt;
}

EdgeColoring coloring_from_timetable(const Graph& mg, const Timetable& tt) {
    EdgeColoring c;
    for (const auto& e : tt.entries) {
        Edge edge(e.parent, e.teacher);
        if (!mg.has_edge(edge))
            throw ScheduleError("timetable mentions unknown meeting " + edge.key());
        c.colors[edge] = e.slot;
    }
    return c;
}

ScheduleResult schedule_no_wait(const ConferenceInstance& inst,
                                std::optional<int> horizon,
                                const SearchOptions& opt) {
    Graph mg = meeting_graph(inst);
    ScheduleResult result;
    if (inst.meetings.empty()) {
        result.status = ScheduleStatus::Ok;
        result.timetable = Timetable{};
        return result;
    }

    std::vector<EdgeColoring> per_component;
    bool timed_out = false;
    for (const auto& comp_vertices : mg.components()) {
        std::set<VertexId> in(comp_vertices.begin(), comp_vertices.end());
        std::vector<Edge> comp_edges;
        for (const Edge& e : mg.edges())
            if (in.count(e.a))
                comp_edges.push_back(e);
        if (comp_edges.empty()) {
            per_component.push_back({});
            continue;
        }
        Graph comp = mg.edge_subgraph(comp_edges);

        std::optional<EdgeColoring> found;
        if (horizon && mg.is_connected()) {
            // Exactly `horizon` slots demanded of the single component.
            SolveResult r = find_coloring(comp, *horizon, opt);
            if (r.status == SolveStatus::Timeout)
                timed_out = true;
            else if (r.status == SolveStatus::Found)
                found = std::move(r.coloring);
        } else {
            // Shortest fit; with a horizon, any t <= horizon works for a
            // component (others may define the overall span).
            int hi = horizon ? std::min<int>(*horizon, comp.edge_count())
                             : static_cast<int>(comp.edge_count());
            for (int t = comp.max_degree(); t <= hi && !found; ++t) {
                SolveResult r = find_coloring(comp, t, opt);
                if (r.status == SolveStatus::Timeout)
                    timed_out = true;
                else if (r.status == SolveStatus::Found)
                    found = std::move(r.coloring);
            }
        }
        if (!found) {
            result.status = timed_out ? ScheduleStatus::Timeout : ScheduleStatus::None;
            return result;
        }
        per_component.push_back(std::move(*found));
    }

    EdgeColoring total = union_coloring(mg, per_component);
    result.status = ScheduleStatus::Ok;
    result.timetable = timetable_from_coloring(inst, total);
    return result;
}

Timetable schedule_multi_session(const ConferenceInstance& inst,
                                 const SearchOptions& opt) {
    Graph mg = meeting_graph(inst);
    Decomposition dec = decompose(mg, opt);
    Timetable tt;
    int session = 0;
    for (const auto& part : dec.parts) {
        ++session;
        for (const Edge& e : part.edges) {
            Timetable::Entry entry;
            // Parents sort ahead of teachers only by name; look the side up.
            const auto& roles = mg.roles();
            bool a_is_parent = roles.at(e.a) == "parent";
            entry.parent = a_is_parent ? e.a : e.b;
            entry.teacher = a_is_parent ? e.b : e.a;
            entry.session = session;
            entry.slot = part.coloring.at(e);
            tt.entries.push_back(std::move(entry));
        }
    }
    return tt;
}

std::string timetable_to_csv(const Timetable& tt) {
    std::ostringstream out;
    out << "meeting,parent,teacher,session,slot\n";
    auto sorted = tt.entries;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.session, a.slot, a.parent, a.teacher) <
               std::tie(b.session, b.slot, b.parent, b.teacher);
    });
    for (const auto& e : sorted)
        out << e.parent << "--" << e.teacher << "," << e.parent << "," << e.teacher
            << "," << e.session << "," << e.slot << "\n";
    return out.str();
}

Timetable timetable_from_csv(std::istream& in) {
    Timetable tt;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || (line_no == 1 && t.rfind("meeting,", 0) == 0))
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ','))
            fields.push_back(trim(field));
        if (fields.size() != 5)
            throw ScheduleError("timetable line " + std::to_string(line_no) +
                                ": expected 5 fields");
        Timetable::Entry e;
        e.parent = fields[1];
        e.teacher = fields[2];
        e.session = std::stoi(fields[3]);
        e.slot = std::stoi(fields[4]);
        tt.entries.push_back(std::move(e));
    }
    return tt;
}

namespace {

ConferenceInstance instance_from_bipartite(const Graph& g) {
    Bipartition bip = g.bipartition();
    if (!bip.bipartite)
        throw ScheduleError("meeting graph must be bipartite");
    std::vector<std::pair<std::string, std::string>> rows;
    for (const Edge& e : g.edges()) {
        const VertexId& p = bip.side.at(e.a) == 0 ? e.a : e.b;
        const VertexId& t = bip.side.at(e.a) == 0 ? e.b : e.a;
        rows.emplace_back("P." + p, "T." + t);
    }
    std::vector<int> lines(rows.size(), 0);
    return build_instance(std::move(rows), std::move(lines));
}

} // namespace

InstabilityReport demo_instability(int k, int d, const std::filesystem::path& out_dir,
                                   const SearchOptions& probe_opt_in) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    SearchOptions probe_opt = probe_opt_in;
    if (!probe_opt.budget.wall && !probe_opt.budget.max_nodes)
        probe_opt.budget.max_nodes = 100000;

    auto [gadget, bp] = build_boldF(k, d);
    SpectrumReport predicted = predicted_spectrum(k, d);

    InstabilityReport report;
    report.k = k;
    report.d = d;
    report.gaps = predicted.gaps;

    ConferenceInstance inst = instance_from_bipartite(gadget);
    fs::path instance_path = out_dir / "instance.csv";
    write_text_file(instance_path, instance_to_csv(inst));
    report.artifacts.push_back(instance_path);

    // Vertex names map 1:1 onto instance names ("P."/"T." prefixes), so a
    // gadget coloring converts directly into slots.
    Bipartition bip = gadget.bipartition();
    auto realize_timetable = [&](int t) {
        EdgeColoring c = realize_t(gadget, bp, t);
        Timetable tt;
        for (const Edge& e : gadget.edges()) {
            Timetable::Entry entry;
            const VertexId& p = bip.side.at(e.a) == 0 ? e.a : e.b;
            const VertexId& tch = bip.side.at(e.a) == 0 ? e.b : e.a;
            entry.parent = "P." + p;
            entry.teacher = "T." + tch;
            entry.session = 1;
            entry.slot = c.at(e);
            tt.entries.push_back(std::move(entry));
        }
        auto problems = check_no_wait(inst, tt);
        if (!problems.empty())
            throw ScheduleError("demo timetable failed validation: " + problems.front());
        return tt;
    };

    // Realize the achievable horizon on each side of each gap.
    std::set<int> horizons;
    for (const Gap& gap : predicted.gaps) {
        horizons.insert(gap.first - 1);
        horizons.insert(gap.last + 1);
    }
    for (int t : horizons) {
        Timetable tt = realize_timetable(t);
        fs::path path = out_dir / ("timetable_" + std::to_string(t) + ".csv");
        write_text_file(path, timetable_to_csv(tt));
        report.artifacts.push_back(path);
        report.realized_horizons.push_back(t);
    }

    std::ostringstream text;
    text << "No-wait schedule instability (k=" << k << ", d=" << d << ")\n";
    text << "=================================================\n\n";
    text << "Instance: " << inst.meetings.size() << " meetings between "
         << inst.parents.size() << " parents and " << inst.teachers.size()
         << " teachers (instance.csv).\n\n";
    text << "Achievable no-wait horizons (timetables realized and checker-verified):\n";
    for (int t : report.realized_horizons)
        text << "  - " << t << " slots  (timetable_" << t << ".csv)\n";
    text << "\nFull spectrum of achievable horizons: {";
    for (std::size_t i = 0; i < predicted.achievable.size(); ++i)
        text << (i ? ", " : "") << predicted.achievable[i];
    text << "}\n\nGaps (no no-wait schedule of these lengths exists; guaranteed by\n"
            "the gadget construction, not re-proved by search at this size):\n";
    for (const Gap& gap : predicted.gaps) {
        text << "  - {" << gap.first << "..." << gap.last << "}  size " << gap.size();
        // A budgeted probe inside the gap, status recorded honestly.
        int probe = gap.first + (gap.last - gap.first) / 2;
        SolveResult r = find_coloring(gadget, probe, probe_opt);
        const char* status = r.status == SolveStatus::None
                                 ? "NONE (search exhausted)"
                                 : r.status == SolveStatus::Timeout
                                       ? "TIMEOUT (budget exhausted)"
                                       : "FOUND";
        text << "  [solver probe at " << probe << ": " << status << "]\n";
    }
    text << "\nEvery listed timetable keeps each participant's meetings in\n"
            "consecutive slots with no double booking.\n";
    report.text = text.str();

    fs::path report_path = out_dir / "report.md";
    write_text_file(report_path, report.text);
    report.artifacts.push_back(report_path);
    return report;
}

} // namespace icolor
