#include "icolor/cli.hpp"

#include "icolor/gadgets.hpp"
#include "icolor/io.hpp"
#include "icolor/scheduler.hpp"
#include "icolor/spectrum.hpp"
#include "icolor/thickness.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace icolor {

namespace {

namespace fs = std::filesystem;

SearchOptions options_from_budget(long long budget_ms) {
    SearchOptions opt;
    if (budget_ms >= 0)
        opt.budget.wall = std::chrono::milliseconds(budget_ms);
    return opt;
}

void write_json(CommandResult& result, const fs::path& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
    result.artifacts.push_back(path.string());
}

std::string format_set(const std::vector<int>& xs) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? ", " : "") << xs[i];
    out << "}";
    return out.str();
}

void cmd_verify(CommandResult& result, const std::string& graph_path,
                const std::string& coloring_path) {
    Graph g = graph_from_json(load_json_file(graph_path));
    EdgeColoring c = coloring_from_json(load_json_file(coloring_path), g);
    auto violations = verify_interval(g, c);
    if (violations.empty()) {
        Palette pal = palette(g, c);
        result.summary.push_back("interval: yes, colors: " +
                                 std::to_string(pal.colors.size()));
    } else {
        result.status = CommandResult::Status::None;
        result.summary.push_back("interval: no, violations: " +
                                 std::to_string(violations.size()));
        std::size_t shown = 0;
        for (const auto& v : violations) {
            if (++shown > 5) {
                result.summary.push_back("  ...");
                break;
            }
            std::string what = v.kind == ViolationKind::ImproperPair
                                   ? "repeated color at "
                                   : "non-consecutive colors at ";
            std::string colors;
            for (int col : v.colors)
                colors += (colors.empty() ? "" : ",") + std::to_string(col);
            result.summary.push_back("  " + what + v.vertex + " {" + colors + "}");
        }
    }
}

void cmd_spectrum(CommandResult& result, const std::string& graph_path,
                  int t_max, long long budget_ms, const std::string& out_path) {
    Graph g = graph_from_json(load_json_file(graph_path));
    std::optional<int> hi;
    if (t_max > 0)
        hi = t_max;
    SpectrumReport report = compute_spectrum(g, hi, options_from_budget(budget_ms));
    if (report.achievable.empty() && !report.partial)
        result.summary.push_back("spectrum: {} (not interval colorable)");
    else
        result.summary.push_back("spectrum: " + format_set(report.achievable) +
                                 (report.partial ? " (partial)" : ""));
    for (const Gap& gap : report.gaps)
        result.summary.push_back("gap: {" + std::to_string(gap.first) + ".." +
                                 std::to_string(gap.last) + "} size " +
                                 std::to_string(gap.size()));
    if (report.partial) {
        result.status = CommandResult::Status::Timeout;
        result.summary.push_back("undecided: " + format_set(report.undecided));
    }
    if (!out_path.empty())
        write_json(result, out_path, spectrum_report_to_json(report));
}

void cmd_gadget_F(CommandResult& result, int b, int T, bool color, bool mirror_it,
                  const std::string& prefix) {
    auto [g, bp] = build_F(b, T);
    write_json(result, prefix + ".graph.json", graph_to_json(g));
    std::optional<EdgeColoring> c;
    if (color || mirror_it) {
        c = explicit_coloring_F(bp);
        if (mirror_it)
            c = mirror(*c);
        write_json(result, prefix + ".coloring.json", coloring_to_json(*c));
    }
    write_text_file(prefix + ".dot", to_dot(g, c));
    result.artifacts.push_back(prefix + ".dot");
    result.summary.push_back("F(" + std::to_string(b) + "," + std::to_string(T) +
                             "): " + std::to_string(g.vertex_count()) + " vertices, " +
                             std::to_string(g.edge_count()) + " edges" +
                             (c ? ", colored with " + std::to_string(T + 1) + " colors"
                                : ""));
}

void cmd_gadget_boldF(CommandResult& result, int k, int d, int realize,
                      const std::string& prefix) {
    auto [g, bp] = build_boldF(k, d);
    write_json(result, prefix + ".graph.json", graph_to_json(g));
    SpectrumReport predicted = predicted_spectrum(k, d);
    write_json(result, prefix + ".spectrum.json", spectrum_report_to_json(predicted));
    std::optional<EdgeColoring> c;
    if (realize > 0) {
        c = realize_t(g, bp, realize);
        write_json(result, prefix + ".coloring.json", coloring_to_json(*c));
    }
    write_text_file(prefix + ".dot", to_dot(g, c));
    result.artifacts.push_back(prefix + ".dot");
    result.summary.push_back(
        "boldF(" + std::to_string(k) + "," + std::to_string(d) + "): " +
        std::to_string(g.vertex_count()) + " vertices, " +
        std::to_string(g.edge_count()) + " edges, spectrum " +
        format_set(predicted.achievable));
    if (realize > 0)
        result.summary.push_back("realized interval coloring with " +
                                 std::to_string(realize) + " colors");
}

void cmd_thickness(CommandResult& result, const std::string& graph_path, bool exact,
                   int k_max, long long budget_ms, const std::string& out_path) {
    Graph g = graph_from_json(load_json_file(graph_path));
    SearchOptions opt = options_from_budget(budget_ms);
    if (exact) {
        ThetaResult theta = exact_theta_small(g, k_max, opt);
        switch (theta.status) {
        case ThetaStatus::Exact:
            result.summary.push_back("theta: " + std::to_string(theta.value));
            break;
        case ThetaStatus::AboveKMax:
            result.status = CommandResult::Status::None;
            result.summary.push_back("theta: > " + std::to_string(k_max));
            break;
        case ThetaStatus::Undecided:
            result.status = CommandResult::Status::Timeout;
            result.summary.push_back("theta: undecided (budget exhausted)");
            break;
        }
        return;
    }
    Decomposition dec = decompose(g, opt);
    result.summary.push_back("parts: " + std::to_string(dec.parts.size()) +
                             " (degeneracy " +
                             std::to_string(degeneracy_order(g).degeneracy) + ")");
    if (!out_path.empty())
        write_json(result, out_path, decomposition_to_json(dec));
}

void cmd_schedule(CommandResult& result, const std::string& instance_path,
                  int horizon, bool multi_session, long long budget_ms,
                  const std::string& out_path) {
    ConferenceInstance inst = fs::path(instance_path).extension() == ".json"
                                  ? load_instance_json(instance_path)
                                  : load_instance_csv(instance_path);
    for (const auto& w : inst.warnings)
        result.summary.push_back("warning: " + w);
    SearchOptions opt = options_from_budget(budget_ms);

    Timetable tt;
    if (multi_session) {
        tt = schedule_multi_session(inst, opt);
    } else {
        std::optional<int> h;
        if (horizon > 0)
            h = horizon;
        ScheduleResult r = schedule_no_wait(inst, h, opt);
        if (r.status == ScheduleStatus::None) {
            result.status = CommandResult::Status::None;
            result.summary.push_back("no no-wait schedule" +
                                     (horizon > 0 ? " with horizon " + std::to_string(horizon)
                                                  : std::string()));
            return;
        }
        if (r.status == ScheduleStatus::Timeout) {
            result.status = CommandResult::Status::Timeout;
            result.summary.push_back("budget exhausted before a schedule was found");
            return;
        }
        tt = std::move(*r.timetable);
    }

    auto problems = check_no_wait(inst, tt);
    if (!problems.empty())
        throw ScheduleError("internal error: timetable failed validation: " +
                            problems.front());
    result.summary.push_back("scheduled " + std::to_string(tt.entries.size()) +
                             " meetings in " + std::to_string(tt.sessions()) +
                             " session(s), horizon " + std::to_string(tt.horizon()));
    if (!out_path.empty()) {
        write_text_file(out_path, timetable_to_csv(tt));
        result.artifacts.push_back(out_path);
    }
}

void cmd_demo_gaps(CommandResult& result, int k, int d, const std::string& out_dir,
                   long long budget_ms) {
    InstabilityReport report =
        demo_instability(k, d, out_dir, options_from_budget(budget_ms));
    for (const auto& path : report.artifacts)
        result.artifacts.push_back(path.string());
    result.summary.push_back("realized horizons: " +
                             format_set(report.realized_horizons));
    for (const Gap& gap : report.gaps)
        result.summary.push_back("gap: {" + std::to_string(gap.first) + ".." +
                                 std::to_string(gap.last) + "} size " +
                                 std::to_string(gap.size()));
    result.summary.push_back("report: " +
                             (fs::path(out_dir) / "report.md").string());
}

void cmd_export_dot(CommandResult& result, const std::string& graph_path,
                    const std::string& coloring_path, const std::string& out_path,
                    std::ostream& out) {
    Graph g = graph_from_json(load_json_file(graph_path));
    std::optional<EdgeColoring> c;
    if (!coloring_path.empty())
        c = coloring_from_json(load_json_file(coloring_path), g);
    std::string dot = to_dot(g, c);
    if (out_path.empty()) {
        out << dot;
    } else {
        write_text_file(out_path, dot);
        result.artifacts.push_back(out_path);
    }
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args,
                          std::ostream& out, std::ostream& err) {
    CLI::App app{"interval edge colorings: verify, solve, construct, schedule"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path, out_path, instance_path, out_dir;
    std::string out_prefix = "gadget";
    long long budget_ms = -1;
    int t_max = 0, b = 1, T = 27, k = 1, d = 24, realize = 0, horizon = 0, k_max = 4;
    bool color = false, mirror_it = false, exact = false, multi_session = false;

    auto* verify = app.add_subcommand("verify", "check a coloring for the interval property");
    verify->add_option("--graph", graph_path, "graph JSON")->required();
    verify->add_option("--coloring", coloring_path, "coloring JSON")->required();

    auto* spectrum = app.add_subcommand("spectrum", "exact interval spectrum of a small graph");
    spectrum->add_option("--graph", graph_path, "graph JSON")->required();
    spectrum->add_option("--t-max", t_max, "largest color count to try");
    spectrum->add_option("--budget", budget_ms, "wall budget in ms per color count");
    spectrum->add_option("--out", out_path, "write the report JSON here");

    auto* gadget = app.add_subcommand("gadget", "construct the pendant gadgets");
    gadget->require_subcommand(1);
    auto* gadget_f = gadget->add_subcommand("F", "single gadget F(b,T)");
    gadget_f->add_option("--b", b, "pendant edge count")->required();
    gadget_f->add_option("--T", T, "top color offset (T = D + 25)")->required();
    gadget_f->add_flag("--color", color, "emit the certified coloring");
    gadget_f->add_flag("--mirror", mirror_it, "mirror the coloring (high pendant side)");
    gadget_f->add_option("--out-prefix", out_prefix, "artifact path prefix");
    auto* gadget_bold = gadget->add_subcommand("boldF", "composite gadget with k spectrum gaps");
    gadget_bold->add_option("--k", k, "gap count")->required();
    gadget_bold->add_option("--d", d, "minimum gap size (even, >= 24)")->required();
    gadget_bold->add_option("--realize", realize, "emit a coloring with this many colors");
    gadget_bold->add_option("--out-prefix", out_prefix, "artifact path prefix");

    auto* thickness = app.add_subcommand("thickness", "interval thickness bounds");
    thickness->add_option("--graph", graph_path, "graph JSON")->required();
    thickness->add_flag("--exact", exact, "exhaustive search (small graphs only)");
    thickness->add_option("--k-max", k_max, "largest part count for --exact");
    thickness->add_option("--budget", budget_ms, "wall budget in ms per solver call");
    thickness->add_option("--out", out_path, "write the decomposition JSON here");

    auto* schedule = app.add_subcommand("schedule", "no-wait conference timetables");
    schedule->add_option("--instance", instance_path, "instance CSV or JSON")->required();
    schedule->add_option("--horizon", horizon, "demand exactly this many slots");
    schedule->add_flag("--multi-session", multi_session, "split into several no-wait sessions");
    schedule->add_option("--budget", budget_ms, "wall budget in ms per solver call");
    schedule->add_option("--out", out_path, "write the timetable CSV here");

    auto* demo = app.add_subcommand("demo-gaps", "schedule instability demonstration");
    demo->add_option("--k", k, "gap count")->required();
    demo->add_option("--d", d, "minimum gap size (even, >= 24)")->required();
    demo->add_option("--out", out_dir, "output directory")->required();
    demo->add_option("--budget", budget_ms, "wall budget in ms for the gap probes");

    auto* export_dot = app.add_subcommand("export-dot", "graphviz export");
    export_dot->add_option("--graph", graph_path, "graph JSON")->required();
    export_dot->add_option("--coloring", coloring_path, "coloring JSON (edge labels)");
    export_dot->add_option("--out", out_path, "write the DOT file here (default stdout)");

    CommandResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        result.status = CommandResult::Status::Error;
        std::ostringstream msg;
        app.exit(e, out, msg);
        if (!msg.str().empty()) {
            result.summary.push_back(msg.str());
            err << msg.str();
        }
        return result;
    }

    try {
        if (*verify)
            cmd_verify(result, graph_path, coloring_path);
        else if (*spectrum)
            cmd_spectrum(result, graph_path, t_max, budget_ms, out_path);
        else if (*gadget_f)
            cmd_gadget_F(result, b, T, color, mirror_it, out_prefix);
        else if (*gadget_bold)
            cmd_gadget_boldF(result, k, d, realize, out_prefix);
        else if (*thickness)
            cmd_thickness(result, graph_path, exact, k_max, budget_ms, out_path);
        else if (*schedule)
            cmd_schedule(result, instance_path, horizon, multi_session, budget_ms, out_path);
        else if (*demo)
            cmd_demo_gaps(result, k, d, out_dir, budget_ms);
        else if (*export_dot)
            cmd_export_dot(result, graph_path, coloring_path, out_path, out);
    } catch (const Error& e) {
        result.status = CommandResult::Status::Error;
        result.summary.push_back(std::string("error: ") + e.what());
        err << "error: " << e.what() << "\n";
        return result;
    }

    for (const auto& line : result.summary)
        out << line << "\n";
    for (const auto& artifact : result.artifacts)
        out << "wrote " << artifact << "\n";
    return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandResult result = run_command(args, out, err);
    switch (result.status) {
    case CommandResult::Status::Ok:
    case CommandResult::Status::None:
        return 0;
    case CommandResult::Status::Timeout:
        return 3;
    case CommandResult::Status::Error:
        return 2;
    }
    return 2;
}

} // namespace icolor
