#include "eafkit/cli.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <string_view>

#include <CLI11.hpp>

#include "eafkit/attainment.hpp"
#include "eafkit/dataio.hpp"
#include "eafkit/errors.hpp"
#include "eafkit/hypervolume.hpp"
#include "eafkit/number_format.hpp"
#include "eafkit/render.hpp"
#include "eafkit/synth.hpp"

namespace eafkit {

namespace {

std::vector<std::string> split_list(const std::string& text, const char* flag) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty()) throw ValidationError(std::string("empty entry in ") + flag);
        items.push_back(std::move(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return items;
}

long long to_integer(const std::string& text, const char* flag) {
    long long value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
        throw ValidationError(std::string(flag) + ": '" + text + "' is not an integer");
    }
    return value;
}

double to_real(const std::string& text, const char* flag) {
    double v = 0.0;
    try {
        v = parse_double(text);
    } catch (const Error&) {
        v = std::nan("");
    }
    if (!std::isfinite(v)) throw ValidationError(std::string(flag) + ": '" + text + "' is not a finite number");
    return v;
}

std::set<std::size_t> parse_indices(const std::string& text, const char* flag) {
    std::set<std::size_t> out;
    if (text.empty()) return out;
    for (const auto& item : split_list(text, flag)) {
        const long long v = to_integer(item, flag);
        if (v < 0 || v > 1) throw ValidationError(std::string(flag) + ": objective index must be 0 or 1");
        out.insert(static_cast<std::size_t>(v));
    }
    return out;
}

FileFormat resolve_format(const std::string& explicit_format, const std::string& path) {
    return explicit_format.empty() ? format_from_path(path) : parse_format(explicit_format);
}

/// Plot options shared by the plotting subcommands.
struct PlotFlags {
    std::string colors;
    std::string labels;
    std::string linestyles;
    std::string markers;
    std::optional<double> x_min, x_max, y_min, y_max;
    bool log_x = false;
    bool log_y = false;
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 640;
    int height = 480;

    void attach(CLI::App* app, bool labels_required) {
        auto* c = app->add_option("--colors", colors, "Comma-separated colors, one per series");
        auto* l = app->add_option("--labels", labels, "Comma-separated labels, one per series");
        if (labels_required) {
            c->required();
            l->required();
        }
        app->add_option("--linestyles", linestyles, "Comma-separated: solid, dashed, dotted");
        app->add_option("--markers", markers, "Comma-separated: none, circle, square");
        app->add_option("--x-min", x_min, "Lower bound of the first objective");
        app->add_option("--x-max", x_max, "Upper bound of the first objective");
        app->add_option("--y-min", y_min, "Lower bound of the second objective");
        app->add_option("--y-max", y_max, "Upper bound of the second objective");
        app->add_flag("--log-x", log_x, "Log-scaled horizontal axis");
        app->add_flag("--log-y", log_y, "Log-scaled vertical axis");
        app->add_option("--title", title, "Figure title");
        app->add_option("--x-label", x_label, "Horizontal axis label");
        app->add_option("--y-label", y_label, "Vertical axis label");
        app->add_option("--width", width, "Figure width in pixels");
        app->add_option("--height", height, "Figure height in pixels");
    }

    PlotSpec build() const {
        if (colors.empty() || labels.empty()) throw ValidationError("plots need --colors and --labels");
        const auto color_list = split_list(colors, "--colors");
        const auto label_list = split_list(labels, "--labels");
        if (color_list.size() != label_list.size()) {
            throw ValidationError("--colors has " + std::to_string(color_list.size()) + " entries, --labels has " +
                                  std::to_string(label_list.size()));
        }
        const auto style_list = linestyles.empty() ? std::vector<std::string>{} : split_list(linestyles, "--linestyles");
        const auto marker_list = markers.empty() ? std::vector<std::string>{} : split_list(markers, "--markers");
        if (!style_list.empty() && style_list.size() != color_list.size()) {
            throw ValidationError("--linestyles needs one entry per series");
        }
        if (!marker_list.empty() && marker_list.size() != color_list.size()) {
            throw ValidationError("--markers needs one entry per series");
        }
        PlotSpec spec;
        for (std::size_t i = 0; i < color_list.size(); ++i) {
            SeriesStyle style{color_list[i], label_list[i]};
            if (!style_list.empty()) style.line_style = parse_line_style(style_list[i]);
            if (!marker_list.empty()) style.marker = parse_marker(marker_list[i]);
            spec.series.push_back(std::move(style));
        }
        spec.x = {x_min, x_max, log_x, x_label};
        spec.y = {y_min, y_max, log_y, y_label};
        spec.title = title;
        spec.width = width;
        spec.height = height;
        return spec;
    }
};

void report_warnings(const WarningLog& log, std::ostream& err) {
    for (const auto& message : log.messages) err << "warning: " << message << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Empirical attainment surfaces and hypervolume traces for multi-objective runs", "eafkit"};
    app.require_subcommand(1);

    // eaf compute
    auto* eaf = app.add_subcommand("eaf", "Empirical attainment surfaces");
    eaf->require_subcommand(1);
    auto* compute = eaf->add_subcommand("compute", "Compute attainment surfaces from a runs file");
    std::string runs_path, levels_text, maximize_text, log_text, out_path, out_format, in_format;
    compute->add_option("--runs", runs_path, "Runs file (.json or .csv)")->required();
    compute->add_option("--levels", levels_text, "Comma-separated attainment levels, e.g. 12,25,37")->required();
    compute->add_option("--maximize", maximize_text, "Comma-separated objective indices to maximize (0-based)");
    compute->add_option("--log", log_text, "Comma-separated objective indices shown on a log scale");
    compute->add_option("--out", out_path, "Output surfaces file")->required();
    compute->add_option("--format", out_format, "Output format: json or csv (default: from extension)");
    compute->add_option("--runs-format", in_format, "Runs format: json or csv (default: from extension)");

    // eaf plot
    auto* plot = eaf->add_subcommand("plot", "Render surfaces to SVG");
    std::string surfaces_path, surfaces_format, svg_path;
    bool band = false;
    PlotFlags plot_flags;
    plot->add_option("--surfaces", surfaces_path, "Surfaces file written by 'eaf compute'")->required();
    plot->add_option("--surfaces-format", surfaces_format, "json or csv (default: from extension)");
    plot->add_option("--out", svg_path, "Output SVG path")->required();
    plot->add_flag("--band", band, "Draw surfaces 1 and 3 as a band around surface 2 (needs K = 3)");
    plot_flags.attach(plot, true);

    // hv
    auto* hv = app.add_subcommand("hv", "Hypervolume over evaluations");
    std::vector<std::string> hv_runs, hv_outs;
    std::string ref_text, true_pf_path, hv_maximize, hv_format, hv_in_format, hv_plot_path, band_stat = "stderr";
    bool normalize = false;
    PlotFlags hv_plot_flags;
    hv->add_option("--runs", hv_runs, "Runs file(s); several files give several curves in one plot")
        ->required()
        ->delimiter(',');
    hv->add_option("--ref", ref_text, "Reference point, e.g. 75,1029")->required();
    hv->add_flag("--normalize", normalize, "Normalize with the true Pareto front (needs --true-pf)");
    hv->add_option("--true-pf", true_pf_path, "Known Pareto front (.json or .csv points file)");
    hv->add_option("--maximize", hv_maximize, "Comma-separated objective indices to maximize (0-based)");
    hv->add_option("--out", hv_outs, "Trace output file(s), one per runs file")->delimiter(',');
    hv->add_option("--format", hv_format, "Trace output format: json or csv (default: from extension)");
    hv->add_option("--runs-format", hv_in_format, "Runs format: json or csv (default: from extension)");
    hv->add_option("--plot", hv_plot_path, "Also render the traces to this SVG");
    hv->add_option("--band-stat", band_stat, "Band half-width: stderr (default) or stddev");
    hv_plot_flags.attach(hv, false);

    // synth
    auto* synth = app.add_subcommand("synth", "Generate demo runs of random search on a convex bi-objective function");
    long long seed = 0, n_runs = 50, n_samples = 20, dim = 3;
    std::string synth_out, synth_format;
    synth->add_option("--seed", seed, "Generator seed");
    synth->add_option("--runs", n_runs, "Number of independent runs S");
    synth->add_option("--samples", n_samples, "Evaluations per run N");
    synth->add_option("--dim", dim, "Search-space dimension");
    synth->add_option("--out", synth_out, "Output runs file")->required();
    synth->add_option("--format", synth_format, "json or csv (default: from extension)");

    std::vector<char*> argv;
    std::vector<std::string> storage(args.begin(), args.end());
    if (storage.empty()) storage.emplace_back("eafkit");
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(ErrorKind::Validation);
    }

    try {
        if (*compute) {
            // Flags are validated before any file is touched.
            std::vector<int> levels;
            for (const auto& item : split_list(levels_text, "--levels")) {
                levels.push_back(static_cast<int>(to_integer(item, "--levels")));
            }
            const LevelSpec level_spec(levels);
            TransformSpec transform{parse_indices(maximize_text, "--maximize"), parse_indices(log_text, "--log")};
            const FileFormat output_format = resolve_format(out_format, out_path);
            const FileFormat runs_format = resolve_format(in_format, runs_path);

            const RunArchive archive = read_runs(runs_path, runs_format);
            const SurfaceStack stack = empirical_attainment_surfaces(archive.costs, level_spec, transform);
            write_surfaces(stack, out_path, output_format);
            out << "wrote " << stack.size() << " surface(s) over " << stack.grid.size() << " grid values to "
                << out_path << "\n";
        } else if (*plot) {
            const PlotSpec spec = plot_flags.build();
            const FileFormat format = resolve_format(surfaces_format, surfaces_path);
            if (band && spec.series.size() != 1) throw ValidationError("--band takes exactly one color and label");
            const SurfaceStack stack = read_surfaces(surfaces_path, format);
            if (band) {
                plot_surface_with_band(stack, spec, svg_path);
            } else {
                plot_multiple_surfaces(stack, spec, svg_path);
            }
            out << "wrote " << svg_path << "\n";
        } else if (*hv) {
            const auto ref_items = split_list(ref_text, "--ref");
            if (ref_items.size() != 2) throw ValidationError("--ref needs two comma-separated values");
            HvConfig config;
            config.ref_point = ObjectivePoint{to_real(ref_items[0], "--ref"), to_real(ref_items[1], "--ref")};
            config.transform.maximize_indices = parse_indices(hv_maximize, "--maximize");
            if (band_stat == "stderr") {
                config.band_statistic = BandStatistic::StandardError;
            } else if (band_stat == "stddev") {
                config.band_statistic = BandStatistic::StandardDeviation;
            } else {
                throw ValidationError("--band-stat must be stderr or stddev");
            }
            if (normalize && true_pf_path.empty()) {
                throw ConfigurationError("--normalize requires --true-pf");
            }
            if (hv_outs.empty() && hv_plot_path.empty()) throw ValidationError("hv needs --out and/or --plot");
            if (!hv_outs.empty() && hv_outs.size() != hv_runs.size()) {
                throw ValidationError("--out needs one path per --runs file");
            }
            std::optional<PlotSpec> spec;
            if (!hv_plot_path.empty()) {
                spec = hv_plot_flags.build();
                if (spec->series.size() != hv_runs.size()) {
                    throw ValidationError("--colors/--labels need one entry per --runs file");
                }
            }
            std::vector<FileFormat> runs_formats;
            for (const auto& p : hv_runs) runs_formats.push_back(resolve_format(hv_in_format, p));
            std::vector<FileFormat> out_formats;
            for (const auto& p : hv_outs) out_formats.push_back(resolve_format(hv_format, p));

            if (!true_pf_path.empty()) {
                config.true_pareto_front = read_points(true_pf_path, format_from_path(true_pf_path));
            }
            std::vector<HvTraceSet> all_traces;
            for (std::size_t i = 0; i < hv_runs.size(); ++i) {
                const RunArchive archive = read_runs(hv_runs[i], runs_formats[i]);
                WarningLog warnings;
                all_traces.push_back(hv_over_time(archive.costs, config, normalize, &warnings));
                report_warnings(warnings, err);
                if (!hv_outs.empty()) {
                    write_hv_traces(all_traces.back(), hv_outs[i], out_formats[i]);
                    out << "wrote " << hv_outs[i] << "\n";
                }
            }
            if (spec) {
                if (spec->y.label.empty()) spec->y.label = normalize ? "Normalized hypervolume" : "Hypervolume";
                if (spec->x.label.empty()) spec->x.label = "Number of evaluations";
                plot_hv_with_band(all_traces, *spec, hv_plot_path);
                out << "wrote " << hv_plot_path << "\n";
            }
        } else if (*synth) {
            if (n_runs <= 0 || n_samples <= 0 || dim <= 0) {
                throw ValidationError("--runs, --samples and --dim must be positive");
            }
            const FileFormat format = resolve_format(synth_format, synth_out);
            const RunArchive archive = synthesize_runs(static_cast<std::uint64_t>(seed), static_cast<std::size_t>(n_runs),
                                                       static_cast<std::size_t>(n_samples), static_cast<std::size_t>(dim));
            write_runs(archive, synth_out, format);
            out << "wrote " << synth_out << " with shape [" << n_runs << "," << n_samples << ",2]\n";
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(ErrorKind::Validation);
    }
    return 0;
}

}  // namespace eafkit
