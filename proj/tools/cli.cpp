#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "borsuk/caps.hpp"
#include "borsuk/certificate.hpp"
#include "borsuk/coloring.hpp"
#include "borsuk/delta_net.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/experiment.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/io.hpp"
#include "borsuk/poisson.hpp"
#include "borsuk/simplex.hpp"

namespace borsuk::cli {
namespace {

using nlohmann::json;

// Thrown for errors in user-supplied arguments or files (exit code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int dim = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> n_list;
    std::vector<double> C_list;
    double eps = 0.0;
    double C = 0.0;
    double r = 0.0;
    double delta = 0.0;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    unsigned jobs = 1;
    double time_limit = 10.0;
    std::size_t candidates = 0;
    std::string out, format = "csv", svg, points, edges, coloring;
    std::string method = "simplex", kind = "lsb", order = "index";
    std::string lambda_variant = "dminus1", certificate_rule = "net";
    bool poissonized = false;
    bool timing = false;
};

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    for (int row = 1; std::getline(in, line); ++row) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(row) + ": expected key=value");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        kv[key] = value;
    }
    return kv;
}

// Splices `--key value` pairs from a config file in front of the command-line
// flags of the subcommand; keys already given on the command line are skipped
// so explicit flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (!path) return args;
    std::size_t sub = 1;
    while (sub < args.size() && args[sub].rfind("-", 0) == 0) ++sub;
    if (sub >= args.size()) return args;
    std::vector<std::string> injected;
    for (const auto& [key, value] : read_config_file(*path)) {
        const std::string flag = "--" + key;
        bool given = false;
        for (std::size_t i = sub + 1; i < args.size(); ++i)
            if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) given = true;
        if (given) continue;
        if (value == "true") {
            injected.push_back(flag);
        } else if (value != "false") {
            injected.push_back(flag);
            std::istringstream words(value);
            for (std::string w; words >> w;) injected.push_back(w);
        }
    }
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub) + 1, injected.begin(), injected.end());
    return args;
}

LambdaVariant parse_variant(const std::string& s) {
    return s == "d" ? LambdaVariant::d : LambdaVariant::d_minus_1;
}

CoverRule parse_rule(const std::string& s) { return s == "arc-gap" ? CoverRule::arc_gap : CoverRule::net; }

PointSet load_points(const std::string& path) {
    if (path.empty()) throw UsageError("--points is required");
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return io::read_points(in);
    } catch (const std::runtime_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return io::read_coloring(in);
    } catch (const std::runtime_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// Edge list when --edges is given, otherwise the Borsuk graph of --points at --eps.
Graph load_graph(const Options& o) {
    if (!o.edges.empty()) {
        std::ifstream in(o.edges);
        if (!in) throw UsageError("cannot open " + o.edges);
        try {
            return io::read_edges(in);
        } catch (const std::runtime_error& e) {
            throw UsageError(o.edges + ": " + e.what());
        }
    }
    if (o.eps <= 0.0) throw UsageError("--eps is required with --points");
    return build_graph(load_points(o.points), o.eps).graph;
}

class Output {
public:
    Output(const Options& o, std::ostream& fallback) : fallback_(fallback) {
        if (!o.out.empty()) {
            file_.open(o.out);
            if (!file_) throw std::runtime_error("cannot write " + o.out);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

json resolved_config(const CLI::App& sub) {
    json cfg = json::object();
    for (const CLI::Option* opt : sub.get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help" || name == "help-all") continue;
        if (opt->count() > 0) {
            const auto& res = opt->results();
            cfg[name] = res.size() == 1 ? json(res.front()) : json(res);
        } else {
            cfg[name] = opt->get_default_str();
        }
    }
    return cfg;
}

// Metadata (resolved config, wall clock) lives beside the primary output so
// that the primary file is byte-identical across identical invocations.
void write_metadata(const Options& o, const CLI::App& sub, std::ostream& err, json extra) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    json meta{{"subcommand", sub.get_name()}, {"config", resolved_config(sub)}, {"timestamp", stamp}};
    if (!extra.is_null()) meta["info"] = std::move(extra);
    if (!o.out.empty()) {
        std::ofstream side(o.out + ".meta.json");
        side << meta.dump(2) << '\n';
    } else {
        err << "# meta " << meta.dump() << '\n';
    }
}

void require_positive_dim(const Options& o) {
    if (o.dim < 1) throw UsageError("--dim must be >= 1");
}

}  // namespace

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Random Borsuk graphs: sampling, colorings, certificates and threshold experiments", "borsuk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    app.add_option("--config", "flat key=value file whose keys mirror the flags; flags override it");

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    };
    auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "output file (default: stdout)"); };
    auto add_variant = [&](CLI::App* s) {
        s->add_option("--lambda-variant", o.lambda_variant, "simplex diameter in the cap radius")
            ->check(CLI::IsMember({"dminus1", "d"}))
            ->capture_default_str();
    };
    auto add_rule = [&](CLI::App* s) {
        s->add_option("--certificate-rule", o.certificate_rule, "lower-bound covering rule")
            ->check(CLI::IsMember({"net", "arc-gap"}))
            ->capture_default_str();
    };
    auto add_graph_input = [&](CLI::App* s) {
        s->add_option("--points", o.points, "point CSV");
        s->add_option("--eps", o.eps, "adjacency parameter eps")->check(CLI::PositiveNumber);
        s->add_option("--edges", o.edges, "edge-list CSV (instead of --points/--eps)");
    };

    auto* sample = app.add_subcommand("sample", "sample uniform points on S^d");
    sample->add_option("--dim", o.dim, "sphere dimension d")->required();
    sample->add_option("--n", o.n, "number of points")->required()->check(CLI::NonNegativeNumber);
    sample->add_option("--seed", o.seed, "64-bit seed")->required();
    add_out(sample);
    add_format(sample);

    auto* graph = app.add_subcommand("graph", "build the Borsuk graph of a point file");
    graph->add_option("--points", o.points, "point CSV")->required();
    graph->add_option("--eps", o.eps, "adjacency parameter eps")->required()->check(CLI::PositiveNumber);
    graph->add_option("--seed", o.seed, "seed that produced the points (metadata only)");
    add_out(graph);
    add_format(graph);

    auto* color = app.add_subcommand("color", "color a Borsuk graph");
    color->add_option("--points", o.points, "point CSV")->required();
    color->add_option("--eps", o.eps, "adjacency parameter eps")->required()->check(CLI::PositiveNumber);
    color->add_option("--method", o.method, "coloring method")
        ->check(CLI::IsMember({"simplex", "cap-removal", "greedy"}))
        ->capture_default_str();
    color->add_option("--order", o.order, "greedy visiting order")
        ->check(CLI::IsMember({"index", "degree"}))
        ->capture_default_str();
    add_variant(color);
    add_out(color);
    add_format(color);

    auto* verify = app.add_subcommand("verify", "check that a coloring is proper (exit 2 if not)");
    add_graph_input(verify);
    verify->add_option("--coloring", o.coloring, "coloring CSV")->required();

    auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number by branch and bound");
    add_graph_input(chromatic);
    chromatic->add_option("--time-limit", o.time_limit, "seconds")->check(CLI::PositiveNumber)->capture_default_str();
    add_format(chromatic);

    auto* certificate = app.add_subcommand("certificate", "lower-bound (lsb) or empty-cap certificate, JSON");
    certificate->add_option("--points", o.points, "point CSV")->required();
    certificate->add_option("--eps", o.eps, "adjacency parameter eps")->required()->check(CLI::PositiveNumber);
    certificate->add_option("--kind", o.kind, "certificate kind")
        ->check(CLI::IsMember({"lsb", "empty-cap"}))
        ->capture_default_str();
    add_variant(certificate);
    add_rule(certificate);
    add_out(certificate);

    auto* girth = app.add_subcommand("odd-girth", "shortest odd cycle length ('none' if bipartite)");
    add_graph_input(girth);
    add_format(girth);

    auto* net = app.add_subcommand("net", "greedy delta-net on S^d");
    net->add_option("--dim", o.dim, "sphere dimension d")->required();
    net->add_option("--delta", o.delta, "separation delta")->required()->check(CLI::PositiveNumber);
    net->add_option("--candidates", o.candidates, "candidate count (0: default)");
    net->add_option("--seed", o.seed, "64-bit seed")->required();
    add_out(net);
    add_format(net);

    auto* cap_area = app.add_subcommand("cap-area", "cap area fraction and the published bounds");
    cap_area->add_option("--dim", o.dim, "sphere dimension d")->required();
    cap_area->add_option("--r", o.r, "chordal radius")->required()->check(CLI::PositiveNumber);
    add_format(cap_area);

    auto* trial = app.add_subcommand("trial", "one Monte Carlo trial");
    trial->add_option("--dim", o.dim, "sphere dimension d")->required();
    trial->add_option("--n", o.n, "number of points")->required()->check(CLI::PositiveNumber);
    auto* trial_eps_opt = trial->add_option("--eps", o.eps, "fixed eps")->check(CLI::PositiveNumber);
    auto* trial_c_opt = trial->add_option("--C", o.C, "schedule constant: eps = C (ln n/n)^{2/d}")->check(CLI::PositiveNumber);
    trial_eps_opt->excludes(trial_c_opt);
    trial->add_option("--seed", o.seed, "64-bit seed")->required();
    trial->add_flag("--poissonized", o.poissonized, "draw Pois(2n) points");
    trial->add_flag("--timing", o.timing, "include wall time in the primary output");
    add_variant(trial);
    add_rule(trial);
    add_out(trial);
    add_format(trial);

    auto* sweep = app.add_subcommand("sweep", "(n, C) grid of trials, CSV");
    sweep->add_option("--dim", o.dim, "sphere dimension d")->required();
    sweep->add_option("--n", o.n_list, "list of n")->required()->expected(1, -1);
    sweep->add_option("--C", o.C_list, "list of schedule constants")->required()->expected(1, -1);
    sweep->add_option("--trials", o.trials, "trials per cell")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--seed", o.seed, "master seed")->required();
    sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--svg", o.svg, "also render success fraction vs C");
    sweep->add_flag("--poissonized", o.poissonized, "draw Pois(2n) points");
    sweep->add_flag("--timing", o.timing, "fill mean_wall_ms");
    add_variant(sweep);
    add_rule(sweep);
    add_out(sweep);

    auto* tail = app.add_subcommand("poisson-tail", "P(Pois(2n) < n) against exp(-0.306 n) for 0..n");
    tail->add_option("--n", o.n, "largest n")->required()->check(CLI::NonNegativeNumber);
    add_format(tail);

    std::vector<std::string> args;
    try {
        args = expand_config(raw_args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (sample->parsed()) {
            require_positive_dim(o);
            const PointSet pts = sample_uniform(o.dim, o.n, o.seed);
            Output dst(o, out);
            if (o.format == "json") {
                json rows = json::array();
                for (std::size_t i = 0; i < pts.size(); ++i)
                    rows.push_back(std::vector<double>(pts[i].begin(), pts[i].end()));
                dst.stream() << json{{"dim", o.dim}, {"seed", o.seed}, {"points", rows}}.dump() << '\n';
            } else {
                io::write_points(dst.stream(), pts);
            }
            write_metadata(o, *sample, err, nullptr);
        } else if (graph->parsed()) {
            const BorsukGraph g = build_graph(load_points(o.points), o.eps);
            json meta = io::graph_metadata(g, o.seed);
            if (graph->count("--seed") == 0) meta["seed"] = nullptr;
            Output dst(o, out);
            if (o.format == "json") {
                json edges = json::array();
                for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
                meta["edges"] = edges;
                dst.stream() << meta.dump() << '\n';
            } else {
                io::write_edges(dst.stream(), g.graph);
            }
            write_metadata(o, *graph, err, meta.contains("edges") ? io::graph_metadata(g, o.seed) : meta);
        } else if (color->parsed()) {
            const BorsukGraph g = build_graph(load_points(o.points), o.eps);
            Coloring c;
            json info = nullptr;
            if (o.method == "simplex") {
                c = simplex_coloring(g);
            } else if (o.method == "greedy") {
                c = greedy_coloring(g.graph, o.order == "degree" ? GreedyOrder::by_degree : GreedyOrder::by_index);
            } else {
                const auto variant = parse_variant(o.lambda_variant);
                const Certificate cert = empty_cap_certificate(g.points, o.eps, variant);
                if (!cert.witness) {
                    err << "error: no vertex-free cap of radius " << cert.cap_radius << " on the net\n";
                    return 2;
                }
                c = cap_removal_coloring(g.points, o.eps, *cert.witness,
                                         {variant, variant == LambdaVariant::d_minus_1});
                info = io::certificate_json(cert);
            }
            const bool proper = verify_coloring(g, c);
            Output dst(o, out);
            if (o.format == "json")
                dst.stream() << json{{"num_colors", c.num_colors}, {"proper", proper}, {"colors", c.colors}}.dump() << '\n';
            else
                io::write_coloring(dst.stream(), c);
            if (info.is_null()) info = json::object();
            info["num_colors"] = c.num_colors;
            info["proper"] = proper;
            write_metadata(o, *color, err, info);
        } else if (verify->parsed()) {
            const Graph g = load_graph(o);
            const Coloring c = load_coloring(o.coloring);
            if (!verify_coloring(g, c)) {
                out << "improper\n";
                return 2;
            }
            out << "proper " << c.num_colors << '\n';
        } else if (chromatic->parsed()) {
            const Graph g = load_graph(o);
            const auto limit = std::chrono::milliseconds(static_cast<std::int64_t>(o.time_limit * 1000.0));
            const ChromaticResult r = exact_chromatic(g, limit);
            const bool exact = r.status == SolveStatus::exact;
            if (o.format == "json") {
                out << json{{"status", exact ? "exact" : "timeout"},
                            {"chromatic_number", exact ? json(r.value) : json(nullptr)},
                            {"lower_bound", r.lower_bound},
                            {"upper_bound", r.upper_bound}}
                           .dump()
                    << '\n';
            } else if (exact) {
                out << r.value << '\n';
            } else {
                out << "timeout " << r.lower_bound << ' ' << r.upper_bound << '\n';
            }
        } else if (certificate->parsed()) {
            const PointSet pts = load_points(o.points);
            const Certificate c = o.kind == "lsb" ? lsb_certificate(pts, o.eps, parse_rule(o.certificate_rule))
                                                  : empty_cap_certificate(pts, o.eps, parse_variant(o.lambda_variant));
            Output dst(o, out);
            dst.stream() << io::certificate_json(c).dump(2) << '\n';
            write_metadata(o, *certificate, err, nullptr);
        } else if (girth->parsed()) {
            const auto g = odd_girth(load_graph(o));
            if (o.format == "json")
                out << json{{"odd_girth", g ? json(*g) : json(nullptr)}, {"bipartite", !g.has_value()}}.dump() << '\n';
            else
                out << (g ? std::to_string(*g) : std::string("none")) << '\n';
        } else if (net->parsed()) {
            require_positive_dim(o);
            const DeltaNet dn = build_delta_net(o.dim, o.delta, o.candidates, o.seed);
            json info{{"dim", dn.dim},
                      {"delta", dn.delta},
                      {"size", dn.size()},
                      {"candidate_count", dn.candidate_count},
                      {"candidate_cover_radius", dn.candidate_cover_radius}};
            if (o.delta < 1.0) {
                const auto b = net_size_bounds(o.dim, o.delta);
                info["size_lower_bound"] = b.lower;
                info["size_upper_bound"] = b.upper;
            }
            Output dst(o, out);
            if (o.format == "json")
                dst.stream() << info.dump(2) << '\n';
            else
                io::write_points(dst.stream(), dn.centers);
            write_metadata(o, *net, err, info);
        } else if (cap_area->parsed()) {
            require_positive_dim(o);
            const double exact = cap_area_fraction(o.dim, o.r);
            json j{{"dim", o.dim}, {"r", o.r}, {"fraction", exact}};
            if (o.r < 1.0) {
                const auto b = cap_area_paper_bounds(o.dim, o.r);
                j["published_lower"] = b.lower;
                j["published_upper"] = b.upper;
                j["corrected_lower"] = corrected_cap_area_lower_bound(o.dim, o.r);
            }
            if (o.format == "json") {
                out << j.dump() << '\n';
            } else {
                out << "d,r,fraction,published_lower,published_upper,corrected_lower\n"
                    << o.dim << ',' << io::format_real(o.r) << ',' << io::format_real(exact);
                for (const char* key : {"published_lower", "published_upper", "corrected_lower"})
                    out << ',' << (j.contains(key) ? io::format_real(j[key].get<double>()) : "");
                out << '\n';
            }
        } else if (trial->parsed()) {
            require_positive_dim(o);
            if (trial->count("--eps") == 0 && trial->count("--C") == 0) throw UsageError("one of --eps or --C is required");
            TrialConfig cfg;
            cfg.dim = o.dim;
            cfg.n = o.n;
            cfg.mode = trial->count("--C") ? EpsMode::schedule : EpsMode::fixed_eps;
            cfg.C = o.C;
            cfg.eps_fixed = o.eps;
            cfg.seed = o.seed;
            cfg.poissonized = o.poissonized;
            cfg.lambda_variant = parse_variant(o.lambda_variant);
            cfg.certificate_rule = parse_rule(o.certificate_rule);
            const TrialResult r = run_trial(cfg);
            const json j = io::trial_json(r, o.timing);
            Output dst(o, out);
            if (o.format == "json") {
                dst.stream() << j.dump(2) << '\n';
            } else {
                std::string header, row;
                bool first = true;
                for (const auto& [k, v] : j.items()) {
                    if (k == "config") continue;
                    if (!first) header += ',', row += ',';
                    first = false;
                    header += k;
                    if (!v.is_null()) row += v.is_number_float() ? io::format_real(v.get<double>()) : v.dump();
                }
                dst.stream() << header << '\n' << row << '\n';
            }
            write_metadata(o, *trial, err, json{{"wall_ms", r.wall_ms}});
        } else if (sweep->parsed()) {
            require_positive_dim(o);
            SweepSpec spec;
            spec.dim = o.dim;
            spec.n_list = o.n_list;
            spec.C_list = o.C_list;
            spec.trials_per_cell = o.trials;
            spec.seed = o.seed;
            spec.jobs = o.jobs;
            spec.base.poissonized = o.poissonized;
            spec.base.lambda_variant = parse_variant(o.lambda_variant);
            spec.base.certificate_rule = parse_rule(o.certificate_rule);
            const auto cells = run_sweep(spec);
            Output dst(o, out);
            io::write_sweep(dst.stream(), cells, o.timing);
            if (!o.svg.empty()) {
                std::ofstream svg(o.svg);
                if (!svg) throw std::runtime_error("cannot write " + o.svg);
                io::write_sweep_svg(svg, cells);
            }
            json walls = json::array();
            for (const auto& c : cells) walls.push_back({{"n", c.n}, {"C", c.C}, {"mean_wall_ms", c.mean_wall_ms}});
            write_metadata(o, *sweep, err, json{{"wall", walls}});
        } else if (tail->parsed()) {
            if (o.format == "json") {
                json rows = json::array();
                for (std::int64_t k = 0; k <= o.n; ++k) {
                    const auto t = poisson_tail_check(k);
                    rows.push_back({{"n", k}, {"exact", t.exact}, {"bound", t.bound}, {"holds", t.exact <= t.bound}});
                }
                out << rows.dump() << '\n';
            } else {
                out << "n,exact,bound,holds\n";
                for (std::int64_t k = 0; k <= o.n; ++k) {
                    const auto t = poisson_tail_check(k);
                    out << k << ',' << io::format_real(t.exact) << ',' << io::format_real(t.bound) << ','
                        << (t.exact <= t.bound ? "true" : "false") << '\n';
                }
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionViolation& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "runtime failure: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace borsuk::cli
