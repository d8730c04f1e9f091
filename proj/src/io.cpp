#include "borsuk/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace borsuk::io {
namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cell.erase(0, cell.find_first_not_of(" \t\r"));
        cell.erase(cell.find_last_not_of(" \t\r") + 1);
        out.push_back(cell);
    }
    return out;
}

bool next_row(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
}

double parse_real(const std::string& s, std::size_t row) {
    try {
        std::size_t used = 0;
        const double x = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("row " + std::to_string(row) + ": not a number: '" + s + "'");
    }
}

long long parse_index(const std::string& s, std::size_t row) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(s, &used);
        if (used != s.size() || x < 0) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("row " + std::to_string(row) + ": not a vertex index: '" + s + "'");
    }
}

void expect_header(std::istream& in, const std::vector<std::string>& want, const char* what) {
    std::string line;
    if (!next_row(in, line) || split_row(line) != want)
        throw std::runtime_error(std::string("missing or malformed ") + what + " header");
}

const char* kind_name(CertificateKind k) {
    return k == CertificateKind::lower_bound_lsb ? "lower_bound_lsb" : "upper_bound_empty_cap";
}

nlohmann::json real_vector(std::span<const double> v) { return nlohmann::json(std::vector<double>(v.begin(), v.end())); }

}  // namespace

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_points(std::ostream& out, const PointSet& points) {
    for (std::size_t a = 0; a < points.ambient(); ++a) out << (a ? ",x" : "x") << a;
    out << '\n';
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points[i];
        for (std::size_t a = 0; a < p.size(); ++a) out << (a ? "," : "") << format_real(p[a]);
        out << '\n';
    }
}

PointSet read_points(std::istream& in) {
    std::string line;
    if (!next_row(in, line)) throw std::runtime_error("empty point file");
    const auto header = split_row(line);
    if (header.size() < 2) throw std::runtime_error("point file needs at least columns x0,x1");
    for (std::size_t a = 0; a < header.size(); ++a)
        if (header[a] != "x" + std::to_string(a)) throw std::runtime_error("malformed point header '" + line + "'");
    const int d = static_cast<int>(header.size()) - 1;
    PointSet points(d);
    std::vector<double> row(header.size());
    for (std::size_t r = 1; next_row(in, line); ++r) {
        const auto cells = split_row(line);
        if (cells.size() != header.size()) throw std::runtime_error("row " + std::to_string(r) + ": wrong column count");
        for (std::size_t a = 0; a < cells.size(); ++a) row[a] = parse_real(cells[a], r);
        points.push_back(row);
    }
    return points;
}

void write_edges(std::ostream& out, const Graph& g) {
    out << "u,v\n";
    for (auto [u, v] : g.edges()) out << u << ',' << v << '\n';
}

Graph read_edges(std::istream& in, std::size_t vertex_count) {
    expect_header(in, {"u", "v"}, "edge list");
    std::vector<Edge> edges;
    std::string line;
    for (std::size_t r = 1; next_row(in, line); ++r) {
        const auto cells = split_row(line);
        if (cells.size() != 2) throw std::runtime_error("row " + std::to_string(r) + ": expected u,v");
        const auto u = parse_index(cells[0], r), v = parse_index(cells[1], r);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        vertex_count = std::max<std::size_t>(vertex_count, static_cast<std::size_t>(std::max(u, v)) + 1);
    }
    return Graph::from_edges(vertex_count, edges);
}

void write_coloring(std::ostream& out, const Coloring& c) {
    out << "vertex,color\n";
    for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ',' << c.colors[v] << '\n';
}

Coloring read_coloring(std::istream& in) {
    expect_header(in, {"vertex", "color"}, "coloring");
    std::map<long long, long long> entries;
    std::string line;
    for (std::size_t r = 1; next_row(in, line); ++r) {
        const auto cells = split_row(line);
        if (cells.size() != 2) throw std::runtime_error("row " + std::to_string(r) + ": expected vertex,color");
        entries[parse_index(cells[0], r)] = parse_index(cells[1], r);
    }
    Coloring c;
    if (entries.empty()) return c;
    c.colors.assign(static_cast<std::size_t>(entries.rbegin()->first) + 1, -1);
    for (auto [v, color] : entries) {
        c.colors[static_cast<std::size_t>(v)] = static_cast<int>(color);
        c.num_colors = std::max(c.num_colors, static_cast<int>(color) + 1);
    }
    return c;
}

nlohmann::json graph_metadata(const BorsukGraph& g, std::uint64_t seed) {
    return {{"dim", g.dim()}, {"eps", g.eps}, {"n", g.size()}, {"m", g.graph.edge_count()}, {"seed", seed}};
}

nlohmann::json certificate_json(const Certificate& c) {
    nlohmann::json j{{"kind", kind_name(c.kind)},
                     {"delta", c.delta},
                     {"net_size", c.net_size()},
                     {"holds", c.holds}};
    if (c.kind == CertificateKind::lower_bound_lsb) {
        j["rule"] = c.rule == CoverRule::net ? "net" : "arc-gap";
        j["empty_caps"] = c.empty_caps;
    }
    j["cap_radius"] = c.cap_radius;
    if (c.witness) {
        j["witness_center"] = real_vector(c.witness->center.coords());
        j["witness_radius"] = c.witness->radius;
    }
    return j;
}

nlohmann::json trial_json(const TrialResult& r, bool with_timing) {
    const TrialConfig& cfg = r.config;
    nlohmann::json config{{"dim", cfg.dim},
                          {"n", cfg.n},
                          {"mode", cfg.mode == EpsMode::schedule ? "schedule" : "fixed_eps"},
                          {"seed", cfg.seed},
                          {"poissonized", cfg.poissonized},
                          {"lambda_variant", cfg.lambda_variant == LambdaVariant::d_minus_1 ? "dminus1" : "d"},
                          {"certificate_rule", cfg.certificate_rule == CoverRule::net ? "net" : "arc-gap"}};
    if (cfg.mode == EpsMode::schedule)
        config["C"] = cfg.C;
    else
        config["eps_fixed"] = cfg.eps_fixed;

    auto opt = [](const auto& o) -> nlohmann::json { return o ? nlohmann::json(*o) : nlohmann::json(nullptr); };
    nlohmann::json j{{"config", config},
                     {"n_effective", r.n_effective},
                     {"eps", r.eps},
                     {"certificate_holds", r.certificate_holds},
                     {"certificate_empty_caps", r.certificate_empty_caps},
                     {"empty_cap_found", r.empty_cap_found},
                     {"coloring_d1_proper", opt(r.coloring_d1_proper)},
                     {"simplex_coloring_proper", opt(r.simplex_coloring_proper)},
                     {"odd_girth_computed", r.odd_girth_computed},
                     {"odd_girth", opt(r.odd_girth)},
                     {"bipartite", opt(r.bipartite)},
                     {"edge_count", r.edge_count}};
    if (with_timing) j["wall_ms"] = r.wall_ms;
    return j;
}

void write_sweep(std::ostream& out, const std::vector<SweepCell>& cells, bool with_timing) {
    out << "d,n,C,eps,trials,frac_certificate,frac_empty_cap,frac_bipartite,mean_wall_ms\n";
    for (const SweepCell& c : cells) {
        out << c.dim << ',' << c.n << ',' << format_real(c.C) << ',' << format_real(c.eps) << ',' << c.trials << ','
            << format_real(c.frac_certificate) << ',' << format_real(c.frac_empty_cap) << ','
            << (c.frac_bipartite ? format_real(*c.frac_bipartite) : "") << ','
            << (with_timing ? format_real(c.mean_wall_ms) : "") << '\n';
    }
}

void write_sweep_svg(std::ostream& out, const std::vector<SweepCell>& cells) {
    constexpr double W = 640, H = 400, L = 60, R = 20, T = 20, B = 50;
    double cmin = 0, cmax = 1;
    if (!cells.empty()) {
        cmin = cmax = cells.front().C;
        for (const auto& c : cells) {
            cmin = std::min(cmin, c.C);
            cmax = std::max(cmax, c.C);
        }
        if (cmax == cmin) cmax = cmin + 1;
    }
    auto px = [&](double C) { return L + (C - cmin) / (cmax - cmin) * (W - L - R); };
    auto py = [&](double f) { return H - B - f * (H - T - B); };
    std::map<std::int64_t, std::vector<const SweepCell*>> by_n;
    for (const auto& c : cells) by_n[c.n].push_back(&c);

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << L << "\" y1=\"" << py(0) << "\" x2=\"" << W - R << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << L << "\" y1=\"" << py(0) << "\" x2=\"" << L << "\" y2=\"" << py(1) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">C</text>\n";
    out << "<text x=\"15\" y=\"" << H / 2 << "\" transform=\"rotate(-90 15 " << H / 2
        << ")\" text-anchor=\"middle\">success fraction</text>\n";
    for (double f : {0.0, 0.5, 1.0})
        out << "<text x=\"" << L - 8 << "\" y=\"" << py(f) + 4 << "\" text-anchor=\"end\">" << f << "</text>\n";
    out << "<text x=\"" << L << "\" y=\"" << H - B + 18 << "\">" << format_real(cmin) << "</text>\n";
    out << "<text x=\"" << W - R << "\" y=\"" << H - B + 18 << "\" text-anchor=\"end\">" << format_real(cmax) << "</text>\n";
    std::size_t k = 0;
    for (auto& [n, list] : by_n) {
        std::sort(list.begin(), list.end(), [](auto* a, auto* b) { return a->C < b->C; });
        const char* color = palette[k % std::size(palette)];
        for (int series = 0; series < 2; ++series) {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\"" << (series ? " stroke-dasharray=\"5,4\"" : "")
                << " points=\"";
            for (auto* c : list) out << px(c->C) << ',' << py(series ? c->frac_empty_cap : c->frac_certificate) << ' ';
            out << "\"/>\n";
        }
        out << "<text x=\"" << W - R - 5 << "\" y=\"" << T + 15 * (k + 1) << "\" text-anchor=\"end\" fill=\"" << color
            << "\">n=" << n << " (solid: certificate, dashed: empty cap)</text>\n";
        ++k;
    }
    out << "</svg>\n";
}

}  // namespace borsuk::io
