// File formats: point / edge / coloring CSV, certificate and trial JSON, sweep CSV.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>
#include "borsuk/certificate.hpp"
#include "borsuk/coloring.hpp"
#include "borsuk/experiment.hpp"
#include "borsuk/graph.hpp"

namespace borsuk::io {

/// "%.17g": round-trips every double.
std::string format_real(double x);

/// Header x0,...,xd then one point per row.
void write_points(std::ostream& out, const PointSet& points);
/// Rows are renormalized. Throws std::runtime_error on malformed input.
PointSet read_points(std::istream& in);

/// Header u,v; u < v; lexicographic.
void write_edges(std::ostream& out, const Graph& g);
/// Vertex count is max index + 1 unless `vertex_count` is larger.
Graph read_edges(std::istream& in, std::size_t vertex_count = 0);

/// Header vertex,color.
void write_coloring(std::ostream& out, const Coloring& c);
/// Vertices absent from the file are left at -1; num_colors = max color + 1.
Coloring read_coloring(std::istream& in);

nlohmann::json graph_metadata(const BorsukGraph& g, std::uint64_t seed);
nlohmann::json certificate_json(const Certificate& c);
/// wall_ms is included only when `with_timing`.
nlohmann::json trial_json(const TrialResult& r, bool with_timing);

/// d,n,C,eps,trials,frac_certificate,frac_empty_cap,frac_bipartite,mean_wall_ms.
/// mean_wall_ms is left empty unless `with_timing`, so the table is
/// byte-reproducible by default.
void write_sweep(std::ostream& out, const std::vector<SweepCell>& cells, bool with_timing);

/// Success fraction against C, one polyline per n.
void write_sweep_svg(std::ostream& out, const std::vector<SweepCell>& cells);

}  // namespace borsuk::io
