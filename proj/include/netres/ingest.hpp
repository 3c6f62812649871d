#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netres/graph.hpp"

namespace netres {

/// Input error carrying the 1-based line number it was detected on.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Edge pairs as read from a file, before any simplification. May contain
/// duplicates, reciprocal pairs and self-loops.
struct RawEdgeList {
    std::vector<std::pair<std::string, std::string>> pairs;
    /// Node labels declared independently of edges (Pajek *Vertices,
    /// GML node blocks); isolated declared nodes live here.
    std::vector<std::string> declared_nodes;
    /// Set when the source format marks the graph as directed (*Arcs,
    /// GML "directed 1").
    bool directed = false;
};

/// Bijection between original labels and the dense NodeIds of an ingested
/// graph, so results can be mapped back to the source naming.
struct LabelMap {
    std::vector<std::string> id_to_label;
    std::unordered_map<std::string, NodeId> label_to_id;

    void add(const std::string& label);
    bool contains(const std::string& label) const { return label_to_id.count(label) != 0; }
};

struct IngestResult {
    Graph graph;
    LabelMap labels;
};

/// Plain whitespace-separated edge list ('#' starts a comment line).
RawEdgeList parse_edge_list(std::istream& in);

/// Pajek .net: a *Vertices section followed by *Edges / *Arcs sections
/// (case-insensitive, 1-based vertex ids). Trailing tokens on edge lines
/// (weights) are ignored.
RawEdgeList parse_pajek(std::istream& in);

/// GML: node [ id N ] and edge [ source A target B ] blocks; unknown keys
/// and nested blocks are skipped.
RawEdgeList parse_gml(std::istream& in);

/// Drops self-loops, collapses duplicate/reciprocal pairs into one
/// undirected edge, keeps only the largest connected component and
/// re-indexes it densely. Throws if nothing remains.
IngestResult simplify_and_lcc(const RawEdgeList& raw);

/// Canonical export: "# nodes=<n> edges=<m>" header, one "a b" line per
/// edge. Labels come from `labels` when given, otherwise the dense ids are
/// printed. Lines and endpoint order are sorted by label (numerically when
/// every label is a plain integer), which makes the format a fixed point of
/// ingest-then-export.
void write_canonical(const Graph& g, const LabelMap* labels, std::ostream& out);

enum class FileFormat { Auto, EdgeList, Pajek, Gml };

/// Auto: .net -> Pajek, .gml -> GML, anything else -> edge list.
FileFormat detect_format(const std::filesystem::path& path);

RawEdgeList parse_file(const std::filesystem::path& path, FileFormat format = FileFormat::Auto);

/// parse_file + simplify_and_lcc.
IngestResult load_graph(const std::filesystem::path& path, FileFormat format = FileFormat::Auto);

}  // namespace netres
