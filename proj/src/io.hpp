#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graph.hpp"

namespace rmsc {

// Text formats. All loaders accept '#' comments and blank lines and report
// parse errors with the offending line number.
//
// edge list   one "i j w" triple per line (w optional, default 1.0)
// manifest    first data line "n m", then m edge-list paths, one per line,
//             resolved relative to the manifest's directory
// labels      one "i l" pair per line with l in {+1, -1}

GraphView parse_edge_list(std::istream& in, int n, int id, const std::string& name);
GraphView load_edge_list(const std::string& path, int n, int id = 0);
void save_edge_list(std::ostream& out, const GraphView& g);
void save_edge_list(const std::string& path, const GraphView& g);

MultiGraph load_manifest(const std::string& path);
// Writes the manifest plus one edge list per view (view<k>.edges) into dir.
void save_manifest(const MultiGraph& mg, const std::string& dir,
                   const std::string& manifest_name = "manifest.txt");

LabelVector parse_labels(std::istream& in, int n, const std::string& name);
LabelVector load_labels(const std::string& path, int n);
void save_labels(std::ostream& out, const LabelVector& labels);
void save_labels(const std::string& path, const LabelVector& labels);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

// CSV with minimal quoting: fields containing ',', '"' or newlines are
// quoted, embedded quotes are doubled.
std::string csv_escape(const std::string& field);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace rmsc
