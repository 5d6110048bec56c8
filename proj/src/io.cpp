#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rmsc {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
  std::ostringstream os;
  os << name << ":" << line << ": " << what;
  fail(ErrorCode::parse, os.str());
}

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (*end != '\0') return false;
  out = static_cast<int>(v);
  return static_cast<long>(out) == v;
}

bool parse_real(const std::string& tok, double& out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return *end == '\0';
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream is(s);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open " + path + " for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io, "cannot open " + path + " for writing");
  return out;
}

}  // namespace

GraphView parse_edge_list(std::istream& in, int n, int id, const std::string& name) {
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::string> toks = split_ws(body);
    if (toks.empty()) continue;
    if (toks.size() != 2 && toks.size() != 3)
      parse_fail(name, lineno, "expected 'i j [w]', got " + std::to_string(toks.size()) + " fields");
    int u = 0, v = 0;
    double w = 1.0;
    if (!parse_int(toks[0], u)) parse_fail(name, lineno, "bad node index '" + toks[0] + "'");
    if (!parse_int(toks[1], v)) parse_fail(name, lineno, "bad node index '" + toks[1] + "'");
    if (toks.size() == 3 && (!parse_real(toks[2], w) || !std::isfinite(w)))
      parse_fail(name, lineno, "bad edge weight '" + toks[2] + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(name, lineno, "node index out of range [0, " + std::to_string(n) + ")");
    if (u == v) parse_fail(name, lineno, "self loop " + std::to_string(u));
    if (!(w > 0.0)) parse_fail(name, lineno, "edge weight must be positive");
    edges.push_back({u, v, w});
  }
  return GraphView::from_edges(n, std::move(edges), id);
}

GraphView load_edge_list(const std::string& path, int n, int id) {
  std::ifstream in = open_input(path);
  return parse_edge_list(in, n, id, path);
}

void save_edge_list(std::ostream& out, const GraphView& g) {
  out << "# " << g.size() << " nodes, " << g.edge_count() << " edges\n";
  for (const SymEntry& e : g.adjacency().upper())
    out << e.u << " " << e.v << " " << format_double(e.value) << "\n";
}

void save_edge_list(const std::string& path, const GraphView& g) {
  std::ofstream out = open_output(path);
  save_edge_list(out, g);
  if (!out) fail(ErrorCode::io, "write failed: " + path);
}

MultiGraph load_manifest(const std::string& path) {
  std::ifstream in = open_input(path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();

  int n = -1, m = -1;
  std::vector<std::string> view_paths;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    if (n < 0) {
      std::vector<std::string> toks = split_ws(body);
      if (toks.size() != 2 || !parse_int(toks[0], n) || !parse_int(toks[1], m))
        parse_fail(path, lineno, "expected header 'n m'");
      if (n <= 0) parse_fail(path, lineno, "node count must be positive");
      if (m <= 0) parse_fail(path, lineno, "view count must be positive");
      continue;
    }
    view_paths.push_back(body);
  }
  if (n < 0) fail(ErrorCode::parse, path + ": missing 'n m' header");
  if (static_cast<int>(view_paths.size()) != m) {
    std::ostringstream os;
    os << path << ": header promises " << m << " views, found " << view_paths.size();
    fail(ErrorCode::parse, os.str());
  }

  MultiGraph mg(n);
  for (int k = 0; k < m; ++k) {
    std::filesystem::path p(view_paths[static_cast<std::size_t>(k)]);
    if (p.is_relative()) p = base / p;
    mg.add_view(load_edge_list(p.string(), n, k));
  }
  return mg;
}

void save_manifest(const MultiGraph& mg, const std::string& dir, const std::string& manifest_name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path base(dir);

  std::vector<std::string> names;
  for (int k = 0; k < mg.view_count(); ++k) {
    std::string name = "view" + std::to_string(k) + ".edges";
    save_edge_list((base / name).string(), mg.view(k));
    names.push_back(name);
  }
  std::ofstream out = open_output((base / manifest_name).string());
  out << mg.size() << " " << mg.view_count() << "\n";
  for (const std::string& name : names) out << name << "\n";
  if (!out) fail(ErrorCode::io, "write failed: " + (base / manifest_name).string());
}

LabelVector parse_labels(std::istream& in, int n, const std::string& name) {
  LabelVector labels(n);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = split_ws(line.substr(0, line.find('#')));
    if (toks.empty()) continue;
    if (toks.size() != 2) parse_fail(name, lineno, "expected 'i label'");
    int i = 0, l = 0;
    if (!parse_int(toks[0], i)) parse_fail(name, lineno, "bad node index '" + toks[0] + "'");
    if (!parse_int(toks[1], l) || (l != 1 && l != -1))
      parse_fail(name, lineno, "label must be +1 or -1, got '" + toks[1] + "'");
    if (i < 0 || i >= n)
      parse_fail(name, lineno, "node index out of range [0, " + std::to_string(n) + ")");
    if (labels.is_labeled(i)) parse_fail(name, lineno, "node " + std::to_string(i) + " labeled twice");
    labels.set(i, l);
  }
  return labels;
}

LabelVector load_labels(const std::string& path, int n) {
  std::ifstream in = open_input(path);
  return parse_labels(in, n, path);
}

void save_labels(std::ostream& out, const LabelVector& labels) {
  for (int i : labels.labeled_nodes())
    out << i << " " << (labels.value(i) > 0 ? "+1" : "-1") << "\n";
}

void save_labels(const std::string& path, const LabelVector& labels) {
  std::ofstream out = open_output(path);
  save_labels(out, labels);
  if (!out) fail(ErrorCode::io, "write failed: " + path);
}

std::string format_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out = open_output(path);
  for (std::size_t j = 0; j < header.size(); ++j)
    out << (j ? "," : "") << csv_escape(header[j]);
  out << "\n";
  for (const std::vector<std::string>& row : rows) {
    if (row.size() != header.size())
      fail(ErrorCode::invalid, "write_csv: row width differs from header");
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? "," : "") << csv_escape(row[j]);
    out << "\n";
  }
  if (!out) fail(ErrorCode::io, "write failed: " + path);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(field);
      field.clear();
    } else if (ch == '\n') {
      row.push_back(field);
      field.clear();
      rows.push_back(row);
      row.clear();
      any = false;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (any) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rmsc
