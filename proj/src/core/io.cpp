#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace interdep {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  [[noreturn]] void bail(const std::string& msg) const {
    fail(Errc::parse, "line " + std::to_string(line_no) + ": " + msg);
  }

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
      ++line_no;
      bail(std::string("unexpected end of input, expected ") + what);
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') bail("CR line endings are not supported");
    return line;
  }

  // whole line as exactly `count` integers
  std::vector<long long> ints(const char* what, size_t count) {
    auto fields = split(next(what));
    if (fields.size() != count)
      bail(std::string("expected ") + what + ", got " + std::to_string(fields.size()) +
           " field(s)");
    std::vector<long long> out;
    for (const auto& f : fields) out.push_back(to_int(f));
    return out;
  }

  std::vector<std::string> split(const std::string& line) const {
    std::istringstream ss(line);
    std::vector<std::string> fields;
    std::string tok;
    while (ss >> tok) fields.push_back(tok);
    return fields;
  }

  long long to_int(const std::string& tok) const {
    size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      bail("not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) bail("not an integer: '" + tok + "'");
    return value;
  }

  int id_in(const std::string& tok, long long limit, const char* what) {
    long long v = to_int(tok);
    if (v < 0 || v >= limit)
      bail(std::string(what) + " " + tok + " out of range [0, " + std::to_string(limit) + ")");
    return static_cast<int>(v);
  }
};

Graph read_edge_block(LineReader& r, long long n, long long m, const char* where) {
  if (n < 0) r.bail(std::string(where) + " node count is negative");
  if (m < 0) r.bail(std::string(where) + " edge count is negative");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    auto fields = r.split(r.next("an edge line"));
    if (fields.size() != 2) r.bail("expected an edge line 'u v'");
    int u = r.id_in(fields[0], n, "node");
    int v = r.id_in(fields[1], n, "node");
    if (u == v) r.bail("self loop at node " + std::to_string(u));
    if (g.has_edge(u, v)) r.bail("duplicate edge " + fields[0] + " " + fields[1]);
    g.add_edge(u, v);
  }
  return g;
}

void expect_end(LineReader& r) {
  std::string line;
  if (std::getline(r.in, line)) {
    ++r.line_no;
    r.bail("trailing content after the model");
  }
}

void write_edges(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace

ColoredGraph read_colored_graph(std::istream& in) {
  LineReader r{in};
  auto header = r.ints("a header 'n m n_c'", 3);
  ColoredGraph cg;
  cg.graph = read_edge_block(r, header[0], header[1], "graph");
  if (header[2] < 0) r.bail("color count is negative");
  cg.color_count = static_cast<int>(header[2]);

  const long long n = header[0];
  cg.color_of.assign(static_cast<size_t>(n), -1);
  for (long long i = 0; i < n; ++i) {
    auto fields = r.split(r.next("a color line 'v c'"));
    if (fields.size() != 2) r.bail("expected a color line 'v c'");
    int v = r.id_in(fields[0], n, "node");
    int c = r.id_in(fields[1], header[2], "color");
    if (cg.color_of[v] != -1) r.bail("node " + fields[0] + " colored twice");
    cg.color_of[v] = c;
  }
  expect_end(r);
  cg.validate();
  return cg;
}

DependencySystem read_system(std::istream& in) {
  LineReader r{in};
  auto head = r.split(r.next("a 'system <direction>' line"));
  if (head.size() != 2 || head[0] != "system")
    r.bail("expected 'system one_way' or 'system bidirectional'");

  DependencySystem sys;
  if (head[1] == "one_way") {
    sys.direction = Direction::one_way;
  } else if (head[1] == "bidirectional") {
    sys.direction = Direction::bidirectional;
  } else {
    r.bail("unknown direction '" + head[1] + "'");
  }

  auto demand = r.split(r.next("a 'demand n m' line"));
  if (demand.size() != 3 || demand[0] != "demand") r.bail("expected 'demand n m'");
  long long n1 = r.to_int(demand[1]);
  sys.demand = read_edge_block(r, n1, r.to_int(demand[2]), "demand");

  auto supply = r.split(r.next("a 'supply n [m]' line"));
  if ((supply.size() != 2 && supply.size() != 3) || supply[0] != "supply")
    r.bail("expected 'supply n' or 'supply n m'");
  long long n2 = r.to_int(supply[1]);
  if (n2 < 1) r.bail("need at least one supply node");
  sys.supply_node_count = static_cast<int>(n2);
  if (supply.size() == 3)
    sys.supply_graph = read_edge_block(r, n2, r.to_int(supply[2]), "supply");

  sys.supplies_of.assign(static_cast<size_t>(n1), {});
  std::vector<char> seen(static_cast<size_t>(n1), 0);
  for (long long i = 0; i < n1; ++i) {
    auto fields = r.split(r.next("a 'dep u -> s...' line"));
    if (fields.size() < 4 || fields[0] != "dep" || fields[2] != "->")
      r.bail("expected 'dep u -> s1 s2 ...'");
    int u = r.id_in(fields[1], n1, "demand node");
    if (seen[u]) r.bail("demand node " + fields[1] + " listed twice");
    seen[u] = 1;
    for (size_t f = 3; f < fields.size(); ++f)
      sys.supplies_of[u].push_back(r.id_in(fields[f], n2, "supply node"));
  }
  expect_end(r);
  sys.validate();
  return sys;
}

void write_colored_graph(const ColoredGraph& cg, std::ostream& out) {
  cg.validate();
  out << cg.graph.node_count() << ' ' << cg.graph.edge_count() << ' ' << cg.color_count << '\n';
  write_edges(cg.graph, out);
  for (int v = 0; v < cg.graph.node_count(); ++v) out << v << ' ' << cg.color_of[v] << '\n';
}

void write_system(const DependencySystem& sys, std::ostream& out) {
  sys.validate();
  out << "system "
      << (sys.direction == Direction::one_way ? "one_way" : "bidirectional") << '\n';
  out << "demand " << sys.demand.node_count() << ' ' << sys.demand.edge_count() << '\n';
  write_edges(sys.demand, out);
  if (sys.supply_graph) {
    out << "supply " << sys.supply_node_count << ' ' << sys.supply_graph->edge_count() << '\n';
    write_edges(*sys.supply_graph, out);
  } else {
    out << "supply " << sys.supply_node_count << '\n';
  }
  for (int u = 0; u < sys.demand.node_count(); ++u) {
    auto list = sys.supplies_of[u];
    std::sort(list.begin(), list.end());
    out << "dep " << u << " ->";
    for (int s : list) out << ' ' << s;
    out << '\n';
  }
}

Model read_model(std::istream& in) {
  // peek the first non-space character to pick the schema
  int ch = in.peek();
  while (ch == ' ' || ch == '\t') {
    in.get();
    ch = in.peek();
  }
  if (ch == EOF) fail(Errc::parse, "line 1: empty input");
  if (std::isdigit(static_cast<unsigned char>(ch))) return read_colored_graph(in);
  return read_system(in);
}

Model read_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::io, "cannot open " + path + " for reading");
  return read_model(in);
}

void write_colored_graph_file(const ColoredGraph& cg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::io, "cannot open " + path + " for writing");
  write_colored_graph(cg, out);
  require(out.good(), Errc::io, "failed writing " + path);
}

void write_system_file(const DependencySystem& sys, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::io, "cannot open " + path + " for writing");
  write_system(sys, out);
  require(out.good(), Errc::io, "failed writing " + path);
}

}  // namespace interdep
