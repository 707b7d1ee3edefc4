#include "rtvd/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace rtvd {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Splits the input into tokenized lines and peels off comments.
std::vector<Line> tokenize(std::istream& in, std::vector<std::string>* comments) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    if (line.tokens[0] == "c") {
      if (comments) {
        auto pos = text.find('c');
        std::string rest = text.substr(pos + 1);
        if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
        comments->push_back(rest);
      }
      continue;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

long long to_integer(const Line& line, std::size_t index) {
  if (index >= line.tokens.size()) throw ParseError(line.number, "missing field");
  const std::string& tok = line.tokens[index];
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  return value;
}

int count_field(const Line& line, std::size_t index, const char* what) {
  long long v = to_integer(line, index);
  if (v < 0 || v > 100000000) throw ParseError(line.number, std::string(what) + " out of range");
  return static_cast<int>(v);
}

Vertex vertex_field(const Line& line, std::size_t index, int n) {
  long long v = to_integer(line, index);
  if (v < 1 || v > n) {
    throw ParseError(line.number, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                      std::to_string(line.tokens.size()));
  }
}

const Line& header(const std::vector<Line>& lines, const std::string& kind, std::size_t fields) {
  if (lines.empty()) throw ParseError(0, "missing 'p " + kind + "' header");
  const Line& h = lines.front();
  if (h.tokens[0] != "p" || h.tokens.size() < 2 || h.tokens[1] != kind) {
    throw ParseError(h.number, "expected 'p " + kind + "' header");
  }
  expect_fields(h, fields);
  return h;
}

int last_line(const std::vector<Line>& lines) { return lines.empty() ? 0 : lines.back().number; }

}  // namespace

ParsedInstance read_instance(std::istream& in) {
  ParsedInstance parsed;
  auto lines = tokenize(in, &parsed.comments);
  const Line& h = header(lines, "rtvd", 6);
  const int n = count_field(h, 2, "n");
  const int m = count_field(h, 3, "m");
  const int k = count_field(h, 4, "k");
  const int ell = count_field(h, 5, "ell");
  if (k > n) throw ParseError(h.number, "k exceeds n");

  Digraph d(n);
  int arcs = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "a") throw ParseError(line.number, "unexpected line type '" + line.tokens[0] + "'");
    expect_fields(line, 3);
    Vertex u = vertex_field(line, 1, n);
    Vertex v = vertex_field(line, 2, n);
    if (u == v) throw ParseError(line.number, "self-loop");
    if (d.has_arc(u, v)) throw ParseError(line.number, "duplicate arc");
    d.add_arc(u, v);
    ++arcs;
  }
  if (arcs != m) {
    throw ParseError(last_line(lines), "header declares " + std::to_string(m) + " arcs, found " + std::to_string(arcs));
  }
  parsed.instance = Instance{std::move(d), k, ell};
  return parsed;
}

std::string read_text_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

ParsedInstance read_instance_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  const auto arcs = inst.digraph.arcs();
  out << "p rtvd " << inst.digraph.num_vertices() << ' ' << arcs.size() << ' ' << inst.k << ' ' << inst.ell
      << '\n';
  for (const Arc& a : arcs) out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
}

UndirectedGraph read_graph(std::istream& in) {
  auto lines = tokenize(in, nullptr);
  const Line& h = header(lines, "edge", 4);
  const int n = count_field(h, 2, "n");
  const int m = count_field(h, 3, "m");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e") throw ParseError(line.number, "unexpected line type '" + line.tokens[0] + "'");
    expect_fields(line, 3);
    Vertex u = vertex_field(line, 1, n);
    Vertex v = vertex_field(line, 2, n);
    if (u == v) throw ParseError(line.number, "self-loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ParseError(line.number, "duplicate edge");
    edges.emplace_back(u, v);
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(last_line(lines), "header declares " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  }
  return UndirectedGraph(n, std::move(edges));
}

void write_graph(std::ostream& out, const UndirectedGraph& g) {
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

MulticutInstance read_multicut(std::istream& in) {
  auto lines = tokenize(in, nullptr);
  const Line& h = header(lines, "mcut", 5);
  const int n = count_field(h, 2, "n");
  const int m = count_field(h, 3, "m");
  const int r = count_field(h, 4, "r");
  MulticutInstance mc;
  mc.dag = Digraph(n);
  int arcs = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_fields(line, 3);
    Vertex u = vertex_field(line, 1, n);
    Vertex v = vertex_field(line, 2, n);
    if (line.tokens[0] == "a") {
      if (u == v) throw ParseError(line.number, "self-loop");
      if (mc.dag.has_arc(u, v)) throw ParseError(line.number, "duplicate arc");
      mc.dag.add_arc(u, v);
      ++arcs;
    } else if (line.tokens[0] == "t") {
      mc.terminals.push_back({u, v});
    } else {
      throw ParseError(line.number, "unexpected line type '" + line.tokens[0] + "'");
    }
  }
  if (arcs != m || static_cast<int>(mc.terminals.size()) != r) {
    throw ParseError(last_line(lines), "arc or terminal count does not match the header");
  }
  return mc;
}

void write_multicut(std::ostream& out, const MulticutInstance& mc) {
  const auto arcs = mc.dag.arcs();
  out << "p mcut " << mc.dag.num_vertices() << ' ' << arcs.size() << ' ' << mc.terminals.size() << '\n';
  for (const Arc& a : arcs) out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
  for (const auto& [s, t] : mc.terminals) out << "t " << s + 1 << ' ' << t + 1 << '\n';
}

}  // namespace rtvd
