#include "graphk/textio.hpp"

#include "graphk/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace graphk {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::string raw;
};

std::vector<Line> tokenize_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string body = raw.substr(0, raw.find('#'));
    std::istringstream ls(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.push_back({number, std::move(tokens), body});
  }
  return out;
}

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw input_error("line " + std::to_string(line) + ": " + message);
}

bool parse_int(const std::string& s, Int* out) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  *out = Int(s);
  return true;
}

bool parse_count(const std::string& s, Mult* out) {
  if (s == "inf") {
    *out = Mult::inf();
    return true;
  }
  Int n;
  if (!parse_int(s, &n) || n <= 0) return false;
  *out = Mult::of(n);
  return true;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::pair<std::pair<int, int>, Mult>> edges;
  std::map<std::pair<int, int>, int> edge_lines;
  bool edges_started = false;

  for (const Line& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 2) fail_at(line.number, "expected `vertex <id>`");
      if (edges_started) fail_at(line.number, "vertex declarations must precede edge lines");
      if (index.count(t[1]) != 0) fail_at(line.number, "duplicate vertex '" + t[1] + "'");
      index.emplace(t[1], int(names.size()));
      names.push_back(t[1]);
    } else if (t[0] == "edge") {
      if (t.size() != 4) fail_at(line.number, "expected `edge <src> <dst> <count>`");
      edges_started = true;
      auto src = index.find(t[1]);
      if (src == index.end()) fail_at(line.number, "unknown vertex '" + t[1] + "'");
      auto dst = index.find(t[2]);
      if (dst == index.end()) fail_at(line.number, "unknown vertex '" + t[2] + "'");
      Mult count;
      if (!parse_count(t[3], &count)) {
        fail_at(line.number, "count must be a positive integer or `inf`");
      }
      std::pair<int, int> key{src->second, dst->second};
      auto prev = edge_lines.find(key);
      if (prev != edge_lines.end()) {
        fail_at(line.number, "duplicate edge " + t[1] + " -> " + t[2] + " (first on line " +
                                 std::to_string(prev->second) + ")");
      }
      edge_lines.emplace(key, line.number);
      edges.push_back({key, count});
    } else {
      fail_at(line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (names.empty()) throw input_error("graph file declares no vertices");
  std::vector<std::vector<Mult>> m(names.size(), std::vector<Mult>(names.size()));
  for (const auto& [key, count] : edges) m[size_t(key.first)][size_t(key.second)] = count;
  return Graph(std::move(names), std::move(m));
}

std::string print_graph(const Graph& g) {
  std::string out;
  for (int v = 0; v < g.count(); ++v) out += "vertex " + g.name(v) + "\n";
  for (int u = 0; u < g.count(); ++u) {
    for (int v = 0; v < g.count(); ++v) {
      const Mult& m = g.mult(u, v);
      if (m.is_positive()) {
        out += "edge " + g.name(u) + " " + g.name(v) + " " + to_string(m) + "\n";
      }
    }
  }
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw input_error("matrix file is empty");
  if (lines[0].tokens.size() != 2) fail_at(lines[0].number, "expected `rows cols`");
  Int rows_i, cols_i;
  if (!parse_int(lines[0].tokens[0], &rows_i) || !parse_int(lines[0].tokens[1], &cols_i) ||
      rows_i < 0 || cols_i < 0) {
    fail_at(lines[0].number, "expected nonnegative `rows cols`");
  }
  int rows = int(rows_i), cols = int(cols_i);
  // rows of a zero-column matrix are empty lines, which do not survive
  // tokenization; the header alone carries the shape
  int expected_lines = cols == 0 ? 0 : rows;
  if (int(lines.size()) - 1 != expected_lines) {
    throw input_error("expected " + std::to_string(expected_lines) + " matrix rows, found " +
                      std::to_string(int(lines.size()) - 1));
  }
  IntMatrix m(rows, cols);
  for (int r = 0; r < expected_lines; ++r) {
    const Line& line = lines[size_t(r) + 1];
    if (int(line.tokens.size()) != cols) {
      fail_at(line.number, "expected " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      Int v;
      if (!parse_int(line.tokens[size_t(c)], &v)) fail_at(line.number, "bad integer entry");
      m.at(r, c) = v;
    }
  }
  return m;
}

std::string print_matrix(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  if (m.cols() == 0) return out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += " ";
      out += m.at(r, c).str();
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

PartitionSpec parse_blocks(const std::string& rest, bool allow_inf, int line_number) {
  PartitionSpec p;
  for (const std::string& raw_block : split_on(rest, "::")) {
    std::string block = trim(raw_block);
    if (block.empty()) fail_at(line_number, "empty partition block");
    std::vector<std::pair<std::string, Mult>> entries;
    for (const std::string& raw_pair : split_on(block, ",")) {
      std::string pair = trim(raw_pair);
      size_t eq = pair.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size()) {
        fail_at(line_number, "expected `<vertex>=<count|inf>`, got '" + pair + "'");
      }
      std::string vertex = trim(pair.substr(0, eq));
      std::string count_text = trim(pair.substr(eq + 1));
      Mult count;
      if (!parse_count(count_text, &count)) {
        fail_at(line_number, "bad count '" + count_text + "'");
      }
      if (count.infinite && !allow_inf) {
        fail_at(line_number, "`inf` is not allowed in an insplit block");
      }
      entries.emplace_back(vertex, count);
    }
    p.blocks.push_back(std::move(entries));
  }
  return p;
}

}  // namespace

MoveScript parse_script(const std::string& text) {
  MoveScript script;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    std::istringstream ls(body);
    std::string keyword;
    ls >> keyword;
    MoveStep step;
    if (keyword == "remove-source" || keyword == "reduce" || keyword == "collapse" ||
        keyword == "cuntz-splice") {
      std::string vertex, extra;
      if (!(ls >> vertex) || (ls >> extra)) {
        fail_at(number, "expected `" + keyword + " <vertex>`");
      }
      step.kind = keyword == "remove-source" ? MoveKind::remove_source
                  : keyword == "reduce"      ? MoveKind::reduce
                  : keyword == "collapse"    ? MoveKind::collapse
                                             : MoveKind::cuntz_splice;
      step.vertex = vertex;
    } else if (keyword == "outsplit" || keyword == "insplit") {
      size_t sep = body.find("::");
      if (sep == std::string::npos) fail_at(number, "expected `:: <pairs> :: ...` blocks");
      std::istringstream head(body.substr(0, sep));
      std::string kw, vertex, extra;
      if (!(head >> kw >> vertex) || (head >> extra)) {
        fail_at(number, "expected `" + keyword + " <vertex> :: ...`");
      }
      step.kind = keyword == "outsplit" ? MoveKind::outsplit : MoveKind::insplit;
      step.vertex = vertex;
      step.partition =
          parse_blocks(body.substr(sep + 2), keyword == "outsplit", number);
    } else if (keyword == "transitive") {
      std::string vertex;
      while (ls >> vertex) step.path.push_back(vertex);
      if (step.path.size() < 2) fail_at(number, "expected `transitive <v0> <v1> ...`");
      step.kind = MoveKind::transitive;
    } else {
      fail_at(number, "unknown move '" + keyword + "'");
    }
    script.steps.push_back(std::move(step));
  }
  return script;
}

std::string print_script(const MoveScript& s) {
  std::string out;
  for (const MoveStep& step : s.steps) {
    out += to_string(step.kind);
    if (step.kind == MoveKind::transitive) {
      for (const auto& v : step.path) out += " " + v;
    } else {
      out += " " + step.vertex;
    }
    if (step.kind == MoveKind::outsplit || step.kind == MoveKind::insplit) {
      for (const auto& block : step.partition.blocks) {
        out += " ::";
        bool first = true;
        for (const auto& [vertex, count] : block) {
          out += first ? " " : ", ";
          out += vertex + "=" + to_string(count);
          first = false;
        }
      }
    }
    out += "\n";
  }
  return out;
}

FieldDescriptor parse_field(const std::string& text) {
  if (text == "Q") return FieldDescriptor::rationals();
  if (text == "R") return FieldDescriptor::reals();
  if (text == "C") return FieldDescriptor::complexes();
  if (text == "nfq") return FieldDescriptor::nfq_generic();
  if (text == "generic") return FieldDescriptor::generic();
  if (text == "algclosed") return FieldDescriptor::alg_closed();
  if (text.rfind("algclosed:p=", 0) == 0) {
    Int p;
    if (!parse_int(text.substr(12), &p) || p < 2) {
      throw input_error("bad field descriptor '" + text + "'");
    }
    return FieldDescriptor::alg_closed(p);
  }
  if (text.size() > 1 && text[0] == 'F') {
    Int q;
    if (parse_int(text.substr(1), &q) && q >= 2) return FieldDescriptor::finite(q);
  }
  throw input_error("bad field descriptor '" + text +
                    "' (expected Q, R, C, F<q>, algclosed, algclosed:p=<p>, nfq, generic)");
}

std::string print_field(const FieldDescriptor& f) {
  switch (f.kind) {
    case FieldKind::rationals: return "Q";
    case FieldKind::reals: return "R";
    case FieldKind::complexes: return "C";
    case FieldKind::finite: return "F" + f.order.str();
    case FieldKind::alg_closed:
      return f.characteristic == 0 ? "algclosed" : "algclosed:p=" + f.characteristic.str();
    case FieldKind::nfq_generic: return "nfq";
    default: return "generic";
  }
}

}  // namespace graphk
