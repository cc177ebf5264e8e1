#include "fgr/text_io.hpp"

#include <charconv>
#include <sstream>

#include "fgr/errors.hpp"

namespace fgr {

Weight WeightMap::to_source(Weight target) const {
  Weight d = checked_sub(target, shift);
  if (scale == 0 || d % scale != 0)
    throw PreconditionError("value " + std::to_string(target) + " is not in the image of the weight map");
  return d / scale;
}

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

using Line = std::vector<Token>;

// Splits text into non-empty lines of whitespace-separated tokens, dropping
// '#' comments (and, for DIMACS, lines starting with 'c').
std::vector<Line> tokenize(std::string_view text, bool dimacs_comments = false) {
  std::vector<Line> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line tokens;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) tokens.push_back({raw.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    bool skip = tokens.empty() || (dimacs_comments && tokens.front().text == "c");
    if (!skip) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines, int last_line) : lines_(std::move(lines)), last_line_(last_line) {}

  bool done() const { return next_ >= lines_.size(); }
  const Line& take(const char* what) {
    if (done()) throw ParseError(last_line_, 1, std::string("unexpected end of input, expected ") + what);
    return lines_[next_++];
  }
  void finish() {
    if (!done()) throw ParseError(lines_[next_].front().line, lines_[next_].front().column, "unexpected trailing input");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  int last_line_;
};

int count_lines(std::string_view text) {
  int n = 1;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

std::int64_t to_int(const Token& t, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    throw ParseError(t.line, t.column, std::string("malformed ") + what + " '" + std::string(t.text) + "'");
  return v;
}

std::int64_t to_count(const Token& t, const char* what) {
  std::int64_t v = to_int(t, what);
  if (v < 0) throw ParseError(t.line, t.column, std::string("negative ") + what);
  return v;
}

void expect_arity(const Line& line, std::size_t lo, std::size_t hi, const char* what) {
  if (line.size() < lo || line.size() > hi) {
    const Token& t = line.size() > hi ? line[hi] : line.back();
    throw ParseError(t.line, t.column, std::string("wrong number of fields in ") + what);
  }
}

void expect_keyword(const Line& line, std::string_view keyword) {
  if (line.front().text != keyword)
    throw ParseError(line.front().line, line.front().column,
                     "expected '" + std::string(keyword) + "', found '" + std::string(line.front().text) + "'");
}

// Runs a constructor and maps invariant violations to a parse error at `at`.
template <class F>
auto build(const Token& at, F&& f) {
  try {
    return f();
  } catch (const InvalidInstance& e) {
    throw ParseError(at.line, at.column, e.what());
  }
}

std::vector<Edge> read_edges(Reader& r, std::int64_t m) {
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::int64_t i = 0; i < m; ++i) {
    const Line& l = r.take("edge line");
    expect_arity(l, 3, 3, "edge line");
    edges.push_back({static_cast<NodeId>(to_int(l[0], "node id")), static_cast<NodeId>(to_int(l[1], "node id")),
                     to_int(l[2], "weight")});
  }
  return edges;
}

}  // namespace

std::string emit_digraph(const WeightedDigraph& g) {
  std::ostringstream out;
  out << "digraph " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.source << ' ' << e.target << ' ' << e.weight << '\n';
  return out.str();
}

WeightedDigraph parse_digraph(std::string_view text) {
  Reader r(tokenize(text), count_lines(text));
  const Line& h = r.take("header");
  expect_keyword(h, "digraph");
  expect_arity(h, 3, 3, "digraph header");
  auto n = to_count(h[1], "node count");
  auto m = to_count(h[2], "edge count");
  auto edges = read_edges(r, m);
  r.finish();
  return build(h[0], [&] { return WeightedDigraph(static_cast<int>(n), std::move(edges)); });
}

std::string emit_layered(const CircleLayeredGraph& g) {
  std::ostringstream out;
  out << "layered " << g.node_count() << ' ' << g.graph().edge_count() << ' ' << g.k() << '\n';
  for (int v = 0; v < g.node_count(); ++v) out << (v ? " " : "") << g.layer_of(v);
  if (g.node_count() > 0) out << '\n';
  for (const Edge& e : g.graph().edges()) out << e.source << ' ' << e.target << ' ' << e.weight << '\n';
  return out.str();
}

CircleLayeredGraph parse_layered(std::string_view text) {
  Reader r(tokenize(text), count_lines(text));
  const Line& h = r.take("header");
  expect_keyword(h, "layered");
  expect_arity(h, 4, 4, "layered header");
  auto n = to_count(h[1], "node count");
  auto m = to_count(h[2], "edge count");
  auto k = to_count(h[3], "layer count");
  std::vector<int> layers;
  if (n > 0) {
    const Line& l = r.take("layer line");
    expect_arity(l, n, n, "layer line");
    for (const Token& t : l) layers.push_back(static_cast<int>(to_int(t, "layer index")));
  }
  auto edges = read_edges(r, m);
  r.finish();
  return build(h[0], [&] {
    return CircleLayeredGraph(WeightedDigraph(static_cast<int>(n), std::move(edges)), static_cast<int>(k),
                              std::move(layers));
  });
}

std::string emit_hypergraph(const UniformHypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.node_count() << ' ' << h.arity() << ' ' << h.edge_count();
  if (h.partitioned()) {
    out << ' ' << h.part_count() << '\n';
    for (int v = 0; v < h.node_count(); ++v) out << (v ? " " : "") << h.part_of(v);
    if (h.node_count() > 0) out << '\n';
  } else {
    out << '\n';
  }
  for (const Hyperedge& e : h.edges()) {
    for (NodeId v : e.nodes) out << v << ' ';
    out << e.w1;
    if (e.w2 != 0) out << ' ' << e.w2;
    out << '\n';
  }
  return out.str();
}

UniformHypergraph parse_hypergraph(std::string_view text) {
  Reader r(tokenize(text), count_lines(text));
  const Line& h = r.take("header");
  expect_keyword(h, "hypergraph");
  expect_arity(h, 4, 5, "hypergraph header");
  auto n = to_count(h[1], "node count");
  auto k = to_count(h[2], "arity");
  auto m = to_count(h[3], "edge count");
  if (k < 2) throw ParseError(h[2].line, h[2].column, "arity below 2");
  std::optional<std::int64_t> parts;
  std::vector<int> part_of;
  if (h.size() == 5) {
    parts = to_count(h[4], "part count");
    if (n > 0) {
      const Line& l = r.take("part line");
      expect_arity(l, n, n, "part line");
      for (const Token& t : l) part_of.push_back(static_cast<int>(to_int(t, "part index")));
    }
  }
  std::vector<Hyperedge> edges;
  for (std::int64_t i = 0; i < m; ++i) {
    const Line& l = r.take("hyperedge line");
    expect_arity(l, k + 1, k + 2, "hyperedge line");
    Hyperedge e;
    for (std::int64_t j = 0; j < k; ++j) e.nodes.push_back(static_cast<NodeId>(to_int(l[j], "node id")));
    e.w1 = to_int(l[k], "weight");
    if (l.size() == static_cast<std::size_t>(k + 2)) e.w2 = to_int(l[k + 1], "weight");
    edges.push_back(std::move(e));
  }
  r.finish();
  return build(h[0], [&] {
    if (parts)
      return UniformHypergraph(static_cast<int>(n), static_cast<int>(k), std::move(part_of),
                               static_cast<int>(*parts), std::move(edges));
    return UniformHypergraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
  });
}

std::string emit_dimacs(const Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf parse_dimacs(std::string_view text) {
  auto lines = tokenize(text, true);
  if (lines.empty()) throw ParseError(1, 1, "missing 'p cnf' header");
  const Line& h = lines.front();
  if (h.size() != 4 || h[0].text != "p" || h[1].text != "cnf")
    throw ParseError(h[0].line, h[0].column, "expected 'p cnf <vars> <clauses>'");
  Cnf f;
  f.variable_count = static_cast<int>(to_count(h[2], "variable count"));
  auto m = to_count(h[3], "clause count");
  std::vector<int> current;
  const Token* last = &h[3];
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (const Token& t : lines[i]) {
      if (t.text == "%") goto done;
      last = &t;
      auto lit = to_int(t, "literal");
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > f.variable_count || -lit > f.variable_count)
        throw ParseError(t.line, t.column, "literal references undeclared variable");
      current.push_back(static_cast<int>(lit));
    }
  }
done:
  if (!current.empty()) throw ParseError(last->line, last->column, "clause not terminated by 0");
  if (static_cast<std::int64_t>(f.clauses.size()) != m)
    throw ParseError(h[3].line, h[3].column,
                     "header declares " + std::to_string(m) + " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

std::string emit_csp(const CspInstance& f) {
  std::ostringstream out;
  out << "csp " << f.variable_count() << ' ' << f.clauses().size();
  if (f.targets()) out << ' ' << f.targets()->k_v << ' ' << f.targets()->k_p;
  out << '\n';
  for (const auto& p : f.clauses()) {
    if (p.terms().empty()) {
      out << "0\n";
      continue;
    }
    bool first = true;
    for (const auto& [mono, coef] : p.terms()) {
      if (!first) out << '+';
      first = false;
      out << coef;
      for (int v : mono) out << '*' << (v + 1);
    }
    out << '\n';
  }
  return out.str();
}

CspInstance parse_csp(std::string_view text) {
  Reader r(tokenize(text), count_lines(text));
  const Line& h = r.take("header");
  expect_keyword(h, "csp");
  if (h.size() != 3 && h.size() != 5) throw ParseError(h[0].line, h[0].column, "wrong number of fields in csp header");
  auto n = to_count(h[1], "variable count");
  auto m = to_count(h[2], "clause count");
  std::optional<CspTargets> targets;
  if (h.size() == 5) targets = CspTargets{to_int(h[3], "target"), to_int(h[4], "target")};
  std::vector<MultilinearPolynomial> clauses;
  for (std::int64_t i = 0; i < m; ++i) {
    const Line& l = r.take("polynomial line");
    expect_arity(l, 1, 1, "polynomial line");
    const Token& t = l[0];
    std::vector<std::pair<Monomial, Weight>> terms;
    int degree = 0;
    std::size_t pos = 0;
    while (pos <= t.text.size()) {
      std::size_t plus = t.text.find('+', pos);
      if (plus == std::string_view::npos) plus = t.text.size();
      std::string_view term = t.text.substr(pos, plus - pos);
      std::vector<Token> factors;
      std::size_t fpos = 0;
      while (fpos <= term.size()) {
        std::size_t star = term.find('*', fpos);
        if (star == std::string_view::npos) star = term.size();
        factors.push_back({term.substr(fpos, star - fpos), t.line, t.column + static_cast<int>(pos + fpos)});
        if (star == term.size()) break;
        fpos = star + 1;
      }
      Weight coef = to_int(factors[0], "coefficient");
      Monomial mono;
      for (std::size_t j = 1; j < factors.size(); ++j) {
        auto v = to_int(factors[j], "variable");
        if (v < 1 || v > n) throw ParseError(factors[j].line, factors[j].column, "variable out of range");
        mono.push_back(static_cast<int>(v - 1));
      }
      degree = std::max(degree, static_cast<int>(mono.size()));
      if (coef != 0 || mono.size() > 0) terms.emplace_back(std::move(mono), coef);
      if (plus == t.text.size()) break;
      pos = plus + 1;
    }
    clauses.push_back(build(t, [&] { return MultilinearPolynomial(static_cast<int>(n), degree, terms); }));
  }
  r.finish();
  return build(h[0], [&] { return CspInstance(static_cast<int>(n), std::move(clauses), targets); });
}

std::string emit_witness(const Witness& w) {
  std::ostringstream out;
  out << "witness " << to_string(w.kind) << ' ' << w.claimed_weight << '\n';
  for (std::size_t i = 0; i < w.items.size(); ++i) out << (i ? " " : "") << w.items[i];
  if (!w.items.empty()) out << '\n';
  return out.str();
}

Witness parse_witness(std::string_view text) {
  Reader r(tokenize(text), count_lines(text));
  const Line& h = r.take("header");
  expect_keyword(h, "witness");
  expect_arity(h, 3, 3, "witness header");
  auto kind = witness_kind_from_string(std::string(h[1].text));
  if (!kind) throw ParseError(h[1].line, h[1].column, "unknown witness variant '" + std::string(h[1].text) + "'");
  Witness w;
  w.kind = *kind;
  w.claimed_weight = to_int(h[2], "weight");
  if (!r.done()) {
    for (const Token& t : r.take("items")) w.items.push_back(to_int(t, "item"));
  }
  r.finish();
  return w;
}

std::string emit_weight_map(const WeightMap& m) {
  return "scale " + std::to_string(m.scale) + " shift " + std::to_string(m.shift) + "\n";
}

WeightMap parse_weight_map(std::string_view text) {
  Reader r(tokenize(text), count_lines(text));
  const Line& l = r.take("weight map");
  expect_keyword(l, "scale");
  expect_arity(l, 4, 4, "weight map");
  if (l[2].text != "shift") throw ParseError(l[2].line, l[2].column, "expected 'shift'");
  return {to_int(l[1], "scale"), to_int(l[3], "shift")};
}

std::string detect_format(std::string_view text) {
  auto lines = tokenize(text, true);
  if (lines.empty()) return "";
  return std::string(lines.front().front().text);
}

}  // namespace fgr
