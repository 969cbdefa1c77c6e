#include "syzygy/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "syzygy/errors.hpp"

namespace syzygy {

namespace {

struct Token {
  enum class Kind { word, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 0, column = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto word_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      out.push_back({Token::Kind::word, text.substr(i, j - i), line, column});
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::symbol, "->", line, column});
      advance(2);
    } else if (std::string("{};:,*=/+-()[]").find(c) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), line, column});
      advance(1);
    } else {
      throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool is(const std::string& s) const { return peek().kind != Token::Kind::end && peek().text == s; }
  bool accept(const std::string& s) {
    if (!is(s)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }
  const Token& expect(const std::string& s) {
    if (!is(s)) fail(peek(), "expected '" + s + "'" + found());
    return next();
  }
  const Token& word(const std::string& what) {
    if (peek().kind != Token::Kind::word) fail(peek(), "expected " + what + found());
    return next();
  }
  std::string found() const {
    return at_end() ? " but reached the end of input" : " but found '" + peek().text + "'";
  }

  long integer(const std::string& what) {
    bool negative = accept("-");
    const Token& t = word(what);
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(t, "expected " + what + " but found '" + t.text + "'");
    try {
      long v = std::stol(t.text);
      return negative ? -v : v;
    } catch (const std::exception&) {
      fail(t, "integer out of range");
    }
  }

  bool at_number() const {
    std::size_t k = is("-") ? 1 : 0;
    const Token& t = peek(k);
    return t.kind == Token::Kind::word && !t.text.empty() &&
           std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  // p or p/q, digits only.
  Rational rational() {
    const Token& start = peek();
    bool negative = accept("-");
    if (!at_number()) fail(peek(), "expected a rational number" + found());
    mpz_class num(next().text);
    mpz_class den = 1;
    if (accept("/")) {
      if (!at_number()) fail(peek(), "expected a denominator" + found());
      const Token& d = next();
      den = mpz_class(d.text);
      if (den == 0) fail(d, "zero denominator");
    }
    (void)start;
    Rational r(negative ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::size_t vertex_at(Parser& p, const Quiver& q) {
  const Token& t = p.word("a vertex label");
  auto v = q.find_vertex(t.text);
  if (!v) p.fail(t, "unknown vertex '" + t.text + "'");
  return *v;
}

// a*b*c or e(v), in traversal order.
Path parse_path(Parser& p, const Quiver& q) {
  const Token& start = p.peek();
  if (p.is("e") && p.peek(1).text == "(") {
    p.next();
    p.expect("(");
    std::size_t v = vertex_at(p, q);
    p.expect(")");
    return Path::trivial(v);
  }
  std::vector<std::size_t> arrows;
  do {
    const Token& t = p.word("an arrow name");
    auto a = q.find_arrow(t.text);
    if (!a) p.fail(t, "unknown arrow '" + t.text + "'");
    arrows.push_back(*a);
  } while (p.accept("*"));
  try {
    return Path::from_arrows(q, arrows);
  } catch (const Error& e) {
    p.fail(start, std::string("arrows do not compose: ") + e.what());
  }
}

// Sum of [c *] path terms, or a bare 0.
std::vector<std::pair<Rational, Path>> parse_combination(Parser& p, const Quiver& q) {
  std::vector<std::pair<Rational, Path>> terms;
  if (p.peek().text == "0" && (p.peek(1).text == "," || p.peek(1).text == ";")) {
    p.next();
    return terms;
  }
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (p.accept("-")) sign = -1;
    else if (!first && !p.accept("+")) break;
    else if (first) p.accept("+");
    Rational c = 1;
    if (p.at_number()) {
      c = p.rational();
      p.expect("*");
    }
    terms.emplace_back(sign * c, parse_path(p, q));
    first = false;
    if (!p.is("+") && !p.is("-")) break;
  }
  return terms;
}

Quiver parse_quiver_block(Parser& p) {
  p.expect("quiver");
  p.expect("{");
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  std::vector<Arrow> arrows;
  std::set<std::string> arrow_names;
  bool have_vertices = false;
  while (!p.accept("}")) {
    const Token& key = p.word("'vertices' or 'arrows'");
    p.expect(":");
    if (key.text == "vertices") {
      if (have_vertices) p.fail(key, "vertices given twice");
      have_vertices = true;
      do {
        const Token& t = p.word("a vertex label");
        if (!seen.insert(t.text).second) p.fail(t, "duplicate vertex '" + t.text + "'");
        vertices.push_back(t.text);
      } while (p.accept(","));
    } else if (key.text == "arrows") {
      if (!have_vertices) p.fail(key, "arrows must follow the vertices");
      if (!p.is(";")) do {
          const Token& name = p.word("an arrow name");
          if (!arrow_names.insert(name.text).second) p.fail(name, "duplicate arrow '" + name.text + "'");
          p.expect(":");
          auto endpoint = [&]() {
            const Token& t = p.word("a vertex label");
            auto it = std::find(vertices.begin(), vertices.end(), t.text);
            if (it == vertices.end()) p.fail(t, "arrow " + name.text + " uses unknown vertex '" + t.text + "'");
            return static_cast<std::size_t>(it - vertices.begin());
          };
          std::size_t s = endpoint();
          p.expect("->");
          std::size_t t = endpoint();
          arrows.push_back(Arrow{name.text, s, t});
        } while (p.accept(","));
    } else {
      p.fail(key, "unknown key '" + key.text + "'");
    }
    p.expect(";");
  }
  if (!have_vertices) p.fail(p.peek(), "quiver has no vertices");
  return Quiver(std::move(vertices), std::move(arrows));
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

AlgebraText parse_algebra(const std::string& text) {
  Parser p(text);
  AlgebraText out{parse_quiver_block(p), {}};
  if (p.accept("relations")) {
    p.expect("{");
    while (!p.accept("}")) {
      const Token& key = p.word("'zero' or 'equal'");
      p.expect(":");
      if (key.text == "zero") {
        out.relations.push_back(Relation::zero(parse_path(p, out.quiver)));
      } else if (key.text == "equal") {
        Path lhs = parse_path(p, out.quiver);
        p.expect("=");
        Rational c = 1;
        if (p.accept("-")) c = -1;
        if (p.at_number()) {
          c *= p.rational();
          p.expect("*");
        }
        out.relations.push_back(Relation::equal(std::move(lhs), c, parse_path(p, out.quiver)));
      } else {
        p.fail(key, "unknown key '" + key.text + "'");
      }
      p.expect(";");
    }
  }
  if (!p.at_end()) p.fail(p.peek(), "unexpected '" + p.peek().text + "' after the algebra");
  return out;
}

std::string emit_algebra(const Quiver& q, const std::vector<Relation>& relations) {
  std::ostringstream out;
  out << "quiver {\n  vertices: ";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out << (v ? ", " : "") << q.label(v);
  out << ";\n  arrows: ";
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    out << (a ? ", " : "") << q.arrow(a).name << ": " << q.label(q.arrow(a).source) << " -> "
        << q.label(q.arrow(a).target);
  out << ";\n}\nrelations {\n";
  for (const Relation& r : relations) {
    if (r.is_monomial()) {
      out << "  zero: " << r.p.to_string(q) << ";\n";
      continue;
    }
    out << "  equal: " << r.p.to_string(q) << " = ";
    if (r.coeff != 1) out << rational_text(r.coeff) << " * ";
    out << r.q->to_string(q) << ";\n";
  }
  out << "}\n";
  return out.str();
}

Algebra build_parsed(const AlgebraText& t) { return Algebra::build(t.quiver, t.relations); }

namespace {

// Rows of a matrix: [[1, 0], [0, 1]] or [1, 2] for one row.
QMatrix parse_matrix(Parser& p, std::size_t rows, std::size_t cols, const Token& at) {
  std::vector<std::vector<Rational>> data;
  p.expect("[");
  if (p.is("[")) {
    do {
      p.expect("[");
      std::vector<Rational> row;
      if (!p.is("]")) do row.push_back(p.rational());
        while (p.accept(","));
      p.expect("]");
      data.push_back(std::move(row));
    } while (p.accept(","));
  } else if (!p.is("]")) {
    std::vector<Rational> row;
    do row.push_back(p.rational());
    while (p.accept(","));
    data.push_back(std::move(row));
  }
  p.expect("]");
  if (rows == 0 || cols == 0) {
    for (const auto& r : data)
      if (!r.empty()) p.fail(at, "matrix must be empty for a zero space");
    return QMatrix(rows, cols);
  }
  if (data.size() != rows) p.fail(at, "expected " + std::to_string(rows) + " rows, found " + std::to_string(data.size()));
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (data[r].size() != cols)
      p.fail(at, "row " + std::to_string(r + 1) + " has " + std::to_string(data[r].size()) + " entries, expected " +
                     std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = data[r][c];
  }
  return m;
}

RepModule with_check(Parser& p, const Token& at, const Algebra& a, Side side, std::vector<std::size_t> dims,
                     std::vector<QMatrix> actions) {
  try {
    return RepModule(a, side, std::move(dims), std::move(actions));
  } catch (const RelationViolation& e) {
    p.fail(at, e.what());
  } catch (const DimensionMismatch& e) {
    p.fail(at, e.what());
  }
}

RepModule parse_explicit(Parser& p, const Algebra& a, Side side, const Token& at) {
  const Quiver& own = a.presentation().quiver();
  const Presentation& acting = side == Side::left ? *a.forward() : *a.backward();
  const Quiver& q = acting.quiver();
  std::vector<std::size_t> dims;
  std::vector<std::optional<QMatrix>> actions(q.arrow_count());
  p.expect("{");
  bool have_dims = false;
  while (!p.accept("}")) {
    const Token& key = p.word("'dims' or an arrow name");
    p.expect(":");
    if (key.text == "dims") {
      do dims.push_back(static_cast<std::size_t>(p.integer("a dimension")));
      while (p.accept(","));
      if (dims.size() != own.vertex_count())
        p.fail(key, "expected " + std::to_string(own.vertex_count()) + " dimensions");
      have_dims = true;
    } else {
      if (!have_dims) p.fail(key, "dims must come first");
      auto arrow = q.find_arrow(key.text);
      if (!arrow) p.fail(key, "unknown arrow '" + key.text + "'");
      if (actions[*arrow]) p.fail(key, "arrow '" + key.text + "' given twice");
      const Arrow& ar = q.arrow(*arrow);
      actions[*arrow] = parse_matrix(p, dims[ar.target], dims[ar.source], key);
    }
    p.expect(";");
  }
  if (!have_dims) p.fail(at, "explicit module without dims");
  std::vector<QMatrix> mats;
  for (std::size_t i = 0; i < q.arrow_count(); ++i)
    mats.push_back(actions[i] ? *actions[i] : QMatrix(dims[q.arrow(i).target], dims[q.arrow(i).source]));
  return with_check(p, at, a, side, std::move(dims), std::move(mats));
}

RepModule parse_cokernel(Parser& p, const Algebra& a, Side side, const Token& at) {
  const Quiver& own = a.presentation().quiver();
  const Presentation& acting = side == Side::left ? *a.forward() : *a.backward();
  std::vector<std::size_t> generators;
  std::vector<std::pair<Token, std::vector<std::vector<std::pair<Rational, Path>>>>> relations;
  p.expect("{");
  while (!p.accept("}")) {
    const Token& key = p.word("'generators' or 'relation'");
    p.expect(":");
    if (key.text == "generators") {
      if (!generators.empty()) p.fail(key, "generators given twice");
      do generators.push_back(vertex_at(p, own));
      while (p.accept(","));
    } else if (key.text == "relation") {
      if (generators.empty()) p.fail(key, "generators must come first");
      std::vector<std::vector<std::pair<Rational, Path>>> comps;
      do comps.push_back(parse_combination(p, own));
      while (p.accept(","));
      if (comps.size() != generators.size())
        p.fail(key, "relation has " + std::to_string(comps.size()) + " components for " +
                        std::to_string(generators.size()) + " generators");
      relations.emplace_back(key, std::move(comps));
    } else {
      p.fail(key, "unknown key '" + key.text + "'");
    }
    p.expect(";");
  }
  if (generators.empty()) p.fail(at, "cokernel without generators");
  std::vector<RepModule> parts;
  for (std::size_t v : generators) parts.push_back(projective(a, v, side));
  RepModule sum = direct_sum(parts);
  const std::size_t n = own.vertex_count();
  std::vector<QMatrix> gens(n);
  for (std::size_t v = 0; v < n; ++v) gens[v] = QMatrix(sum.dim(v), 0);
  for (const auto& [key, comps] : relations) {
    std::optional<std::size_t> target;
    std::vector<std::pair<std::size_t, Rational>> entries;  // (position in sum at target, coeff)
    std::vector<std::size_t> offset(n, 0);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const std::size_t v = generators[k];
      std::vector<std::pair<Rational, Path>> acting_terms;
      for (const auto& [c, path] : comps[k]) {
        Path ap = side == Side::left ? path : path.reversed();
        if (ap.source != v)
          p.fail(key, "component " + std::to_string(k + 1) + " contains " + path.to_string(own) +
                          ", which does not belong to the projective at " + own.label(v));
        if (target && *target != ap.target) p.fail(key, "relation components end at different vertices");
        target = ap.target;
        acting_terms.emplace_back(c, ap);
      }
      if (target) {
        const auto& paths = acting.basis_between(v, *target);
        for (const auto& [idx, c] : acting.normal_form(acting_terms)) {
          auto it = std::find(paths.begin(), paths.end(), idx);
          if (it == paths.end()) throw InternalConsistency("normal form leaves the projective");
          entries.emplace_back(offset[*target] + static_cast<std::size_t>(it - paths.begin()), c);
        }
      }
      for (std::size_t w = 0; w < n; ++w) offset[w] += parts[k].dim(w);
    }
    if (!target) continue;
    QMatrix col(sum.dim(*target), 1);
    for (const auto& [pos, c] : entries) col(pos, 0) += c;
    gens[*target] = hstack(gens[*target], col);
  }
  return quotient(sum, generated_submodule(sum, gens));
}

RepModule parse_graph(Parser& p, const Algebra& a, Side side, const Token& at) {
  const Quiver& own = a.presentation().quiver();
  const Presentation& acting = side == Side::left ? *a.forward() : *a.backward();
  const Quiver& q = acting.quiver();
  std::map<std::string, std::size_t> node_index;
  std::vector<std::size_t> node_vertex;
  std::vector<GraphEdge> edges;
  p.expect("{");
  while (!p.accept("}")) {
    const Token& key = p.word("'nodes' or 'edges'");
    p.expect(":");
    if (key.text == "nodes") {
      do {
        const Token& name = p.word("a node name");
        if (node_index.count(name.text)) p.fail(name, "duplicate node '" + name.text + "'");
        p.expect("=");
        node_index[name.text] = node_vertex.size();
        node_vertex.push_back(vertex_at(p, own));
      } while (p.accept(","));
    } else if (key.text == "edges") {
      do {
        auto node = [&]() {
          const Token& t = p.word("a node name");
          auto it = node_index.find(t.text);
          if (it == node_index.end()) p.fail(t, "unknown node '" + t.text + "'");
          return it->second;
        };
        const Token& first = p.peek();
        std::size_t from = node();
        p.expect("->");
        std::size_t to = node();
        std::optional<std::size_t> arrow;
        Rational coeff = 1;
        if (p.accept("via")) {
          const Token& t = p.word("an arrow name");
          arrow = q.find_arrow(t.text);
          if (!arrow) p.fail(t, "unknown arrow '" + t.text + "'");
        }
        if (p.accept("scale")) coeff = p.rational();
        if (!arrow) {
          for (std::size_t ai : q.arrows_from(node_vertex[from]))
            if (q.arrow(ai).target == node_vertex[to]) {
              if (arrow) p.fail(first, "several arrows fit this edge; name one with 'via'");
              arrow = ai;
            }
          if (!arrow) p.fail(first, "no arrow fits this edge");
        }
        if (q.arrow(*arrow).source != node_vertex[from] || q.arrow(*arrow).target != node_vertex[to])
          p.fail(first, "arrow " + q.arrow(*arrow).name + " does not fit this edge");
        edges.push_back(GraphEdge{from, to, *arrow, coeff});
      } while (p.accept(","));
    } else {
      p.fail(key, "unknown key '" + key.text + "'");
    }
    p.expect(";");
  }
  try {
    return module_from_graph(a, side, node_vertex, edges);
  } catch (const RelationViolation& e) {
    p.fail(at, e.what());
  }
}

}  // namespace

RepModule parse_module(const std::string& text, const Algebra& a) {
  Parser p(text);
  const Quiver& own = a.presentation().quiver();
  std::vector<RepModule> parts;
  std::optional<Side> side;
  while (!p.at_end()) {
    const Token& start = p.expect("module");
    const Token& side_token = p.word("'left' or 'right'");
    Side s;
    if (side_token.text == "left") s = Side::left;
    else if (side_token.text == "right") s = Side::right;
    else p.fail(side_token, "expected 'left' or 'right' but found '" + side_token.text + "'");
    if (side && *side != s) p.fail(side_token, "all statements of a module file must use the same side");
    side = s;
    const Token& form = p.word("a module form");
    if (form.text == "simple") parts.push_back(simple(a, vertex_at(p, own), s));
    else if (form.text == "projective") parts.push_back(projective(a, vertex_at(p, own), s));
    else if (form.text == "injective") parts.push_back(injective(a, vertex_at(p, own), s));
    else if (form.text == "top") parts.push_back(semisimple_top(a, s));
    else if (form.text == "regular") parts.push_back(regular(a, s));
    else if (form.text == "cogenerator") parts.push_back(dual(regular(a, flip(s))));
    else if (form.text == "explicit") parts.push_back(parse_explicit(p, a, s, start));
    else if (form.text == "cokernel") parts.push_back(parse_cokernel(p, a, s, start));
    else if (form.text == "graph") parts.push_back(parse_graph(p, a, s, start));
    else p.fail(form, "unknown module form '" + form.text + "'");
    p.expect(";");
  }
  if (parts.empty()) throw ParseError(1, 1, "no module statement");
  return parts.size() == 1 ? parts[0] : direct_sum(parts);
}

ValuedQuiver parse_order(const std::string& text) {
  Parser p(text);
  ValuedQuiver vq;
  const Token& head = p.word("'exponents' or 'valued_quiver'");
  if (head.text == "exponents") {
    p.expect("{");
    ExponentMatrix e;
    while (!p.accept("}")) {
      std::vector<long> row;
      while (!p.is(";")) {
        row.push_back(p.integer("an exponent"));
        p.accept(",");
      }
      p.expect(";");
      e.lambda.push_back(std::move(row));
    }
    try {
      vq = valued_quiver_from_exponents(e);
    } catch (const InvalidExponents& err) {
      p.fail(head, err.what());
    }
  } else if (head.text == "valued_quiver") {
    p.expect("{");
    bool have_vertices = false;
    std::set<std::string> names;
    while (!p.accept("}")) {
      const Token& key = p.word("'vertices' or 'arrows'");
      p.expect(":");
      if (key.text == "vertices") {
        have_vertices = true;
        do {
          const Token& t = p.word("a vertex label");
          if (std::find(vq.vertices.begin(), vq.vertices.end(), t.text) != vq.vertices.end())
            p.fail(t, "duplicate vertex '" + t.text + "'");
          vq.vertices.push_back(t.text);
        } while (p.accept(","));
      } else if (key.text == "arrows") {
        if (!have_vertices) p.fail(key, "arrows must follow the vertices");
        if (!p.is(";")) do {
            auto lookup = [&](const Token& t) {
              auto it = std::find(vq.vertices.begin(), vq.vertices.end(), t.text);
              if (it == vq.vertices.end()) p.fail(t, "unknown vertex '" + t.text + "'");
              return static_cast<std::size_t>(it - vq.vertices.begin());
            };
            std::string name;
            const Token& first = p.word("an arrow");
            const Token* source_token = &first;
            if (p.accept(":")) {
              name = first.text;
              source_token = &p.word("a vertex label");
            }
            std::size_t s = lookup(*source_token);
            p.expect("->");
            std::size_t t = lookup(p.word("a vertex label"));
            p.expect("=");
            long value = p.integer("an arrow value");
            if (name.empty()) name = "a" + vq.vertices[s] + "_" + vq.vertices[t];
            if (!names.insert(name).second) p.fail(first, "duplicate arrow '" + name + "'");
            vq.arrows.push_back(ValuedArrow{name, s, t, value});
          } while (p.accept(","));
      } else {
        p.fail(key, "unknown key '" + key.text + "'");
      }
      p.expect(";");
    }
  } else {
    p.fail(head, "expected 'exponents' or 'valued_quiver' but found '" + head.text + "'");
  }
  if (!p.at_end()) p.fail(p.peek(), "unexpected '" + p.peek().text + "' after the order");
  return vq;
}

std::string emit_valued_quiver(const ValuedQuiver& vq) {
  std::ostringstream out;
  out << "valued_quiver {\n  vertices: ";
  for (std::size_t v = 0; v < vq.vertices.size(); ++v) out << (v ? ", " : "") << vq.vertices[v];
  out << ";\n  arrows: ";
  for (std::size_t i = 0; i < vq.arrows.size(); ++i) {
    const auto& a = vq.arrows[i];
    out << (i ? ", " : "") << a.name << ": " << vq.vertices[a.source] << " -> " << vq.vertices[a.target] << " = "
        << a.value;
  }
  out << ";\n}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionViolation("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace syzygy
