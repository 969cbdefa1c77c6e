#include "syzygy/presentation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "syzygy/errors.hpp"

namespace syzygy {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw PreconditionViolation("duplicate vertex label '" + v + "'");
  seen.clear();
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!seen.insert(a.name).second) throw PreconditionViolation("duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw PreconditionViolation("arrow '" + a.name + "' has an undeclared endpoint");
    out_[a.source].push_back(i);
    in_[a.target].push_back(i);
  }
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Quiver::vertex(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw PreconditionViolation("unknown vertex '" + label + "'");
  return *v;
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  auto a = find_arrow(name);
  if (!a) throw PreconditionViolation("unknown arrow '" + name + "'");
  return *a;
}

Quiver Quiver::reversed() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back(Arrow{a.name, a.target, a.source});
  return Quiver(vertices_, std::move(rev));
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path Path::from_arrows(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw PreconditionViolation("use Path::trivial for paths of length 0");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw IllFormedRelation("arrows '" + q.arrow(arrows[i]).name + "' and '" + q.arrow(arrows[i + 1]).name +
                              "' are not composable");
  Path p{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, std::move(arrows)};
  return p;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Path Path::parse(const Quiver& q, const std::string& text) {
  std::string t = trim(text);
  if (t.size() > 3 && t.rfind("e(", 0) == 0 && t.back() == ')') return trivial(q.vertex(trim(t.substr(2, t.size() - 3))));
  std::vector<std::size_t> arrows;
  std::size_t start = 0;
  while (true) {
    auto star = t.find('*', start);
    std::string name = trim(t.substr(start, star == std::string::npos ? std::string::npos : star - start));
    arrows.push_back(q.arrow_index(name));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return from_arrows(q, std::move(arrows));
}

Path Path::reversed() const {
  Path r{target, source, arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows.empty()) return "e(" + q.label(source) + ")";
  std::string s;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(arrows[i]).name;
  }
  return s;
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.length() == 0) return a.source < b.source;
  for (std::size_t i = 0; i < a.length(); ++i) {
    const std::string& x = q.arrow(a.arrows[i]).name;
    const std::string& y = q.arrow(b.arrows[i]).name;
    if (x != y) return x < y;
  }
  return false;
}

Relation Relation::reversed() const {
  Relation r = *this;
  r.p = p.reversed();
  if (q) r.q = q->reversed();
  return r;
}

namespace {

using Row = SparseEchelon::Row;

// Enumerates monomial-free paths level by level.
class PathPool {
 public:
  PathPool(const Quiver& q, std::function<bool(const std::vector<std::size_t>&)> free_suffix)
      : q_(q), free_(std::move(free_suffix)) {
    std::vector<Path> level;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) level.push_back(Path::trivial(v));
    levels_.push_back(std::move(level));
  }

  const std::vector<Path>& level(std::size_t k) {
    while (levels_.size() <= k) {
      std::vector<Path> next;
      for (const Path& p : levels_.back())
        for (std::size_t a : q_.arrows_from(p.target)) {
          Path ext = p;
          ext.arrows.push_back(a);
          ext.target = q_.arrow(a).target;
          if (free_(ext.arrows)) next.push_back(std::move(ext));
        }
      levels_.push_back(std::move(next));
    }
    return levels_[k];
  }

 private:
  const Quiver& q_;
  std::function<bool(const std::vector<std::size_t>&)> free_;
  std::deque<std::vector<Path>> levels_;
};

Path join(const Path& u, const Path& mid, const Path& w) {
  Path r{u.source, w.target, u.arrows};
  r.arrows.insert(r.arrows.end(), mid.arrows.begin(), mid.arrows.end());
  r.arrows.insert(r.arrows.end(), w.arrows.begin(), w.arrows.end());
  return r;
}

}  // namespace

bool Presentation::contains_monomial(const std::vector<std::size_t>& arrows) const {
  for (const auto& m : monomials_) {
    if (m.size() > arrows.size()) continue;
    if (std::search(arrows.begin(), arrows.end(), m.begin(), m.end()) != arrows.end()) return true;
  }
  return false;
}

std::shared_ptr<const Presentation> Presentation::build(Quiver quiver, std::vector<Relation> relations,
                                                        std::size_t length_cap) {
  if (length_cap < 2) throw PreconditionViolation("length_cap must be at least 2");
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->quiver_ = std::move(quiver);
  p->relations_ = std::move(relations);
  p->length_cap_ = length_cap;
  p->compute();
  return p;
}

void Presentation::compute() {
  const Quiver& q = quiver_;
  const std::size_t nv = q.vertex_count();
  std::size_t longest = 0;
  auto check_path = [&](const Path& path, bool allow_short) {
    if (path.length() == 0) throw IllFormedRelation("relation term is a trivial path");
    if (path.length() < 2 && !allow_short)
      throw IllFormedRelation("relation term '" + path.to_string(q) + "' has length < 2");
    for (std::size_t i = 0; i + 1 < path.length(); ++i)
      if (q.arrow(path.arrows[i]).target != q.arrow(path.arrows[i + 1]).source)
        throw IllFormedRelation("path '" + path.to_string(q) + "' is not composable");
    longest = std::max(longest, path.length());
  };
  for (const auto& r : relations_) {
    check_path(r.p, r.allow_short);
    if (r.is_monomial()) {
      monomials_.push_back(r.p.arrows);
      continue;
    }
    check_path(*r.q, r.allow_short);
    if (sgn(r.coeff) == 0) throw IllFormedRelation("binomial coefficient must be nonzero");
    if (r.p.source != r.q->source || r.p.target != r.q->target)
      throw IllFormedRelation("binomial terms '" + r.p.to_string(q) + "' and '" + r.q->to_string(q) +
                              "' are not parallel");
  }
  for (const auto& m : monomials_) longest_monomial_ = std::max(longest_monomial_, m.size());

  auto free_suffix = [this](const std::vector<std::size_t>& arrows) {
    for (std::size_t len = 1; len <= std::min(longest_monomial_, arrows.size()); ++len) {
      std::vector<std::size_t> suffix(arrows.end() - static_cast<long>(len), arrows.end());
      if (std::find(monomials_.begin(), monomials_.end(), suffix) != monomials_.end()) return false;
    }
    return true;
  };
  PathPool pool(q, free_suffix);

  std::vector<const Relation*> binomials;
  for (const auto& r : relations_)
    if (!r.is_monomial()) binomials.push_back(&r);

  // Monomial-free paths with length bounds, indexed by endpoint.
  auto paths_ending_at = [&](std::size_t v, std::size_t max_len) {
    std::vector<const Path*> out;
    for (std::size_t k = 0; k <= max_len; ++k)
      for (const Path& p : pool.level(k))
        if (p.target == v) out.push_back(&p);
    return out;
  };
  auto paths_starting_at = [&](std::size_t v, std::size_t max_len) {
    std::vector<const Path*> out;
    for (std::size_t k = 0; k <= max_len; ++k)
      for (const Path& p : pool.level(k))
        if (p.source == v) out.push_back(&p);
    return out;
  };

  // Emits u*r*w for binomials with all kept terms; `keep` decides whether a term survives.
  auto ideal_elements = [&](std::size_t max_len, bool require_fit,
                            const std::function<void(const Path&, const Path&, const Rational&)>& emit) {
    for (const Relation* r : binomials) {
      std::size_t lo = std::min(r->p.length(), r->q->length());
      std::size_t hi = std::max(r->p.length(), r->q->length());
      std::size_t need = require_fit ? hi : lo;
      if (need > max_len) continue;
      for (const Path* u : paths_ending_at(r->p.source, max_len - need))
        for (const Path* w : paths_starting_at(r->p.target, max_len - need - u->length()))
          emit(join(*u, r->p, *w), join(*u, *r->q, *w), r->coeff);
    }
  };

  // Find the least N with every path of length N in I.
  std::size_t n = 0;
  for (std::size_t cand = 1; cand <= length_cap_; ++cand) {
    const auto& level = pool.level(cand);
    if (level.empty()) {
      n = cand;
      break;
    }
    if (binomials.empty()) continue;
    const std::size_t max_len = cand + longest;
    // Column index per monomial-free path of length <= max_len, per block.
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::vector<std::size_t>, std::size_t>> columns;
    std::set<std::pair<std::size_t, std::size_t>> needed;
    for (const Path& p : level) needed.insert({p.source, p.target});
    for (std::size_t k = 0; k <= max_len; ++k)
      for (const Path& p : pool.level(k))
        if (needed.count({p.source, p.target})) {
          auto& cols = columns[{p.source, p.target}];
          cols.emplace(p.arrows, cols.size());
        }
    std::map<std::pair<std::size_t, std::size_t>, SparseEchelon> spans;
    for (auto& [key, cols] : columns) spans.emplace(key, SparseEchelon(cols.size()));
    ideal_elements(max_len, true, [&](const Path& a, const Path& b, const Rational& c) {
      auto it = columns.find({a.source, a.target});
      if (it == columns.end()) return;
      Row row;
      if (!contains_monomial(a.arrows)) row.emplace_back(it->second.at(a.arrows), Rational(1));
      if (!contains_monomial(b.arrows)) {
        std::size_t col = it->second.at(b.arrows);
        auto pos = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.first == col; });
        if (pos != row.end()) {
          pos->second -= c;
          if (sgn(pos->second) == 0) row.erase(pos);
        } else {
          row.emplace_back(col, -c);
        }
      }
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!row.empty()) spans.at({a.source, a.target}).insert(row);
    });
    bool all_zero = true;
    for (const Path& p : level) {
      Row row{{columns.at({p.source, p.target}).at(p.arrows), Rational(1)}};
      if (!spans.at({p.source, p.target}).contains(row)) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      n = cand;
      break;
    }
  }
  if (n == 0)
    throw NotNilpotent("no power J^N with N <= " + std::to_string(length_cap_) +
                       " lies in the ideal; the algebra may be infinite-dimensional");
  nilpotency_ = n;

  // Quotient of the live paths (monomial-free, length < N) by the truncated ideal elements.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> blocks;
  for (std::size_t k = 0; k < n; ++k)
    for (const Path& p : pool.level(k)) blocks[{p.source, p.target}].push_back(p);
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::vector<std::size_t>, std::size_t>> columns;
  for (auto& [key, paths] : blocks) {
    // Largest path first so that pivots fall on the largest paths.
    std::sort(paths.begin(), paths.end(), [&](const Path& a, const Path& b) { return path_less(q, b, a); });
    auto& cols = columns[key];
    for (std::size_t i = 0; i < paths.size(); ++i) cols.emplace(paths[i].arrows, i);
  }
  std::map<std::pair<std::size_t, std::size_t>, SparseEchelon> spans;
  for (auto& [key, paths] : blocks) spans.emplace(key, SparseEchelon(paths.size()));
  auto live = [&](const Path& p) { return p.length() < n && !contains_monomial(p.arrows); };
  if (n > 0)
    ideal_elements(n - 1, false, [&](const Path& a, const Path& b, const Rational& c) {
      auto key = std::make_pair(a.source, a.target);
      auto it = columns.find(key);
      if (it == columns.end()) return;
      Row row;
      if (live(a)) row.emplace_back(it->second.at(a.arrows), Rational(1));
      if (live(b)) {
        std::size_t col = it->second.at(b.arrows);
        auto pos = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.first == col; });
        if (pos != row.end()) {
          pos->second -= c;
          if (sgn(pos->second) == 0) row.erase(pos);
        } else {
          row.emplace_back(col, -c);
        }
      }
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!row.empty()) spans.at(key).insert(row);
    });

  // Basis: non-pivot paths, sorted globally.
  std::vector<Path> basis;
  for (auto& [key, paths] : blocks) {
    const auto& span = spans.at(key);
    std::vector<char> pivot(paths.size(), 0);
    for (auto c : span.pivots()) pivot[c] = 1;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (!pivot[i]) basis.push_back(paths[i]);
  }
  std::sort(basis.begin(), basis.end(), [&](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.length() == 0) return a.source < b.source;
    return path_less(q, a, b);
  });
  basis_ = basis;
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index.emplace(basis_[i], i);
  between_.assign(nv * nv, {});
  trivial_.assign(nv, 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    between_[basis_[i].source * nv + basis_[i].target].push_back(i);
    if (basis_[i].length() == 0) trivial_[basis_[i].source] = i;
  }

  for (auto& [key, paths] : blocks) {
    const auto& span = spans.at(key);
    std::vector<long> row_of(paths.size(), -1);
    for (std::size_t r = 0; r < span.pivots().size(); ++r) row_of[span.pivots()[r]] = static_cast<long>(r);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      Element nf;
      if (row_of[i] < 0) {
        nf.emplace_back(index.at(paths[i]), Rational(1));
      } else {
        for (const auto& [c, v] : span.rows()[static_cast<std::size_t>(row_of[i])])
          if (c != i) nf.emplace_back(index.at(paths[c]), -v);
        std::sort(nf.begin(), nf.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      }
      live_.emplace(paths[i], std::move(nf));
    }
  }

  const std::size_t d = basis_.size();
  products_.assign(d * d, {});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (basis_[a].target != basis_[b].source) continue;
      Path joined{basis_[a].source, basis_[b].target, basis_[a].arrows};
      joined.arrows.insert(joined.arrows.end(), basis_[b].arrows.begin(), basis_[b].arrows.end());
      products_[a * d + b] = normal_form(joined);
    }
}

Element Presentation::normal_form(const Path& path) const {
  if (path.length() > length_cap_) throw PathTooLong("path of length " + std::to_string(path.length()) +
                                                     " exceeds the length cap " + std::to_string(length_cap_));
  if (path.length() >= nilpotency_ || contains_monomial(path.arrows)) return {};
  auto it = live_.find(path);
  if (it == live_.end()) throw InternalConsistency("missing normal form for a live path");
  return it->second;
}

Element Presentation::normal_form(const std::vector<std::pair<Rational, Path>>& combo) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [c, p] : combo)
    for (const auto& [i, v] : normal_form(p)) acc[i] += c * v;
  Element out;
  for (auto& [i, v] : acc)
    if (sgn(v) != 0) out.emplace_back(i, v);
  return out;
}

const Element& Presentation::concat(std::size_t a, std::size_t b) const {
  const std::size_t d = basis_.size();
  return products_[a * d + b];
}

Element Presentation::concat(const Element& x, const Element& y) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [a, u] : x)
    for (const auto& [b, v] : y)
      for (const auto& [c, w] : concat(a, b)) acc[c] += u * v * w;
  Element out;
  for (auto& [i, v] : acc)
    if (sgn(v) != 0) out.emplace_back(i, v);
  return out;
}

std::shared_ptr<const Presentation> Presentation::opposite() const {
  std::vector<Relation> rev;
  rev.reserve(relations_.size());
  for (const auto& r : relations_) rev.push_back(r.reversed());
  return build(quiver_.reversed(), std::move(rev), length_cap_);
}

Algebra::Algebra(PresentationPtr presentation)
    : forward_(std::move(presentation)), backward_(forward_->opposite()) {}

Algebra Algebra::build(Quiver quiver, std::vector<Relation> relations, std::size_t length_cap) {
  return Algebra(Presentation::build(std::move(quiver), std::move(relations), length_cap));
}

Algebra Algebra::opposite() const {
  Algebra a;
  a.forward_ = backward_;
  a.backward_ = forward_;
  return a;
}

}  // namespace syzygy
