#include "syzygy/orders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "syzygy/errors.hpp"

namespace syzygy {

void ExponentMatrix::validate() const {
  const std::size_t n = size();
  if (n == 0) throw InvalidExponents("empty exponent matrix");
  for (const auto& row : lambda)
    if (row.size() != n) throw InvalidExponents("exponent matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i][i] != 0) throw InvalidExponents("diagonal entry " + std::to_string(i + 1) + " is not 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (lambda[i][j] < 0) throw InvalidExponents("negative exponent");
      if (i != j && lambda[i][j] + lambda[j][i] < 1)
        throw InvalidExponents("entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") and transpose sum to 0");
      for (std::size_t k = 0; k < n; ++k)
        if (lambda[i][j] + lambda[j][k] < lambda[i][k])
          throw InvalidExponents("not closed under multiplication at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
    }
  }
}

Quiver ValuedQuiver::quiver() const {
  std::vector<Arrow> arrows_plain;
  for (const auto& a : arrows) arrows_plain.push_back(Arrow{a.name, a.source, a.target});
  return Quiver(vertices, std::move(arrows_plain));
}

long ValuedQuiver::path_value(const Path& p) const {
  long v = 0;
  for (std::size_t a : p.arrows) v += arrows.at(a).value;
  return v;
}

ValuedQuiver valued_quiver_from_exponents(const ExponentMatrix& e) {
  e.validate();
  const std::size_t n = e.size();
  // Exponents of the radical: μ_ii = 1.
  auto mu = [&](std::size_t l, std::size_t i) { return l == i ? 1L : e(l, i); };
  ValuedQuiver vq;
  for (std::size_t i = 0; i < n; ++i) vq.vertices.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long through = mu(j, 0) + mu(0, i);
      for (std::size_t m = 1; m < n; ++m) through = std::min(through, mu(j, m) + mu(m, i));
      if (mu(j, i) >= through) continue;
      vq.arrows.push_back(
          ValuedArrow{"a" + std::to_string(i + 1) + "_" + std::to_string(j + 1), i, j, i == j ? 1L : e(j, i)});
    }
  return vq;
}

std::vector<std::vector<std::optional<long>>> min_path_values(const ValuedQuiver& vq) {
  const std::size_t n = vq.vertices.size();
  std::vector<std::vector<std::optional<long>>> m(n, std::vector<std::optional<long>>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 0;
  for (const auto& a : vq.arrows) {
    if (a.value < 0) throw NonpositiveCycle("arrow " + a.name + " has a negative value");
    if (a.source == a.target) {
      if (a.value == 0) throw NonpositiveCycle("loop " + a.name + " has value 0");
      continue;
    }
    if (!m[a.source][a.target] || *m[a.source][a.target] > a.value) m[a.source][a.target] = a.value;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][k] && m[k][j] && (!m[i][j] || *m[i][k] + *m[k][j] < *m[i][j])) m[i][j] = *m[i][k] + *m[k][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] && m[j][i] && *m[i][j] + *m[j][i] == 0)
        throw NonpositiveCycle("cycle through " + vq.vertices[i] + " and " + vq.vertices[j] + " has value 0");
  return m;
}

namespace {

bool only_loops_on_one_vertex(const ValuedQuiver& vq) {
  return vq.vertices.size() == 1 &&
         std::all_of(vq.arrows.begin(), vq.arrows.end(), [](const ValuedArrow& a) { return a.source == a.target; });
}

// Paths of minimal value; they never repeat a vertex since every cycle has positive value.
std::vector<Path> tight_paths(const ValuedQuiver& vq, const Quiver& q,
                              const std::vector<std::vector<std::optional<long>>>& m) {
  std::vector<Path> out;
  std::function<void(Path&, long)> extend = [&](Path& p, long value) {
    out.push_back(p);
    for (std::size_t a : q.arrows_from(p.target)) {
      const auto& t = m[p.source][q.arrow(a).target];
      if (!t || value + vq.arrows[a].value != *t) continue;
      Path next = p;
      next.arrows.push_back(a);
      next.target = q.arrow(a).target;
      extend(next, value + vq.arrows[a].value);
    }
  };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Path p = Path::trivial(v);
    extend(p, 0);
  }
  return out;
}

}  // namespace

std::vector<Relation> order_relations(const ValuedQuiver& vq) {
  if (only_loops_on_one_vertex(vq)) return {};
  for (const auto& a : vq.arrows)
    if (a.source == a.target) throw LoopsPresent("arrow " + a.name + " is a loop");
  const Quiver q = vq.quiver();
  const auto m = min_path_values(vq);
  std::vector<Relation> rels;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> parallel;
  for (const Path& p : tight_paths(vq, q, m)) {
    const long value = vq.path_value(p);
    for (std::size_t a : q.arrows_from(p.target)) {
      if (value + vq.arrows[a].value == *m[p.source][q.arrow(a).target]) continue;
      Path z = p;
      z.arrows.push_back(a);
      z.target = q.arrow(a).target;
      if (z.length() < 2) throw IllFormedRelation("arrow " + q.arrow(a).name + " is not of minimal value");
      rels.push_back(Relation::zero(std::move(z)));
    }
    if (p.length() > 0) parallel[{p.source, p.target}].push_back(p);
  }
  for (auto& [ends, paths] : parallel) {
    if (paths.size() < 2) continue;
    std::sort(paths.begin(), paths.end(), [&](const Path& x, const Path& y) { return path_less(q, x, y); });
    for (std::size_t k = 1; k < paths.size(); ++k) {
      if (paths[0].length() < 2 || paths[k].length() < 2)
        throw IllFormedRelation("parallel minimal paths " + paths[0].to_string(q) + " and " + paths[k].to_string(q) +
                                " would identify an arrow with another path");
      rels.push_back(Relation::equal(paths[k], 1, paths[0]));
    }
  }
  return rels;
}

Algebra presentation_from_valued_quiver(const ValuedQuiver& vq) {
  if (only_loops_on_one_vertex(vq)) return Algebra::build(Quiver(vq.vertices, {}), {});
  std::vector<Relation> rels = order_relations(vq);
  // Minimal paths are simple, so J^n = 0.
  return Algebra::build(vq.quiver(), std::move(rels), std::max<std::size_t>(vq.vertices.size() + 1, 3));
}

bool has_multiplicity_one(const Algebra& a) {
  for (Side side : {Side::left, Side::right})
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      const auto dims = projective(a, v, side).dims();
      if (std::any_of(dims.begin(), dims.end(), [](std::size_t d) { return d != 1; })) return false;
    }
  return true;
}

std::size_t check_value_relations(const ValuedQuiver& vq, const Algebra& a, std::size_t max_length) {
  const Presentation& p = a.presentation();
  const Quiver& q = p.quiver();
  if (only_loops_on_one_vertex(vq)) return 0;
  const auto m = min_path_values(vq);
  std::map<std::pair<std::size_t, std::size_t>, Element> tight_form;
  std::size_t checked = 0;
  std::function<void(Path&)> walk = [&](Path& path) {
    ++checked;
    const long value = vq.path_value(path);
    Element nf = p.normal_form(path);
    const long best = *m[path.source][path.target];
    if (value > best) {
      if (!nf.empty())
        throw InternalConsistency("path " + path.to_string(q) + " of non-minimal value is nonzero");
    } else {
      if (nf.empty()) throw InternalConsistency("path " + path.to_string(q) + " of minimal value is zero");
      auto [it, fresh] = tight_form.emplace(std::make_pair(path.source, path.target), nf);
      if (!fresh && it->second != nf)
        throw InternalConsistency("parallel minimal paths disagree at " + path.to_string(q));
    }
    if (path.length() == max_length) return;
    for (std::size_t arrow : q.arrows_from(path.target)) {
      Path next = path;
      next.arrows.push_back(arrow);
      next.target = q.arrow(arrow).target;
      walk(next);
    }
  };
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Path start = Path::trivial(v);
    walk(start);
  }
  return checked;
}

std::string DimRange::describe() const {
  if (exact()) return std::to_string(lower);
  if (upper) return "between " + std::to_string(lower) + " and " + std::to_string(*upper);
  return "at least " + std::to_string(lower);
}

namespace {

DimRange range_of(const FindimReport& r) {
  DimRange d;
  d.lower = r.lower;
  if (r.upper) d.upper = r.upper->value;
  return d;
}

DimRange shifted(const DimRange& d) {
  DimRange s;
  s.lower = d.lower + 1;
  if (d.upper) s.upper = *d.upper + 1;
  return s;
}

}  // namespace

OrderReport order_report(const ValuedQuiver& vq, std::size_t budget, std::optional<std::size_t> asserted_gldim) {
  OrderReport r;
  r.quiver = vq;
  r.algebra = presentation_from_valued_quiver(vq);
  r.budget = budget;
  if (!has_multiplicity_one(r.algebra))
    throw InternalConsistency("some simple does not occur exactly once in an indecomposable projective");
  r.workspace = std::make_shared<Workspace>(r.algebra);
  Workspace& ws = *r.workspace;
  r.left = findim_bounds(ws, Side::left, budget);
  r.right = findim_bounds(ws, Side::right, budget);
  r.idim = InjectiveDims{r.left.idim, r.right.idim};
  r.lambda_left = range_of(r.left);
  r.lambda_right = range_of(r.right);
  if (r.idim.left.kind == DimResult::Kind::finite && r.idim.right.kind == DimResult::Kind::finite) {
    if (r.idim.left.value != r.idim.right.value)
      throw InternalConsistency("finite injective dimensions of Λ differ on the two sides");
    const std::size_t g = r.idim.left.value;
    for (const DimRange* d : {&r.lambda_left, &r.lambda_right})
      if (d->lower > g || (d->upper && *d->upper < g))
        throw InternalConsistency("injective dimension outside the finitistic bounds");
    r.gorenstein_value = g;
    r.lambda_left = DimRange{g, g};
    r.lambda_right = DimRange{g, g};
  }
  r.order_left = shifted(r.lambda_left);
  r.order_right = shifted(r.lambda_right);

  if (asserted_gldim) {
    const std::size_t d = *asserted_gldim;
    r.asserted_gldim = d;
    if (d == 0) {
      r.assertion_conflicts.push_back("global dimension of an order is at least 1");
    } else {
      r.global_repetition = d - 1;
      for (const DimRange* fin : {&r.lambda_left, &r.lambda_right})
        if (fin->lower > d - 1 || (fin->upper && *fin->upper < d - 1))
          r.assertion_conflicts.push_back("finitistic dimension " + fin->describe() + " differs from " +
                                          std::to_string(d - 1));
      for (Side side : {Side::left, Side::right})
        for (std::size_t v = 0; v < r.algebra.vertex_count(); ++v) {
          SyzygyCatalog c = build_catalog(ws.engine(side), simple(r.algebra, v, side), budget);
          RepetitionIndex rep = repetition_index(c);
          if (rep.kind == RepetitionIndex::Kind::finite && rep.value > d - 1)
            r.assertion_conflicts.push_back(std::string(to_string(side)) + " simple " +
                                            r.algebra.presentation().quiver().label(v) + " has repetition index " +
                                            std::to_string(rep.value));
        }
    }
  }
  return r;
}

namespace {

// Ω^{k} multiset from a trace, empty past its end.
const Multiplicities& degree_or_empty(const ResolutionTrace& t, std::size_t k) {
  static const Multiplicities empty;
  return k < t.degrees.size() ? t.degrees[k].summands : empty;
}

}  // namespace

GldimCertificate gldim_certificate(const OrderReport& report, const std::vector<NamedModule>& probes,
                                   std::size_t budget) {
  GldimCertificate cert;
  Workspace fresh(report.algebra);
  Workspace& ws = report.workspace ? *report.workspace : fresh;
  for (const auto& [name, module] : probes) {
    if (!module.algebra().same_as(report.algebra))
      throw PreconditionViolation("probe " + name + " is not a module over the report's algebra");
    if (module.is_zero()) throw PreconditionViolation("probe " + name + " is zero");
    const DimRange& fin = module.side() == Side::left ? report.order_left : report.order_right;
    if (!fin.upper) {
      cert.checks.push_back(name + ": no finitistic bound for O on this side");
      continue;
    }
    const std::size_t u = *fin.upper;
    if (u + 1 > budget) {
      cert.checks.push_back(name + ": budget below the resolution length " + std::to_string(u + 1));
      continue;
    }
    cert.fin_dim_bound = std::max(cert.fin_dim_bound, u);
    SyzygyEngine& engine = ws.engine(module.side());
    ResolutionTrace trace = resolve(engine, module, u + 1);
    bool some_holds = false;
    for (std::size_t m = 1; m <= u; ++m) {
      const Multiplicities& before = degree_or_empty(trace, m - 1);
      const Multiplicities& after = degree_or_empty(trace, m + 1);
      std::string failure;
      for (const auto& [id, k] : after) {
        auto it = before.find(id);
        const mpz_class have = it == before.end() ? mpz_class(0) : it->second;
        if (k > have) failure = "a summand of degree " + std::to_string(m + 1) + " is missing in degree " +
                                std::to_string(m - 1);
      }
      if (failure.empty())
        for (const auto& [id, k] : before) {
          if (engine.is_projective(id)) continue;
          auto it = after.find(id);
          const mpz_class have = it == after.end() ? mpz_class(0) : it->second;
          if (have != k) failure = "the difference has a non-projective summand";
        }
      cert.checks.push_back(name + " m=" + std::to_string(m) + ": " + (failure.empty() ? "holds" : failure));
      if (failure.empty()) some_holds = true;
    }
    if (!some_holds && cert.kind == GldimCertificate::Kind::finite_consistent) {
      cert.kind = GldimCertificate::Kind::infinite_certified;
      cert.witness = name;
    }
  }
  return cert;
}

}  // namespace syzygy
