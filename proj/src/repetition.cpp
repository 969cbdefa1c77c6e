#include "syzygy/repetition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "syzygy/errors.hpp"

namespace syzygy {

std::string Contingency::describe() const {
  switch (kind) {
    case Kind::absent:
      return "-1";
    case Kind::finite:
      return std::to_string(value);
    case Kind::infinite:
      return "infinite";
    case Kind::open:
      break;
  }
  return "open";
}

std::optional<std::size_t> SyzygyCatalog::index_of(ClassId id) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].id == id) return i;
  return std::nullopt;
}

std::size_t SyzygyCatalog::nonprojective_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const CatalogClass& c) { return !c.projective; }));
}

std::vector<std::size_t> SyzygyCatalog::presence(std::size_t k) const {
  if (k < degrees.size()) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees[k].size(); ++i)
      if (degrees[k][i] != 0) out.push_back(i);
    return out;
  }
  if (!closed) throw CatalogOpen("presence beyond the budget of an open catalog");
  std::set<std::size_t> current;
  for (std::size_t i : presence(degrees.size() - 1)) current.insert(i);
  for (std::size_t d = degrees.size() - 1; d < k; ++d) {
    std::set<std::size_t> next;
    for (std::size_t i : current)
      for (const auto& [j, mult] : omega[i]) next.insert(j);
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

namespace {

// Contingencies from the known edges. Infinite needs a cycle reaching the class; finite needs a
// closed catalog.
std::vector<Contingency> compute_contingency(const SyzygyCatalog& c) {
  const std::size_t s = c.classes.size();
  std::vector<std::vector<std::size_t>> succ(s);
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& [j, mult] : c.omega[i]) succ[i].push_back(j);

  // Shortest walk from -> to of positive length, as a vertex list; empty when none.
  auto walk = [&](std::size_t from, std::size_t to, bool allow_empty) {
    std::vector<std::size_t> parent(s, s);
    std::vector<bool> seen(s, false);
    std::vector<std::size_t> queue;
    if (allow_empty && from == to) return std::vector<std::size_t>{from};
    for (std::size_t n : succ[from])
      if (!seen[n]) {
        seen[n] = true;
        parent[n] = from;
        queue.push_back(n);
      }
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (std::size_t n : succ[queue[qi]])
        if (!seen[n]) {
          seen[n] = true;
          parent[n] = queue[qi];
          queue.push_back(n);
        }
    if (!seen[to]) return std::vector<std::size_t>{};
    std::vector<std::size_t> path{to};
    std::size_t cur = parent[to];
    while (cur != from) {
      path.push_back(cur);
      cur = parent[cur];
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::vector<Contingency> out(s);
  std::vector<bool> infinite(s, false);
  for (std::size_t cyc = 0; cyc < s; ++cyc) {
    std::vector<std::size_t> loop = walk(cyc, cyc, false);
    if (loop.empty()) continue;
    for (std::size_t a = 0; a < s; ++a) {
      if (infinite[a]) continue;
      std::vector<std::size_t> tail = walk(cyc, a, true);
      if (tail.empty()) continue;
      Contingency& r = out[a];
      r.kind = Contingency::Kind::infinite;
      r.cycle_start = 0;
      r.certificate = loop;
      r.cycle_end = loop.size() - 1;
      r.certificate.insert(r.certificate.end(), tail.begin() + 1, tail.end());
      infinite[a] = true;
    }
  }
  if (!c.closed) return out;

  std::vector<std::vector<std::size_t>> pred(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j : succ[i]) pred[j].push_back(i);
  std::vector<long> longest(s, -2);
  std::function<long(std::size_t)> lw = [&](std::size_t a) -> long {
    if (longest[a] != -2) return longest[a];
    long best = c.degrees[0][a] != 0 ? 0 : -1;
    for (std::size_t p : pred[a]) {
      long v = lw(p);
      if (v >= 0) best = std::max(best, v + 1);
    }
    return longest[a] = best;
  };
  for (std::size_t a = 0; a < s; ++a) {
    if (infinite[a]) continue;
    long v = lw(a);
    if (v < 0) throw InternalConsistency("catalog class unreachable from the root");
    out[a].kind = Contingency::Kind::finite;
    out[a].value = static_cast<std::size_t>(v);
  }
  return out;
}

std::vector<mpz_class> step(const SyzygyCatalog& c, const std::vector<mpz_class>& current) {
  std::vector<mpz_class> next(c.classes.size(), 0);
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (current[i] == 0 || c.classes[i].projective) continue;
    if (!c.classes[i].explored) throw InternalConsistency("stepping through an unexplored class");
    for (const auto& [j, mult] : c.omega[i]) next[j] += current[i] * static_cast<unsigned long>(mult);
  }
  return next;
}

}  // namespace

SyzygyCatalog build_catalog(SyzygyEngine& engine, const RepModule& t, std::size_t budget) {
  if (budget < 1) throw PreconditionViolation("catalog budget must be at least 1");
  if (t.side() != engine.side() || !t.algebra().same_as(engine.algebra()))
    throw PreconditionViolation("catalog root does not belong to the engine");
  SyzygyCatalog c;
  c.side = t.side();
  c.budget = budget;
  c.root = t;

  std::map<ClassId, std::size_t> index;
  auto add_level = [&](std::vector<ClassId> fresh, std::size_t degree) {
    std::stable_sort(fresh.begin(), fresh.end(), [&](ClassId x, ClassId y) {
      return engine.registry().info(x).dims > engine.registry().info(y).dims;
    });
    for (ClassId id : fresh) {
      const auto& info = engine.registry().info(id);
      index[id] = c.classes.size();
      c.classes.push_back(
          CatalogClass{id, info.representative, info.dims, degree, degree, info.projective, false});
      c.omega.emplace_back();
    }
  };

  ClassMultiset root = engine.decompose(t);
  std::vector<ClassId> level;
  for (const auto& [id, k] : root) level.push_back(id);
  add_level(level, 0);
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < c.classes.size(); ++i) frontier.push_back(i);
  for (std::size_t degree = 0; degree < budget && !frontier.empty(); ++degree) {
    std::vector<ClassId> fresh;
    for (std::size_t i : frontier) {
      if (c.classes[i].projective) continue;
      for (const auto& [child, k] : engine.omega(c.classes[i].id))
        if (!index.count(child) && std::find(fresh.begin(), fresh.end(), child) == fresh.end())
          fresh.push_back(child);
    }
    std::size_t before = c.classes.size();
    add_level(fresh, degree + 1);
    for (std::size_t i : frontier) {
      if (c.classes[i].projective) continue;
      for (const auto& [child, k] : engine.omega(c.classes[i].id)) c.omega[i].emplace_back(index.at(child), k);
      c.classes[i].explored = true;
    }
    frontier.clear();
    for (std::size_t i = before; i < c.classes.size(); ++i) frontier.push_back(i);
  }
  c.closed = std::all_of(c.classes.begin(), c.classes.end(),
                         [](const CatalogClass& k) { return k.projective || k.explored; });
  for (const auto& k : c.classes) c.closure_degree = std::max(c.closure_degree, k.first_degree);
  if (!c.closed) c.closure_degree = 0;

  std::vector<mpz_class> current(c.classes.size(), 0);
  for (const auto& [id, k] : root) current[index.at(id)] = static_cast<unsigned long>(k);
  c.degrees.push_back(current);
  for (std::size_t d = 1; d <= budget; ++d) {
    current = step(c, current);
    c.degrees.push_back(current);
  }
  for (std::size_t d = 0; d < c.degrees.size(); ++d)
    for (std::size_t i = 0; i < c.classes.size(); ++i)
      if (c.degrees[d][i] != 0) c.classes[i].last_seen = d;
  c.contingency = compute_contingency(c);
  return c;
}

CountResult syzygy_type(const SyzygyCatalog& c) { return {c.closed, c.classes.size()}; }

std::string RepetitionIndex::describe() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::infinite:
      return "infinite";
    case Kind::open:
      break;
  }
  return upper_bound ? "open (at most " + std::to_string(*upper_bound) + ")" : "open";
}

RepetitionIndex repetition_index(const SyzygyCatalog& c) {
  auto repetitive_at = [&](std::size_t k) {
    for (std::size_t i : c.presence(k))
      if (!c.classes[i].projective && c.contingency[i].kind != Contingency::Kind::infinite) return false;
    return true;
  };
  RepetitionIndex r;
  if (c.closed) {
    // Past the largest finite contingency only recurrent classes remain.
    std::size_t horizon = 0;
    for (const auto& k : c.contingency)
      if (k.kind == Contingency::Kind::finite) horizon = std::max(horizon, k.value + 1);
    for (std::size_t k = 0; k <= horizon; ++k)
      if (repetitive_at(k)) {
        r.kind = RepetitionIndex::Kind::finite;
        r.value = k;
        return r;
      }
    throw InternalConsistency("closed catalog without a repetitive degree");
  }
  for (std::size_t k = 0; k < c.degrees.size(); ++k)
    if (repetitive_at(k)) {
      if (k == 0) {
        r.kind = RepetitionIndex::Kind::finite;
        r.value = 0;
      } else {
        r.upper_bound = k;
      }
      return r;
    }
  return r;
}

Contingency contingency(const SyzygyCatalog& c, ClassId id) {
  auto i = c.index_of(id);
  if (i) return c.contingency[*i];
  Contingency r;
  r.kind = c.closed ? Contingency::Kind::absent : Contingency::Kind::open;
  return r;
}

std::size_t stabilization_index(const QMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionMismatch("stabilization_index needs a square matrix");
  QMatrix current = QMatrix::identity(b.rows());
  for (std::size_t d = 0;; ++d) {
    QMatrix next = current * b;
    if (rowspace_contains(current, next)) return d;
    current = std::move(next);
  }
}

BSystem build_bsystem(const SyzygyCatalog& c) {
  if (!c.closed) throw CatalogOpen("B-matrix needs a closed catalog");
  std::vector<bool> keep(c.classes.size(), false);
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.classes[i].projective) continue;
    keep[i] = true;
    for (const auto& [j, mult] : c.omega[i]) keep[j] = true;
  }
  BSystem b;
  b.side = c.side;
  std::map<std::size_t, std::size_t> row;
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    if (keep[i]) {
      row[i] = b.catalog_index.size();
      b.catalog_index.push_back(i);
      b.classes.push_back(c.classes[i].representative);
      b.p.push_back(top_dims(c.classes[i].representative));
    }
  b.b = QMatrix(b.size(), b.size());
  for (std::size_t r = 0; r < b.size(); ++r)
    for (const auto& [j, mult] : c.omega[b.catalog_index[r]]) b.b(r, row.at(j)) += static_cast<long>(mult);
  b.stabilization = stabilization_index(b.b);
  return b;
}

std::size_t stabilization_bound(const BSystem& b) { return b.stabilization; }

namespace {

// Tensor and Tor_1 of a module on the catalog side with one on the other side.
std::size_t tensor_either(const RepModule& a, const RepModule& m) {
  return a.side() == Side::right ? tensor_dim(a, m) : tensor_dim(m, a);
}

std::size_t tor1_either(const RepModule& a, const RepModule& m) {
  return a.side() == Side::right ? tor1_dim(a, m) : tor1_dim(m, a);
}

}  // namespace

std::vector<std::size_t> tau_vector(const BSystem& b, const RepModule& m) {
  if (m.side() == b.side) throw PreconditionViolation("tau_vector: module must be on the other side");
  if (b.size() > 0 && !b.classes[0].algebra().same_as(m.algebra()))
    throw PreconditionViolation("tau_vector: module over a different algebra");
  std::vector<long> tensor(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) tensor[i] = static_cast<long>(tensor_either(b.classes[i], m));
  std::vector<std::size_t> tau(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    long t = tensor[i];
    for (std::size_t j = 0; j < b.size(); ++j) t += b.b(i, j).get_num().get_si() * tensor[j];
    for (std::size_t l = 0; l < b.p[i].size(); ++l) t -= static_cast<long>(b.p[i][l] * m.dim(l));
    const std::size_t direct = tor1_either(b.classes[i], m);
    if (t < 0 || static_cast<std::size_t>(t) != direct)
      throw InternalConsistency("tau entry " + std::to_string(i) + ": formula gives " + std::to_string(t) +
                                ", direct Tor_1 gives " + std::to_string(direct));
    tau[i] = direct;
  }
  return tau;
}

BDecision pdim_via_b(const BSystem& b, const RepModule& m, bool t_is_lambda_mod_j) {
  BDecision r;
  std::vector<mpz_class> v;
  for (std::size_t x : tau_vector(b, m)) v.push_back(static_cast<unsigned long>(x));
  auto is_zero = [](const std::vector<mpz_class>& x) {
    return std::all_of(x.begin(), x.end(), [](const mpz_class& e) { return e == 0; });
  };
  r.iterates.push_back(v);
  for (std::size_t k = 0; k < b.stabilization && !is_zero(v); ++k) {
    std::vector<mpz_class> next(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b.b(i, j) != 0) next[i] += b.b(i, j).get_num() * v[j];
    v = std::move(next);
    r.iterates.push_back(v);
  }
  if (!is_zero(v)) {
    r.kind = BDecision::Kind::infinite;
    return r;
  }
  r.value = r.iterates.size() - 1;
  r.kind = t_is_lambda_mod_j ? BDecision::Kind::finite : BDecision::Kind::bound;
  return r;
}

bool contains_top_of_algebra(const RepModule& t) {
  auto soc = socle_dims(t);
  return std::all_of(soc.begin(), soc.end(), [](std::size_t d) { return d > 0; });
}

std::size_t pdim_via_contingency(const SyzygyCatalog& c, const RepModule& m) {
  if (!c.closed) throw CatalogOpen("contingency formula needs a closed catalog");
  if (m.side() == c.side) throw PreconditionViolation("module must be on the side opposite to the catalog");
  if (!contains_top_of_algebra(c.root)) throw PreconditionViolation("catalog root does not contain Λ/J");
  long mu = -1;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.classes[i].projective) continue;
    if (tor1_either(c.classes[i].representative, m) == 0) continue;
    const Contingency& k = c.contingency[i];
    if (k.kind != Contingency::Kind::finite)
      throw PreconditionViolation("module has infinite projective dimension");
    mu = std::max(mu, static_cast<long>(k.value));
  }
  return static_cast<std::size_t>(mu + 1);
}

std::vector<NamedModule> standard_probes(const Algebra& a, Side side) {
  std::vector<NamedModule> out;
  const Presentation& p = side == Side::left ? *a.forward() : *a.backward();
  const Quiver& q = p.quiver();
  // Names use the algebra's own vertex and arrow labels.
  const Quiver& own = a.presentation().quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.emplace_back("S" + own.label(v), simple(a, v, side));
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out.emplace_back("E" + own.label(v), injective(a, v, side));
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    RepModule pv = projective(a, v, side);
    const auto& loops = p.basis_between(v, v);
    const std::size_t gen =
        static_cast<std::size_t>(std::find(loops.begin(), loops.end(), p.trivial(v)) - loops.begin());
    QMatrix g(pv.dim(v), 1);
    g(gen, 0) = 1;
    auto probe = [&](std::size_t target, const QMatrix& x, const std::string& name) {
      std::vector<QMatrix> gens(pv.vertex_count());
      for (std::size_t u = 0; u < pv.vertex_count(); ++u) gens[u] = QMatrix(pv.dim(u), 0);
      gens[target] = x;
      out.emplace_back("P" + own.label(v) + "/(" + name + ")", quotient(pv, generated_submodule(pv, gens)));
    };
    const auto& from = q.arrows_from(v);
    for (std::size_t i = 0; i < from.size(); ++i) {
      const Arrow& ai = q.arrow(from[i]);
      QMatrix xi = pv.action(from[i]) * g;
      probe(ai.target, xi, ai.name);
      for (std::size_t j = i + 1; j < from.size(); ++j)
        if (q.arrow(from[j]).target == ai.target)
          probe(ai.target, xi + pv.action(from[j]) * g, ai.name + "+" + q.arrow(from[j]).name);
    }
  }
  return out;
}

FindimReport findim_bounds(Workspace& ws, Side side, std::size_t budget, const std::vector<NamedModule>& extra_probes) {
  FindimReport r;
  r.side = side;
  r.budget = budget;
  const Side other = flip(side);
  SyzygyEngine& cat_engine = ws.engine(other);
  SyzygyEngine& probe_engine = ws.engine(side);

  struct Root {
    std::string name, certificate;
    RepModule module;
  };
  std::vector<Root> roots{{"cogenerator", "dual of the regular module", dual(regular(ws.algebra, side))}};
  RepModule reg = regular(ws.algebra, other);
  if (contains_top_of_algebra(reg)) roots.push_back({"regular", "socle test", reg});
  const Root top{"top", "semisimple top", semisimple_top(ws.algebra, other)};

  auto offer = [&](std::size_t value, std::string certificate) {
    r.upper_candidates.push_back({value, certificate});
    if (!r.upper || value < r.upper->value) r.upper = CertifiedBound{value, std::move(certificate)};
  };

  auto explore = [&](const Root& root, std::size_t root_budget) {
    TestModuleReport t;
    t.name = root.name;
    t.certificate = root.certificate;
    t.budget = root_budget;
    t.embeds = contains_top_of_algebra(root.module);
    SyzygyCatalog c = build_catalog(cat_engine, root.module, root_budget);
    t.classes = c.classes.size();
    t.closed = c.closed;
    t.type = syzygy_type(c);
    t.rep = repetition_index(c);
    if (t.embeds) {
      if (t.rep.kind == RepetitionIndex::Kind::finite) offer(t.rep.value, "repetition index of " + root.name);
      else if (t.rep.upper_bound) offer(*t.rep.upper_bound, "repetition bound of " + root.name);
    }
    if (c.closed && t.embeds) {
      offer(t.type.value, "syzygy type of " + root.name);
      long best = -1;
      for (std::size_t i = 0; i < c.classes.size(); ++i)
        if (!c.classes[i].projective && c.contingency[i].kind == Contingency::Kind::finite)
          best = std::max(best, static_cast<long>(c.contingency[i].value));
      t.contingency_bound = static_cast<std::size_t>(best + 1);
      offer(*t.contingency_bound, "finite contingencies of " + root.name);
      for (std::size_t m = 0; m <= c.closure_degree; ++m) {
        std::set<std::size_t> reach;
        std::vector<std::size_t> stack = c.presence(m);
        while (!stack.empty()) {
          std::size_t i = stack.back();
          stack.pop_back();
          if (!reach.insert(i).second) continue;
          for (const auto& [j, mult] : c.omega[i]) stack.push_back(j);
        }
        std::size_t bound = reach.size() + m;
        if (!t.syzygy_type_bound || bound < t.syzygy_type_bound->first) t.syzygy_type_bound = std::make_pair(bound, m);
      }
      offer(t.syzygy_type_bound->first, "syzygy types of the syzygies of " + root.name);
      t.b_matrix_bound = stabilization_bound(build_bsystem(c));
      offer(*t.b_matrix_bound, "B-matrix stabilization of " + root.name);
    }
    r.test_modules.push_back(std::move(t));
  };

  for (const Root& root : roots) explore(root, budget);

  RepModule reg_side = regular(ws.algebra, side);
  r.idim = pdim(cat_engine, dual(reg_side), budget);
  if (r.idim.kind == DimResult::Kind::finite) offer(r.idim.value, "injective dimension of the regular module");

  auto run_probes = [&](const std::vector<NamedModule>& list) {
    // A finite pdim never exceeds a certified upper bound u, so depth u + 1 decides every probe that matters.
    const std::size_t probe_budget = r.upper ? std::min(budget, r.upper->value + 1) : budget;
    r.probe_budget = std::max(r.probe_budget, probe_budget);
    for (const auto& [name, module] : list) {
      DimResult d = pdim(probe_engine, module, std::max<std::size_t>(probe_budget, 1));
      if (d.kind == DimResult::Kind::finite && d.value > r.lower) {
        r.lower = d.value;
        r.lower_witness = name;
      }
      r.probes.push_back({name, std::move(d)});
    }
  };
  std::vector<NamedModule> probes = standard_probes(ws.algebra, side);
  probes.insert(probes.end(), extra_probes.begin(), extra_probes.end());
  if (r.upper) run_probes(probes);

  // The top never improves bounds that already meet, so it is then explored only to depth upper + 1.
  explore(top, r.exact() ? std::min(budget, r.upper->value + 1) : budget);
  if (r.probes.empty()) run_probes(probes);

  if (r.upper && r.upper->value < r.lower)
    throw InternalConsistency("finitistic dimension bounds cross: upper " + std::to_string(r.upper->value) +
                              ", lower " + std::to_string(r.lower));
  return r;
}

}  // namespace syzygy
