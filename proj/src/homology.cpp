#include "syzygy/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "syzygy/errors.hpp"

namespace syzygy {

namespace {

const RepModule& cached_projective(const Algebra& a, std::size_t v, Side side) {
  static std::mutex mutex;
  static std::map<std::tuple<const Presentation*, Side, std::size_t>, RepModule> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(a.forward().get(), side, v);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, projective(a, v, side)).first;
  return it->second;
}

}  // namespace

ProjectiveCover projective_cover(const RepModule& m,
                                 const std::vector<std::pair<std::size_t, QMatrix>>& extra_generators) {
  const Presentation& p = m.acting();
  const std::size_t nv = m.vertex_count();
  auto rad = radical_bases(m);
  std::vector<std::pair<std::size_t, QMatrix>> generators;
  ProjectiveCover pc;
  pc.multiplicities.assign(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    QMatrix comp = complement_basis(rad[v], m.dim(v));
    for (std::size_t c = 0; c < comp.cols(); ++c) generators.emplace_back(v, comp.col_block(c, 1));
    pc.multiplicities[v] = comp.cols();
  }
  for (const auto& g : extra_generators) {
    if (g.first >= nv || g.second.rows() != m.dim(g.first) || g.second.cols() != 1)
      throw DimensionMismatch("extra cover generator has the wrong shape");
    generators.push_back(g);
  }
  if (generators.empty()) {
    pc.cover = RepModule::zero(m.algebra(), m.side());
    pc.surjection = ModMorphism::zero(pc.cover, m);
    pc.kernel = pc.cover;
    pc.inclusion = ModMorphism::zero(pc.kernel, pc.cover);
    return pc;
  }
  std::vector<RepModule> parts;
  for (const auto& [v, x] : generators) {
    parts.push_back(cached_projective(m.algebra(), v, m.side()));
    pc.generator_vertices.push_back(v);
  }
  pc.cover = direct_sum(parts);
  std::map<std::size_t, QMatrix> acts;
  auto act = [&](std::size_t b) -> const QMatrix& {
    auto it = acts.find(b);
    if (it == acts.end()) it = acts.emplace(b, m.basis_action(b)).first;
    return it->second;
  };
  std::vector<QMatrix> kernel_bases;
  for (std::size_t j = 0; j < nv; ++j) {
    QMatrix block(m.dim(j), pc.cover.dim(j));
    std::size_t col = 0;
    for (const auto& [v, x] : generators)
      for (std::size_t b : p.basis_between(v, j)) {
        QMatrix image = act(b) * x;
        for (std::size_t r = 0; r < m.dim(j); ++r) block(r, col) = image(r, 0);
        ++col;
      }
    QMatrix k = pc.cover.dim(j) ? kernel_basis(block) : QMatrix(0, 0);
    kernel_bases.push_back(k.rows() ? k.transpose() : QMatrix(pc.cover.dim(j), 0));
    pc.surjection.blocks.push_back(std::move(block));
  }
  for (std::size_t j = 0; j < nv; ++j)
    if (rank(pc.surjection.blocks[j]) != m.dim(j)) throw InternalConsistency("cover map is not surjective");
  pc.kernel = submodule(pc.cover, kernel_bases);
  pc.inclusion.blocks = kernel_bases;
  return pc;
}

RepModule syzygy(const RepModule& m) { return projective_cover(m).kernel; }

SyzygyEngine::SyzygyEngine(Algebra algebra, Side side) : algebra_(std::move(algebra)), side_(side) {}

ClassMultiset SyzygyEngine::decompose(const RepModule& m) {
  if (m.side() != side_ || !m.algebra().same_as(algebra_))
    throw PreconditionViolation("module does not belong to this engine's algebra and side");
  return krull_schmidt(m, registry_);
}

bool SyzygyEngine::has_omega(ClassId id) const {
  std::lock_guard lock(memo_mutex_);
  return omega_.count(id) > 0;
}

ClassMultiset SyzygyEngine::omega(ClassId id) {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = omega_.find(id);
    if (it != omega_.end()) return it->second;
  }
  ClassMultiset result;
  if (!registry_.is_projective(id)) result = krull_schmidt(syzygy(registry_.representative(id)), registry_);
  std::lock_guard lock(memo_mutex_);
  return omega_.emplace(id, std::move(result)).first->second;
}

namespace {

ResolutionDegree describe_degree(SyzygyEngine& engine, Multiplicities summands) {
  ResolutionDegree d;
  d.cover.assign(engine.algebra().vertex_count(), 0);
  d.dim = 0;
  for (const auto& [id, mult] : summands) {
    d.dim += mult * static_cast<unsigned long>(engine.dim(id));
    const auto& top = engine.top(id);
    for (std::size_t v = 0; v < top.size(); ++v) d.cover[v] += mult * static_cast<unsigned long>(top[v]);
  }
  d.summands = std::move(summands);
  return d;
}

bool all_projective(const SyzygyEngine& engine, const Multiplicities& m) {
  return std::all_of(m.begin(), m.end(), [&](const auto& e) { return engine.is_projective(e.first); });
}

}  // namespace

Multiplicities next_degree(SyzygyEngine& engine, const Multiplicities& current) {
  Multiplicities next;
  for (const auto& [id, mult] : current)
    for (const auto& [child, k] : engine.omega(id)) next[child] += mult * static_cast<unsigned long>(k);
  return next;
}

ResolutionTrace resolve(SyzygyEngine& engine, const RepModule& m, std::size_t max_degree) {
  ResolutionTrace t;
  t.side = m.side();
  t.max_degree = max_degree;
  Multiplicities current;
  for (const auto& [id, k] : engine.decompose(m)) current[id] = static_cast<unsigned long>(k);
  t.degrees.push_back(describe_degree(engine, current));
  for (std::size_t k = 0; k < max_degree && !current.empty(); ++k) {
    current = next_degree(engine, current);
    t.degrees.push_back(describe_degree(engine, current));
  }
  t.terminated = current.empty() || all_projective(engine, current);
  return t;
}

RepModule ResolutionTrace::syzygy_module(const SyzygyEngine& engine, std::size_t k) const {
  const auto& d = degrees.at(k);
  std::vector<RepModule> parts;
  for (const auto& [id, mult] : d.summands)
    for (mpz_class i = 0; i < mult; ++i) parts.push_back(engine.representative(id));
  if (parts.empty()) return RepModule::zero(engine.algebra(), engine.side());
  return direct_sum(parts);
}

std::size_t tor1_dim(const RepModule& a_right, const RepModule& m_left) {
  if (a_right.side() != Side::right || m_left.side() != Side::left)
    throw PreconditionViolation("tor1_dim needs a right module and a left module");
  ProjectiveCover pc = projective_cover(a_right);
  // Direct: kernel of Ω ⊗ M -> P ⊗ M.
  const std::size_t omega_tensor = tensor_dim(pc.kernel, m_left);
  std::size_t direct = omega_tensor;
  if (!pc.kernel.is_zero()) direct -= tensor_map_rank(pc.inclusion, pc.kernel, pc.cover, m_left);
  // Four-term sequence 0 -> Tor_1 -> Ω⊗M -> P⊗M -> A⊗M -> 0.
  std::size_t cover_tensor = 0;
  for (std::size_t v = 0; v < pc.multiplicities.size(); ++v) cover_tensor += pc.multiplicities[v] * m_left.dim(v);
  const long alternating = static_cast<long>(omega_tensor) - static_cast<long>(cover_tensor) +
                           static_cast<long>(tensor_dim(a_right, m_left));
  if (alternating != static_cast<long>(direct))
    throw InternalConsistency("Tor_1 computations disagree: direct " + std::to_string(direct) + ", alternating " +
                              std::to_string(alternating));
  return direct;
}

std::string DimResult::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::finite:
      out << value;
      break;
    case Kind::infinite:
      out << "infinite (cycle of length " << chain.size() - 1 - cycle_start << " after " << cycle_start
          << " steps)";
      break;
    case Kind::unknown:
      out << "unknown (not settled within budget " << value << ")";
      break;
  }
  return out.str();
}

DimResult pdim_of_classes(SyzygyEngine& engine, const ClassMultiset& classes, std::size_t budget) {
  DimResult r;
  std::vector<ClassId> roots;
  for (const auto& [id, k] : classes) roots.push_back(id);
  std::map<ClassId, std::size_t> depth;
  std::map<ClassId, std::vector<ClassId>> children;  // explored nodes only
  std::vector<ClassId> queue;
  for (ClassId id : roots)
    if (depth.emplace(id, 0).second) queue.push_back(id);
  // Cycle search over explored edges.
  std::map<ClassId, int> color;
  std::vector<ClassId> stack;
  std::function<bool(ClassId)> dfs = [&](ClassId id) -> bool {
    color[id] = 1;
    stack.push_back(id);
    auto it = children.find(id);
    if (it != children.end())
      for (ClassId c : it->second) {
        if (color[c] == 1) {
          r.chain = stack;
          r.chain.push_back(c);
          r.cycle_start = static_cast<std::size_t>(std::find(stack.begin(), stack.end(), c) - stack.begin());
          return true;
        }
        if (color[c] == 0 && dfs(c)) return true;
      }
    stack.pop_back();
    color[id] = 2;
    return false;
  };
  auto has_cycle = [&]() {
    color.clear();
    stack.clear();
    for (ClassId id : roots)
      if (color[id] == 0 && dfs(id)) return true;
    return false;
  };
  // Breadth first, one level at a time; a cycle among the explored edges settles the question.
  bool open = false;
  bool revisited = false;
  std::size_t qi = 0;
  while (qi < queue.size()) {
    const std::size_t level_end = queue.size();
    for (; qi < level_end; ++qi) {
      ClassId id = queue[qi];
      if (engine.is_projective(id)) {
        children[id];
        continue;
      }
      if (depth[id] >= budget) {
        open = true;
        continue;
      }
      auto& ch = children[id];
      for (const auto& [c, k] : engine.omega(id)) {
        ch.push_back(c);
        if (depth.emplace(c, depth[id] + 1).second) queue.push_back(c);
        else revisited = true;
      }
    }
    if (revisited && has_cycle()) {
      r.kind = DimResult::Kind::infinite;
      return r;
    }
  }
  if (open) {
    r.kind = DimResult::Kind::unknown;
    r.value = budget;
    return r;
  }
  std::map<ClassId, std::size_t> height;
  std::function<std::size_t(ClassId)> h = [&](ClassId id) -> std::size_t {
    auto it = height.find(id);
    if (it != height.end()) return it->second;
    std::size_t best = 0;
    if (!engine.is_projective(id))
      for (ClassId c : children.at(id)) best = std::max(best, h(c));
    std::size_t val = engine.is_projective(id) ? 0 : best + 1;
    height[id] = val;
    return val;
  };
  r.kind = DimResult::Kind::finite;
  r.value = 0;
  for (ClassId id : roots) r.value = std::max(r.value, h(id));
  return r;
}

DimResult pdim(SyzygyEngine& engine, const RepModule& m, std::size_t budget) {
  if (budget < 1) throw PreconditionViolation("pdim budget must be at least 1");
  return pdim_of_classes(engine, engine.decompose(m), budget);
}

InjectiveDims idim_both_sides(SyzygyEngine& left, SyzygyEngine& right, std::size_t budget) {
  if (left.side() != Side::left || right.side() != Side::right || !left.algebra().same_as(right.algebra()))
    throw PreconditionViolation("idim_both_sides needs the left and right engines of one algebra");
  InjectiveDims d;
  d.left = pdim(right, dual(regular(left.algebra(), Side::left)), budget);
  d.right = pdim(left, dual(regular(left.algebra(), Side::right)), budget);
  return d;
}

std::vector<mpz_class> ext_dims(SyzygyEngine& engine, const RepModule& m, const RepModule& n,
                                std::size_t max_degree) {
  if (!m.compatible(n)) throw PreconditionViolation("ext_dims: modules over different algebras or sides");
  ResolutionTrace t = resolve(engine, m, max_degree);
  std::map<ClassId, std::size_t> hom_memo;
  auto hom_classes = [&](const Multiplicities& ms) {
    mpz_class total = 0;
    for (const auto& [id, mult] : ms) {
      auto it = hom_memo.find(id);
      if (it == hom_memo.end()) it = hom_memo.emplace(id, hom_dim(engine.representative(id), n)).first;
      total += mult * static_cast<unsigned long>(it->second);
    }
    return total;
  };
  auto hom_cover = [&](const ResolutionDegree& d) {
    mpz_class total = 0;
    for (std::size_t v = 0; v < d.cover.size(); ++v) total += d.cover[v] * static_cast<unsigned long>(n.dim(v));
    return total;
  };
  std::vector<mpz_class> out{mpz_class(static_cast<unsigned long>(hom_dim(m, n)))};
  for (std::size_t i = 1; i <= max_degree; ++i) {
    if (i >= t.degrees.size()) {
      out.emplace_back(0);
      continue;
    }
    mpz_class e = hom_classes(t.degrees[i].summands) - hom_cover(t.degrees[i - 1]) +
                  (i == 1 ? out[0] : hom_classes(t.degrees[i - 1].summands));
    out.push_back(e);
  }
  // Cross-check against cover multiplicities when N is simple.
  std::size_t support = 0, vertex = 0;
  for (std::size_t v = 0; v < n.vertex_count(); ++v)
    if (n.dim(v)) ++support, vertex = v;
  if (n.total_dim() == 1 && support == 1)
    for (std::size_t i = 0; i < out.size() && i < t.degrees.size(); ++i)
      if (out[i] != t.degrees[i].cover[vertex])
        throw InternalConsistency("Ext into a simple disagrees with cover multiplicities at degree " +
                                  std::to_string(i));
  return out;
}

std::vector<mpz_class> poincare_betti_truncated(SyzygyEngine& engine, const RepModule& m, const RepModule& n,
                                                std::size_t max_degree) {
  auto e = ext_dims(engine, m, n, max_degree);
  for (std::size_t i = 1; i < e.size(); i += 2) e[i] = -e[i];
  return e;
}

}  // namespace syzygy
