#include "syzygy/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "syzygy/errors.hpp"

namespace syzygy {

namespace {

QMatrix gram_matrix(const std::vector<ModMorphism>& basis) {
  const std::size_t d = basis.size();
  QMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      g(i, j) = trace_of_composite(basis[i], basis[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

// Flattens a morphism into a column vector.
QMatrix flatten(const ModMorphism& f) {
  std::size_t n = 0;
  for (const auto& b : f.blocks) n += b.rows() * b.cols();
  QMatrix v(n, 1);
  std::size_t k = 0;
  for (const auto& b : f.blocks)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) v(k++, 0) = b(r, c);
  return v;
}

ModMorphism power_at_least(const ModMorphism& f, std::size_t n) {
  ModMorphism p = f;
  for (std::size_t e = 1; e < n; e *= 2) p = compose(p, p);
  return p;
}

std::size_t projective_dim(const Presentation& p, std::size_t v) {
  std::size_t d = 0;
  for (std::size_t j = 0; j < p.quiver().vertex_count(); ++j) d += p.basis_between(v, j).size();
  return d;
}

// Top data: complement of J·M and projection onto it.
struct TopData {
  std::vector<QMatrix> complement;  // m_v x t_v
  std::vector<QMatrix> projection;  // t_v x m_v
};

TopData top_data(const RepModule& m) {
  TopData t;
  auto rad = radical_bases(m);
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const std::size_t n = m.dim(v);
    QMatrix c = complement_basis(rad[v], n);
    QMatrix inv = n ? *inverse(hstack(rad[v].cols() ? rad[v] : QMatrix(n, 0), c)) : QMatrix(0, 0);
    t.projection.push_back(inv.row_block(rad[v].cols(), c.cols()));
    t.complement.push_back(std::move(c));
  }
  return t;
}

std::vector<QMatrix> top_map(const TopData& t, const ModMorphism& f) {
  std::vector<QMatrix> out;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    if (t.complement[v].cols() == 0) {
      out.emplace_back(0, 0);
      continue;
    }
    out.push_back(t.projection[v] * (f.blocks[v] * t.complement[v]));
  }
  return out;
}

bool blocks_nilpotent(const std::vector<QMatrix>& blocks) {
  return std::all_of(blocks.begin(), blocks.end(), [](const QMatrix& b) { return b.rows() == 0 || is_nilpotent(b); });
}

Split fitting_split(const RepModule& m, const ModMorphism& psi) {
  ModMorphism p = power_at_least(psi, m.total_dim());
  std::vector<QMatrix> image, kernel;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const QMatrix& b = p.blocks[v];
    const std::size_t n = m.dim(v);
    image.push_back(n ? column_basis(b) : QMatrix(0, 0));
    QMatrix k = n ? kernel_basis(b) : QMatrix(0, 0);
    kernel.push_back(k.rows() ? k.transpose() : QMatrix(n, 0));
  }
  Split s;
  s.first = submodule(m, image);
  s.second = submodule(m, kernel);
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const std::size_t n = m.dim(v);
    const std::size_t a = image[v].cols(), b = kernel[v].cols();
    if (a + b != n) throw InternalConsistency("Fitting decomposition does not add up");
    s.include_first.blocks.push_back(a ? image[v] : QMatrix(n, 0));
    s.include_second.blocks.push_back(b ? kernel[v] : QMatrix(n, 0));
    QMatrix inv = n ? *inverse(hstack(s.include_first.blocks[v], s.include_second.blocks[v])) : QMatrix(0, 0);
    s.project_first.blocks.push_back(a ? inv.row_block(0, a) : QMatrix(0, n));
    s.project_second.blocks.push_back(b ? inv.row_block(a, b) : QMatrix(0, n));
  }
  return s;
}

// Endomorphism that is neither nilpotent nor invertible, found from a candidate phi.
std::optional<ModMorphism> splitting_element(const RepModule& m, const EndRing& e, const TopData& top,
                                             const ModMorphism& phi) {
  auto b = top_map(top, phi);
  std::vector<Rational> eigen;
  for (const auto& blk : b) {
    if (blk.rows() == 0) continue;
    auto roots = rational_roots(charpoly(blk));
    if (!roots) continue;
    for (const auto& r : *roots)
      if (std::find(eigen.begin(), eigen.end(), r) == eigen.end()) eigen.push_back(r);
  }
  ModMorphism id = ModMorphism::identity(m);
  for (const auto& lambda : eigen) {
    ModMorphism psi = phi - lambda * id;
    std::vector<QMatrix> c;
    for (const auto& blk : b) {
      if (blk.rows() == 0) {
        c.emplace_back(0, 0);
        continue;
      }
      QMatrix shifted = blk;
      for (std::size_t i = 0; i < blk.rows(); ++i) shifted(i, i) -= lambda;
      c.push_back(std::move(shifted));
    }
    if (!blocks_nilpotent(c)) return psi;
    // Nilpotent on the top but outside the radical: multiply by a basis element pairing nontrivially.
    for (const auto& other : e.basis)
      if (sgn(trace_of_composite(other, psi)) != 0) return compose(other, psi);
  }
  return std::nullopt;
}

}  // namespace

EndRing end_ring(const RepModule& m, std::uint64_t shuffle_seed) {
  EndRing e;
  e.basis = hom_space(m, m);
  if (shuffle_seed) {
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(e.basis.begin(), e.basis.end(), rng);
    std::uniform_int_distribution<int> scale(1, 3);
    // Mix in neighbours to change the basis, not only its order.
    for (std::size_t i = 0; i + 1 < e.basis.size(); ++i)
      e.basis[i] = e.basis[i] + Rational(scale(rng)) * e.basis[i + 1];
  }
  e.gram = gram_matrix(e.basis);
  return e;
}

std::vector<std::vector<std::vector<Rational>>> EndRing::multiplication_table() const {
  std::vector<std::vector<std::vector<Rational>>> table(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) table[i].push_back(coordinates(compose(basis[i], basis[j])));
  return table;
}

std::vector<Rational> EndRing::coordinates(const ModMorphism& f) const {
  QMatrix cols(flatten(f).rows(), 0);
  for (const auto& b : basis) cols = hstack(cols, flatten(b));
  SubspaceCoords sc(cols);
  QMatrix target = flatten(f);
  if (!sc.contains(target)) throw PreconditionViolation("not an endomorphism of this module");
  QMatrix c = sc.coords(target);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < c.rows(); ++i) out.push_back(c(i, 0));
  return out;
}

std::vector<ModMorphism> radical_of_end(const EndRing& e) {
  std::vector<ModMorphism> out;
  if (e.basis.empty()) return out;
  QMatrix k = kernel_basis(e.gram);
  for (std::size_t r = 0; r < k.rows(); ++r) {
    std::vector<Rational> coeffs;
    for (std::size_t c = 0; c < k.cols(); ++c) coeffs.push_back(k(r, c));
    out.push_back(combine(e.basis, coeffs));
  }
  return out;
}

bool is_projective_module(const RepModule& m) {
  auto top = top_dims(m);
  std::size_t cover = 0;
  for (std::size_t v = 0; v < top.size(); ++v) cover += top[v] * projective_dim(m.acting(), v);
  return cover == m.total_dim();
}

namespace {

bool simple_top_or_socle(const RepModule& m) {
  auto top = top_dims(m);
  if (std::accumulate(top.begin(), top.end(), std::size_t{0}) == 1) return true;
  auto soc = socle_dims(m);
  return std::accumulate(soc.begin(), soc.end(), std::size_t{0}) == 1;
}

}  // namespace

std::optional<Split> split_once(const RepModule& m, std::uint64_t shuffle_seed) {
  if (m.is_zero()) throw ZeroModule("cannot split the zero module");
  if (simple_top_or_socle(m)) return std::nullopt;
  EndRing e = end_ring(m, shuffle_seed);
  if (e.basis.size() == 1) return std::nullopt;
  const std::size_t semisimple_dim = rank(e.gram);
  if (semisimple_dim == 1) return std::nullopt;
  TopData top = top_data(m);

  auto attempt = [&](const ModMorphism& phi) -> std::optional<Split> {
    auto psi = splitting_element(m, e, top, phi);
    if (!psi) return std::nullopt;
    return fitting_split(m, *psi);
  };
  for (const auto& phi : e.basis)
    if (auto s = attempt(phi)) return s;
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    for (std::size_t j = 0; j < e.basis.size(); ++j)
      if (auto s = attempt(compose(e.basis[i], e.basis[j]))) return s;
  std::mt19937_64 rng(0x5eed + shuffle_seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < e.basis.size(); ++i) c.emplace_back(coeff(rng));
    if (auto s = attempt(combine(e.basis, c))) return s;
  }
  throw ExtensionFieldAmbiguity("End/rad has dimension " + std::to_string(semisimple_dim) +
                                " but no rational splitting endomorphism was found");
}

bool is_indecomposable(const RepModule& m) { return !split_once(m).has_value(); }

IsoTest is_isomorphic(const RepModule& m, const RepModule& n) {
  if (!m.compatible(n)) throw PreconditionViolation("is_isomorphic: modules over different algebras or sides");
  IsoTest result;
  if (m.dims() != n.dims()) return result;
  if (m.is_zero()) {
    result.isomorphic = true;
    result.witness = ModMorphism::zero(m, n);
    return result;
  }
  auto forward = hom_space(m, n);
  if (forward.empty()) return result;
  auto backward = hom_space(n, m);
  for (const auto& f : forward)
    for (const auto& g : backward)
      if (sgn(trace_of_composite(g, f)) != 0) {
        result.isomorphic = true;
        if (is_invertible(f)) {
          result.witness = f;
          return result;
        }
        // Not expected for indecomposables; fall back to random combinations.
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int t = 0; t < 200; ++t) {
          std::vector<Rational> c;
          for (std::size_t i = 0; i < forward.size(); ++i) c.emplace_back(coeff(rng));
          ModMorphism h = combine(forward, c);
          if (is_invertible(h)) {
            result.witness = h;
            return result;
          }
        }
        result.witness_search_exhausted = true;
        return result;
      }
  return result;
}

std::optional<ClassId> IsoRegistry::find_locked(const RepModule& m, const std::vector<std::size_t>& top,
                                                const std::vector<std::size_t>& socle) const {
  auto it = by_dims_.find(m.dims());
  if (it == by_dims_.end()) return std::nullopt;
  for (ClassId id : it->second) {
    const ClassInfo& c = classes_[id];
    if (c.top != top || c.socle != socle) continue;
    if (!c.representative.compatible(m)) throw PreconditionViolation("registry holds modules of another algebra or side");
    if (is_isomorphic(c.representative, m).isomorphic) return id;
  }
  return std::nullopt;
}

std::optional<ClassId> IsoRegistry::find(const RepModule& m) const {
  auto top = top_dims(m);
  auto soc = socle_dims(m);
  std::lock_guard lock(mutex_);
  return find_locked(m, top, soc);
}

ClassId IsoRegistry::classify(const RepModule& m) {
  auto top = top_dims(m);
  auto soc = socle_dims(m);
  std::lock_guard lock(mutex_);
  if (auto id = find_locked(m, top, soc)) return *id;
  ClassInfo info{m, m.dims(), top, soc, is_projective_module(m)};
  ClassId id = classes_.size();
  classes_.push_back(std::move(info));
  by_dims_[m.dims()].push_back(id);
  return id;
}

std::size_t IsoRegistry::size() const {
  std::lock_guard lock(mutex_);
  return classes_.size();
}

const IsoRegistry::ClassInfo& IsoRegistry::info(ClassId id) const {
  std::lock_guard lock(mutex_);
  return classes_.at(id);
}

namespace {

// Splits m = n + (simple summands). A socle vector outside rad m spans a simple summand; with C
// such vectors chosen independent modulo rad m and T a complement of rad m + C, the submodule
// rad m + T is a complement of C.
RepModule peel_simples(const RepModule& m, std::vector<RepModule>& simples) {
  const auto rad = radical_bases(m);
  const auto soc = socle_bases(m);
  std::vector<QMatrix> rest(m.vertex_count());
  bool any = false;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const std::size_t n = m.dim(v), r = rad[v].cols();
    QMatrix c(n, 0);
    if (n > 0 && soc[v].cols() > 0) {
      const Echelon e = row_reduce(hstack(rad[v], soc[v]));
      for (std::size_t p : e.pivots)
        if (p >= r) c = hstack(c, soc[v].col_block(p - r, 1));
    }
    for (std::size_t k = 0; k < c.cols(); ++k) simples.push_back(simple(m.algebra(), v, m.side()));
    any = any || c.cols() > 0;
    rest[v] = hstack(rad[v], complement_basis(hstack(rad[v], c), n));
  }
  return any ? submodule(m, rest) : m;
}

}  // namespace

std::vector<RepModule> indecomposable_summands(const RepModule& m, std::uint64_t shuffle_seed) {
  std::vector<RepModule> out;
  if (m.is_zero()) return out;
  RepModule rest = peel_simples(m, out);
  if (rest.is_zero()) return out;
  std::vector<RepModule> stack{rest};
  while (!stack.empty()) {
    RepModule cur = std::move(stack.back());
    stack.pop_back();
    auto s = split_once(cur, shuffle_seed);
    if (!s) {
      out.push_back(std::move(cur));
      continue;
    }
    stack.push_back(std::move(s->first));
    stack.push_back(std::move(s->second));
  }
  return out;
}

ClassMultiset krull_schmidt(const RepModule& m, IsoRegistry& registry, std::uint64_t shuffle_seed) {
  ClassMultiset out;
  for (const auto& part : indecomposable_summands(m, shuffle_seed)) ++out[registry.classify(part)];
  return out;
}

}  // namespace syzygy
