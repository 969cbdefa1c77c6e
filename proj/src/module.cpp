#include "syzygy/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "syzygy/errors.hpp"

namespace syzygy {

namespace {

using Row = SparseEchelon::Row;

void add_entry(Row& row, std::size_t col, const Rational& v) {
  if (sgn(v) == 0) return;
  row.emplace_back(col, v);
}

// Sorts and merges duplicate columns.
void normalize(Row& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Row out;
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return sgn(e.second) == 0; }), out.end());
  row = std::move(out);
}


}  // namespace

RepModule::RepModule(Algebra algebra, Side side, std::vector<std::size_t> dims, std::vector<QMatrix> actions)
    : RepModule(Unchecked{}, std::move(algebra), side, std::move(dims), std::move(actions)) {
  const Quiver& q = quiver();
  if (dims_.size() != q.vertex_count()) throw DimensionMismatch("module needs one dimension per vertex");
  if (actions_.size() != q.arrow_count()) throw DimensionMismatch("module needs one matrix per arrow");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (actions_[a].rows() != dims_[ar.target] || actions_[a].cols() != dims_[ar.source])
      throw DimensionMismatch("matrix of arrow '" + ar.name + "' has shape " + std::to_string(actions_[a].rows()) +
                              "x" + std::to_string(actions_[a].cols()) + ", expected " +
                              std::to_string(dims_[ar.target]) + "x" + std::to_string(dims_[ar.source]));
  }
  std::string bad = violated_relation();
  if (!bad.empty()) throw RelationViolation("relation " + bad + " does not act as zero");
}

RepModule::RepModule(Unchecked, Algebra algebra, Side side, std::vector<std::size_t> dims,
                     std::vector<QMatrix> actions)
    : algebra_(std::move(algebra)), side_(side), dims_(std::move(dims)), actions_(std::move(actions)) {}

RepModule RepModule::zero(Algebra algebra, Side side) {
  const Presentation& p = side == Side::left ? *algebra.forward() : *algebra.backward();
  std::vector<QMatrix> actions(p.quiver().arrow_count());
  return RepModule(Unchecked{}, algebra, side, std::vector<std::size_t>(p.quiver().vertex_count(), 0),
                   std::move(actions));
}

const Presentation& RepModule::acting() const {
  return side_ == Side::left ? *algebra_.forward() : *algebra_.backward();
}

std::size_t RepModule::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

std::size_t RepModule::offset(std::size_t v) const {
  return std::accumulate(dims_.begin(), dims_.begin() + static_cast<long>(v), std::size_t{0});
}

QMatrix RepModule::path_action(const Path& p) const {
  QMatrix acc = QMatrix::identity(dims_[p.source]);
  for (std::size_t a : p.arrows) acc = actions_[a] * acc;
  return acc;
}

QMatrix RepModule::basis_action(std::size_t basis_index) const {
  return path_action(acting().basis_path(basis_index));
}

std::string RepModule::violated_relation() const {
  const Presentation& p = acting();
  for (const auto& r : p.relations()) {
    QMatrix m = path_action(r.p);
    if (r.q) m -= r.coeff * path_action(*r.q);
    if (!m.is_zero()) {
      std::string s = r.p.to_string(p.quiver());
      if (r.q) s += " = " + r.coeff.get_str() + " * " + r.q->to_string(p.quiver());
      // Name the offending arrow: the last arrow of the failing term.
      return "'" + s + "' (arrow '" + p.quiver().arrow(r.p.arrows.back()).name + "')";
    }
  }
  return {};
}

bool RepModule::compatible(const RepModule& other) const {
  return side_ == other.side_ && algebra_.same_as(other.algebra_);
}

ModMorphism ModMorphism::zero(const RepModule& source, const RepModule& target) {
  ModMorphism f;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) f.blocks.emplace_back(target.dim(v), source.dim(v));
  return f;
}

ModMorphism ModMorphism::identity(const RepModule& m) {
  ModMorphism f;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) f.blocks.push_back(QMatrix::identity(m.dim(v)));
  return f;
}

bool ModMorphism::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const QMatrix& b) { return b.is_zero(); });
}

Rational ModMorphism::trace() const {
  Rational t = 0;
  for (const auto& b : blocks) t += b.trace();
  return t;
}

ModMorphism compose(const ModMorphism& second, const ModMorphism& first) {
  ModMorphism f;
  for (std::size_t v = 0; v < first.blocks.size(); ++v) f.blocks.push_back(second.blocks[v] * first.blocks[v]);
  return f;
}

ModMorphism operator+(const ModMorphism& a, const ModMorphism& b) {
  ModMorphism f;
  for (std::size_t v = 0; v < a.blocks.size(); ++v) f.blocks.push_back(a.blocks[v] + b.blocks[v]);
  return f;
}

ModMorphism operator-(const ModMorphism& a, const ModMorphism& b) {
  ModMorphism f;
  for (std::size_t v = 0; v < a.blocks.size(); ++v) f.blocks.push_back(a.blocks[v] - b.blocks[v]);
  return f;
}

ModMorphism operator*(const Rational& s, const ModMorphism& f) {
  ModMorphism g;
  for (const auto& b : f.blocks) g.blocks.push_back(s * b);
  return g;
}

ModMorphism combine(const std::vector<ModMorphism>& basis, const std::vector<Rational>& coeffs) {
  if (basis.empty()) throw PreconditionViolation("combine: empty basis");
  ModMorphism acc;
  for (const auto& b : basis.front().blocks) acc.blocks.emplace_back(b.rows(), b.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    for (std::size_t v = 0; v < acc.blocks.size(); ++v) acc.blocks[v] += coeffs[i] * basis[i].blocks[v];
  }
  return acc;
}

Rational trace_of_composite(const ModMorphism& g, const ModMorphism& f) {
  Rational t = 0, x;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    const QMatrix& a = g.blocks[v];
    const QMatrix& b = f.blocks[v];
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (sgn(a(i, k)) == 0 || sgn(b(k, i)) == 0) continue;
        x = a(i, k) * b(k, i);
        t += x;
      }
  }
  return t;
}

bool is_homomorphism(const ModMorphism& f, const RepModule& source, const RepModule& target) {
  if (f.blocks.size() != source.vertex_count()) return false;
  for (std::size_t v = 0; v < source.vertex_count(); ++v)
    if (f.blocks[v].rows() != target.dim(v) || f.blocks[v].cols() != source.dim(v)) return false;
  const Quiver& q = source.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(target.action(a) * f.blocks[ar.source] == f.blocks[ar.target] * source.action(a))) return false;
  }
  return true;
}

bool is_invertible(const ModMorphism& f) {
  return std::all_of(f.blocks.begin(), f.blocks.end(), [](const QMatrix& b) {
    return b.rows() == b.cols() && (b.rows() == 0 || rank(b) == b.rows());
  });
}

RepModule projective(const Algebra& a, std::size_t vertex, Side side) {
  const Presentation& p = side == Side::left ? *a.forward() : *a.backward();
  const Quiver& q = p.quiver();
  if (vertex >= q.vertex_count()) throw PreconditionViolation("projective: unknown vertex");
  std::vector<std::size_t> dims(q.vertex_count());
  // Position of each basis path inside its vertex space.
  std::vector<std::size_t> position(p.dim(), 0);
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    const auto& paths = p.basis_between(vertex, j);
    dims[j] = paths.size();
    for (std::size_t k = 0; k < paths.size(); ++k) position[paths[k]] = k;
  }
  std::vector<QMatrix> actions;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& ar = q.arrow(ai);
    QMatrix m(dims[ar.target], dims[ar.source]);
    Element arrow = p.normal_form(Path{ar.source, ar.target, {ai}});
    const auto& sources = p.basis_between(vertex, ar.source);
    for (std::size_t k = 0; k < sources.size(); ++k) {
      Element image = p.concat(Element{{sources[k], Rational(1)}}, arrow);
      for (const auto& [idx, c] : image) m(position[idx], k) = c;
    }
    actions.push_back(std::move(m));
  }
  return RepModule(RepModule::Unchecked{}, a, side, std::move(dims), std::move(actions));
}

RepModule simple(const Algebra& a, std::size_t vertex, Side side) {
  RepModule z = RepModule::zero(a, side);
  if (vertex >= z.vertex_count()) throw PreconditionViolation("simple: unknown vertex");
  std::vector<std::size_t> dims(z.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<QMatrix> actions;
  for (const auto& ar : z.quiver().arrows()) actions.emplace_back(dims[ar.target], dims[ar.source]);
  return RepModule(RepModule::Unchecked{}, a, side, std::move(dims), std::move(actions));
}

RepModule regular(const Algebra& a, Side side) {
  std::vector<RepModule> parts;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) parts.push_back(projective(a, v, side));
  return direct_sum(parts);
}

RepModule semisimple_top(const Algebra& a, Side side) {
  std::vector<RepModule> parts;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) parts.push_back(simple(a, v, side));
  return direct_sum(parts);
}

RepModule injective(const Algebra& a, std::size_t vertex, Side side) {
  return dual(projective(a, vertex, flip(side)));
}

RepModule dual(const RepModule& m) {
  std::vector<QMatrix> actions;
  for (const auto& x : m.actions()) actions.push_back(x.transpose());
  return RepModule(RepModule::Unchecked{}, m.algebra(), flip(m.side()), m.dims(), std::move(actions));
}

RepModule direct_sum(const std::vector<RepModule>& parts) {
  if (parts.empty()) throw PreconditionViolation("direct_sum of no modules");
  const RepModule& first = parts.front();
  for (const auto& p : parts)
    if (!p.compatible(first)) throw PreconditionViolation("direct_sum: modules over different algebras or sides");
  std::vector<std::size_t> dims(first.vertex_count(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<QMatrix> actions;
  for (std::size_t a = 0; a < first.quiver().arrow_count(); ++a) {
    std::vector<QMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(a));
    actions.push_back(block_diagonal(blocks));
  }
  return RepModule(RepModule::Unchecked{}, first.algebra(), first.side(), std::move(dims), std::move(actions));
}

RepModule submodule(const RepModule& m, const std::vector<QMatrix>& bases) {
  const Quiver& q = m.quiver();
  std::vector<SubspaceCoords> coords;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    coords.emplace_back(bases[v].cols() ? bases[v] : QMatrix(m.dim(v), 0));
    dims.push_back(bases[v].cols());
  }
  std::vector<QMatrix> actions;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (dims[ar.source] == 0 || dims[ar.target] == 0) {
      actions.emplace_back(dims[ar.target], dims[ar.source]);
      continue;
    }
    actions.push_back(coords[ar.target].coords(m.action(a) * bases[ar.source]));
  }
  return RepModule(RepModule::Unchecked{}, m.algebra(), m.side(), std::move(dims), std::move(actions));
}

RepModule quotient(const RepModule& m, const std::vector<QMatrix>& sub_bases, ModMorphism* projection) {
  const Quiver& q = m.quiver();
  std::vector<QMatrix> comp, proj;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const std::size_t n = m.dim(v);
    QMatrix sub = sub_bases[v].cols() ? sub_bases[v] : QMatrix(n, 0);
    QMatrix c = complement_basis(sub, n);
    QMatrix full = hstack(sub, c);
    QMatrix inv = n ? *inverse(full) : QMatrix(0, 0);
    proj.push_back(inv.row_block(sub.cols(), c.cols()));
    comp.push_back(std::move(c));
    dims.push_back(comp.back().cols());
  }
  std::vector<QMatrix> actions;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (dims[ar.source] == 0 || dims[ar.target] == 0) {
      actions.emplace_back(dims[ar.target], dims[ar.source]);
      continue;
    }
    actions.push_back(proj[ar.target] * (m.action(a) * comp[ar.source]));
  }
  if (projection) {
    projection->blocks.clear();
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
      projection->blocks.push_back(proj[v].rows() ? proj[v] : QMatrix(0, m.dim(v)));
  }
  return RepModule(RepModule::Unchecked{}, m.algebra(), m.side(), std::move(dims), std::move(actions));
}

std::vector<QMatrix> generated_submodule(const RepModule& m, const std::vector<QMatrix>& generators) {
  const Quiver& q = m.quiver();
  std::vector<QMatrix> span(m.vertex_count());
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    span[v] = generators[v].cols() ? column_basis(generators[v]) : QMatrix(m.dim(v), 0);
  std::vector<std::size_t> pending(m.vertex_count());
  std::iota(pending.begin(), pending.end(), 0);
  while (!pending.empty()) {
    std::size_t v = pending.back();
    pending.pop_back();
    if (span[v].cols() == 0) continue;
    for (std::size_t a : q.arrows_from(v)) {
      std::size_t t = q.arrow(a).target;
      if (m.dim(t) == 0) continue;
      QMatrix image = m.action(a) * span[v];
      QMatrix grown = column_basis(hstack(span[t], image));
      if (grown.cols() > span[t].cols()) {
        span[t] = std::move(grown);
        pending.push_back(t);
      }
    }
  }
  return span;
}

namespace {

std::vector<QMatrix> image_under_arrows(const RepModule& m, const std::vector<QMatrix>& bases) {
  const Quiver& q = m.quiver();
  std::vector<QMatrix> out(m.vertex_count());
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    QMatrix acc(m.dim(v), 0);
    for (std::size_t a : q.arrows_into(v)) {
      std::size_t s = q.arrow(a).source;
      if (bases[s].cols() == 0) continue;
      acc = hstack(acc, m.action(a) * bases[s]);
    }
    out[v] = acc.cols() ? column_basis(acc) : QMatrix(m.dim(v), 0);
  }
  return out;
}

}  // namespace

std::vector<QMatrix> radical_bases(const RepModule& m) {
  std::vector<QMatrix> full;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) full.push_back(QMatrix::identity(m.dim(v)));
  return image_under_arrows(m, full);
}

std::vector<QMatrix> socle_bases(const RepModule& m) {
  const Quiver& q = m.quiver();
  std::vector<QMatrix> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    QMatrix stacked(0, m.dim(v));
    for (std::size_t a : q.arrows_from(v)) stacked = vstack(stacked, m.action(a));
    if (stacked.rows() == 0) {
      out.push_back(QMatrix::identity(m.dim(v)));
      continue;
    }
    QMatrix k = kernel_basis(stacked);
    out.push_back(k.rows() ? k.transpose() : QMatrix(m.dim(v), 0));
  }
  return out;
}

std::vector<std::size_t> top_dims(const RepModule& m) {
  auto rad = radical_bases(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) out.push_back(m.dim(v) - rad[v].cols());
  return out;
}

std::vector<std::size_t> socle_dims(const RepModule& m) {
  auto soc = socle_bases(m);
  std::vector<std::size_t> out;
  for (const auto& b : soc) out.push_back(b.cols());
  return out;
}

std::vector<std::vector<std::size_t>> radical_filtration(const RepModule& m) {
  std::vector<std::vector<std::size_t>> layers;
  std::vector<QMatrix> current;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) current.push_back(QMatrix::identity(m.dim(v)));
  while (true) {
    std::size_t total = 0;
    for (const auto& b : current) total += b.cols();
    if (total == 0) break;
    auto next = image_under_arrows(m, current);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) layer.push_back(current[v].cols() - next[v].cols());
    layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return layers;
}

std::vector<ModMorphism> hom_space(const RepModule& m, const RepModule& n) {
  if (!m.compatible(n)) throw PreconditionViolation("hom_space: modules over different algebras or sides");
  const Quiver& q = m.quiver();
  const std::size_t nv = m.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  SparseEchelon system(off[nv]);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const std::size_t s = ar.source, t = ar.target;
    const QMatrix& na = n.action(a);  // n_t x n_s
    const QMatrix& ma = m.action(a);  // m_t x m_s
    // (N_a X_s - X_t M_a)[i][j] = 0 for i < n_t, j < m_s.
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        Row row;
        for (std::size_t c = 0; c < n.dim(s); ++c) add_entry(row, off[s] + c * m.dim(s) + j, na(i, c));
        for (std::size_t d = 0; d < m.dim(t); ++d) add_entry(row, off[t] + i * m.dim(t) + d, -ma(d, j));
        normalize(row);
        if (!row.empty()) system.insert(row);
      }
  }
  std::vector<ModMorphism> basis;
  for (const auto& vec : system.kernel_basis()) {
    ModMorphism f = ModMorphism::zero(m, n);
    for (const auto& [idx, val] : vec) {
      std::size_t v = static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), idx) - off.begin()) - 1;
      std::size_t local = idx - off[v];
      f.blocks[v](local / m.dim(v), local % m.dim(v)) = val;
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

std::size_t hom_dim(const RepModule& m, const RepModule& n) { return hom_space(m, n).size(); }

namespace {

struct TensorLayout {
  std::vector<std::size_t> off;
};

TensorLayout tensor_layout(const RepModule& a, const RepModule& m) {
  TensorLayout l;
  l.off.assign(a.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) l.off[v + 1] = l.off[v] + a.dim(v) * m.dim(v);
  return l;
}

void check_tensor_args(const RepModule& a, const RepModule& m) {
  if (a.side() != Side::right || m.side() != Side::left)
    throw PreconditionViolation("tensor product needs a right module and a left module");
  if (!a.algebra().same_as(m.algebra())) throw PreconditionViolation("tensor product over different algebras");
}

// Rows spanning the bilinearity relations a·x ⊗ m - a ⊗ x·m.
void tensor_relations(const RepModule& a, const RepModule& m, const TensorLayout& l, SparseEchelon& out) {
  const Quiver& q = m.quiver();
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& ar = q.arrow(ai);
    const std::size_t s = ar.source, t = ar.target;
    const QMatrix& aa = a.action(ai);  // a_s x a_t
    const QMatrix& ma = m.action(ai);  // m_t x m_s
    for (std::size_t p = 0; p < a.dim(t); ++p)
      for (std::size_t k = 0; k < m.dim(s); ++k) {
        Row row;
        for (std::size_t i = 0; i < a.dim(s); ++i) add_entry(row, l.off[s] + i * m.dim(s) + k, aa(i, p));
        for (std::size_t j = 0; j < m.dim(t); ++j) add_entry(row, l.off[t] + p * m.dim(t) + j, -ma(j, k));
        normalize(row);
        if (!row.empty()) out.insert(row);
      }
  }
}

}  // namespace

std::size_t tensor_dim(const RepModule& a_right, const RepModule& m_left) {
  check_tensor_args(a_right, m_left);
  TensorLayout l = tensor_layout(a_right, m_left);
  SparseEchelon rel(l.off.back());
  tensor_relations(a_right, m_left, l, rel);
  return l.off.back() - rel.rank();
}

std::size_t tensor_map_rank(const ModMorphism& f, const RepModule& a, const RepModule& a2, const RepModule& m_left) {
  check_tensor_args(a, m_left);
  check_tensor_args(a2, m_left);
  TensorLayout l = tensor_layout(a, m_left);
  TensorLayout l2 = tensor_layout(a2, m_left);
  SparseEchelon span(l2.off.back());
  tensor_relations(a2, m_left, l2, span);
  const std::size_t base = span.rank();
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    const QMatrix& fv = f.blocks[v];  // a2_v x a_v
    const std::size_t mv = m_left.dim(v);
    for (std::size_t i = 0; i < a.dim(v); ++i)
      for (std::size_t k = 0; k < mv; ++k) {
        Row row;
        for (std::size_t r = 0; r < a2.dim(v); ++r) add_entry(row, l2.off[v] + r * mv + k, fv(r, i));
        normalize(row);
        if (!row.empty()) span.insert(row);
      }
  }
  return span.rank() - base;
}

LayeredGraph layered_graph(const RepModule& m) {
  const Quiver& q = m.quiver();
  const std::size_t nv = m.vertex_count();
  // Radical series J^k M.
  std::vector<std::vector<QMatrix>> series;
  {
    std::vector<QMatrix> cur;
    for (std::size_t v = 0; v < nv; ++v) cur.push_back(QMatrix::identity(m.dim(v)));
    while (true) {
      std::size_t total = 0;
      for (const auto& b : cur) total += b.cols();
      series.push_back(cur);
      if (total == 0) break;
      cur = image_under_arrows(m, cur);
    }
  }
  auto zero_if_past = [&](std::size_t k, std::size_t v) {
    return k < series.size() ? series[k][v] : QMatrix(m.dim(v), 0);
  };

  LayeredGraph g;
  std::vector<QMatrix> vectors;  // one column per node
  std::vector<std::size_t> layer_start;
  // Layer 0: unit vectors completing J M.
  layer_start.push_back(0);
  for (std::size_t v = 0; v < nv; ++v) {
    QMatrix comp = complement_basis(zero_if_past(1, v), m.dim(v));
    for (std::size_t c = 0; c < comp.cols(); ++c) {
      g.nodes.push_back({v, 0});
      vectors.push_back(comp.col_block(c, 1));
    }
  }
  for (std::size_t k = 0; layer_start.back() < g.nodes.size(); ++k) {
    const std::size_t begin = layer_start.back(), end = g.nodes.size();
    layer_start.push_back(end);
    // Select the next layer among arrow images.
    std::vector<QMatrix> chosen(nv);
    for (std::size_t v = 0; v < nv; ++v) chosen[v] = zero_if_past(k + 2, v);
    for (std::size_t y = begin; y < end; ++y)
      for (std::size_t a : q.arrows_from(g.nodes[y].vertex)) {
        std::size_t t = q.arrow(a).target;
        QMatrix img = m.action(a) * vectors[y];
        if (img.is_zero()) continue;
        QMatrix grown = hstack(chosen[t], img);
        if (rank(grown) > chosen[t].cols()) {
          chosen[t] = std::move(grown);
          g.nodes.push_back({t, k + 1});
          vectors.push_back(std::move(img));
        }
      }
    // Edges: coefficients of arrow images on the new layer modulo J^{k+2} M.
    for (std::size_t y = begin; y < end; ++y)
      for (std::size_t a : q.arrows_from(g.nodes[y].vertex)) {
        std::size_t t = q.arrow(a).target;
        QMatrix img = m.action(a) * vectors[y];
        if (img.is_zero()) continue;
        std::vector<std::size_t> layer_nodes;
        QMatrix basis(m.dim(t), 0);
        for (std::size_t z = end; z < g.nodes.size(); ++z)
          if (g.nodes[z].vertex == t) {
            layer_nodes.push_back(z);
            basis = hstack(basis, vectors[z]);
          }
        if (layer_nodes.empty()) continue;
        QMatrix deeper = zero_if_past(k + 2, t);
        SubspaceCoords sc(hstack(basis, deeper));
        QMatrix coeffs = sc.coords(img);
        for (std::size_t i = 0; i < layer_nodes.size(); ++i)
          if (sgn(coeffs(i, 0)) != 0) g.edges.push_back({y, layer_nodes[i], a});
      }
  }
  return g;
}

std::string LayeredGraph::to_dot(const Quiver& q, const std::string& name) const {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  // non-canonical: a module has many graphs; scalars are dropped\n";
  out << "  rankdir=TB;\n";
  std::size_t layers = 0;
  for (const auto& n : nodes) layers = std::max(layers, n.layer + 1);
  for (std::size_t l = 0; l < layers; ++l) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].layer == l) out << " n" << i << ";";
    out << " }\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << q.label(nodes[i].vertex) << "\"];\n";
  for (const auto& e : edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << q.arrow(e.arrow).name << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string LayeredGraph::to_text(const Quiver& q) const {
  std::ostringstream out;
  std::size_t layers = 0;
  for (const auto& n : nodes) layers = std::max(layers, n.layer + 1);
  for (std::size_t l = 0; l < layers; ++l) {
    out << "layer " << l << ":";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].layer == l) out << " " << q.label(nodes[i].vertex);
    out << "\n";
  }
  for (const auto& e : edges)
    out << q.label(nodes[e.from].vertex) << " -" << q.arrow(e.arrow).name << "-> " << q.label(nodes[e.to].vertex)
        << "\n";
  return out.str();
}

RepModule module_from_graph(const Algebra& a, Side side, const std::vector<std::size_t>& node_vertex,
                            const std::vector<GraphEdge>& edges) {
  const Presentation& p = side == Side::left ? *a.forward() : *a.backward();
  const Quiver& q = p.quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0), position(node_vertex.size());
  for (std::size_t i = 0; i < node_vertex.size(); ++i) {
    if (node_vertex[i] >= q.vertex_count()) throw PreconditionViolation("graph node at an unknown vertex");
    position[i] = dims[node_vertex[i]]++;
  }
  std::vector<QMatrix> actions;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai)
    actions.emplace_back(dims[q.arrow(ai).target], dims[q.arrow(ai).source]);
  for (const GraphEdge& e : edges) {
    if (e.from >= node_vertex.size() || e.to >= node_vertex.size() || e.arrow >= q.arrow_count())
      throw PreconditionViolation("graph edge out of range");
    const Arrow& ar = q.arrow(e.arrow);
    if (node_vertex[e.from] != ar.source || node_vertex[e.to] != ar.target)
      throw PreconditionViolation("graph edge does not match arrow " + ar.name);
    actions[e.arrow](position[e.to], position[e.from]) += e.coeff;
  }
  return RepModule(a, side, std::move(dims), std::move(actions));
}

}  // namespace syzygy
