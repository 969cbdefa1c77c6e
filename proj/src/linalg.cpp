#include "syzygy/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "syzygy/errors.hpp"

namespace syzygy {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::row_block(std::size_t first, std::size_t count) const {
  QMatrix b(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(first + r, c);
  return b;
}

QMatrix QMatrix::col_block(std::size_t first, std::size_t count) const {
  QMatrix b(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
  return b;
}

QMatrix QMatrix::select_cols(const std::vector<std::size_t>& cols) const {
  QMatrix b(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) b(r, c) = (*this)(r, cols[c]);
  return b;
}

Rational QMatrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  QMatrix p(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) == 0) continue;
        t = x * y;
        p(i, j) += t;
      }
    }
  return p;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string QMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

QMatrix vstack(const QMatrix& top, const QMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack");
  QMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
  return m;
}

QMatrix hstack(const QMatrix& left, const QMatrix& right) {
  if (left.cols() == 0 && left.rows() == 0) return right;
  if (right.cols() == 0 && right.rows() == 0) return left;
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack");
  QMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

QMatrix block_diagonal(const std::vector<QMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) rows += b.rows(), cols += b.cols();
  QMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

QMatrix power(const QMatrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw DimensionMismatch("power of non-square matrix");
  QMatrix result = QMatrix::identity(m.rows());
  QMatrix base = m;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

namespace {

std::size_t entry_size(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

}  // namespace

Echelon row_reduce(const QMatrix& input) {
  Echelon e{input, {}};
  QMatrix& m = e.rref;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      if (best == rows || entry_size(m(i, c)) < entry_size(m(best, c))) best = i;
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) swap(m(r, j), m(best, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        f = factor * m(r, j);
        m(i, j) -= f;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const QMatrix& m) { return row_reduce(m).pivots.size(); }

QMatrix kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  Echelon e = row_reduce(m);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  QMatrix k(cols - e.pivots.size(), cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(row, e.pivots[i]) = -e.rref(i, f);
    ++row;
  }
  return k;
}

bool rowspace_contains(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("rowspace_contains: column counts differ");
  if (a.rows() == 0) return true;
  return rank(vstack(b, a)) == rank(b);
}

QMatrix column_basis(const QMatrix& m) {
  if (m.cols() == 0) return QMatrix(m.rows(), 0);
  Echelon e = row_reduce(m);
  return m.select_cols(e.pivots);
}

QMatrix complement_basis(const QMatrix& sub, std::size_t n) {
  // Reduce [sub | I] column-wise: pivot columns among the identity part give the complement.
  QMatrix aug = hstack(sub.cols() ? sub : QMatrix(n, 0), QMatrix::identity(n));
  Echelon e = row_reduce(aug);
  std::vector<std::size_t> chosen;
  for (auto p : e.pivots)
    if (p >= sub.cols()) chosen.push_back(p - sub.cols());
  return QMatrix::identity(n).select_cols(chosen);
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Echelon e = row_reduce(hstack(m, QMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.col_block(n, n);
}

bool is_nilpotent(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("is_nilpotent of non-square matrix");
  // m is nilpotent iff its rank sequence reaches 0; m^n = 0 suffices.
  QMatrix p = m;
  std::size_t r = rank(p);
  while (r > 0) {
    p = p * m;
    std::size_t next = rank(p);
    if (next == r) return false;
    r = next;
  }
  return true;
}

std::vector<Rational> charpoly(const QMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("charpoly of non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(a * mk).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs_in) {
  std::vector<Rational> coeffs = coeffs_in;
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
  std::vector<Rational> roots;
  if (coeffs.size() <= 1) return roots;
  std::size_t shift = 0;
  while (sgn(coeffs[shift]) == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(shift));
  if (coeffs.size() <= 1) return roots;

  mpz_class lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) ints.push_back(mpz_class(c * lcm));
  const mpz_class limit = mpz_class(1) << 40;
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) return std::nullopt;

  auto ps = divisors(ints.front());
  auto qs = divisors(ints.back());
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int s : {1, -1}) {
        Rational x(p * s, q);
        x.canonicalize();
        if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
        if (sgn(evaluate(coeffs, x)) == 0) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

SubspaceCoords::SubspaceCoords(QMatrix basis) : basis_(std::move(basis)) {
  const std::size_t d = basis_.cols();
  if (d == 0) return;
  // Pick d independent rows of the basis matrix.
  Echelon e = row_reduce(basis_.transpose());
  if (e.pivots.size() != d) throw PreconditionViolation("SubspaceCoords: basis columns are dependent");
  rows_ = e.pivots;
  QMatrix square(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) square(i, j) = basis_(rows_[i], j);
  inverse_ = *inverse(square);
}

QMatrix SubspaceCoords::coords(const QMatrix& v) const {
  const std::size_t d = dim();
  QMatrix picked(d, v.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < v.cols(); ++c) picked(i, c) = v(rows_[i], c);
  return inverse_ * picked;
}

bool SubspaceCoords::contains(const QMatrix& v) const {
  if (dim() == 0) return v.is_zero();
  return basis_ * coords(v) == v;
}

SparseEchelon::SparseEchelon(std::size_t cols)
    : cols_(cols), pivot_row_(cols, -1), work_(cols), touched_(cols, 0) {}

SparseEchelon::Row SparseEchelon::reduce_impl(const Row& row) const {
  std::vector<std::size_t> touched;
  Rational f;
  for (const auto& [c, v] : row) {
    work_[c] = v;
    touched_[c] = 1;
    touched.push_back(c);
  }
  for (const auto& [c, v] : row) {
    long pr = pivot_row_[c];
    if (pr < 0) continue;
    Rational coef = work_[c];
    if (sgn(coef) == 0) continue;
    for (const auto& [cc, vv] : rows_[static_cast<std::size_t>(pr)]) {
      if (!touched_[cc]) {
        touched_[cc] = 1;
        touched.push_back(cc);
        work_[cc] = 0;
      }
      f = coef * vv;
      work_[cc] -= f;
    }
  }
  std::sort(touched.begin(), touched.end());
  Row out;
  for (auto c : touched) {
    if (sgn(work_[c]) != 0) out.emplace_back(c, work_[c]);
    work_[c] = 0;
    touched_[c] = 0;
  }
  return out;
}

SparseEchelon::Row SparseEchelon::reduce(const Row& row) const { return reduce_impl(row); }

bool SparseEchelon::insert(const Row& row) {
  Row r = reduce_impl(row);
  if (r.empty()) return false;
  const std::size_t pc = r.front().first;
  Rational inv = 1 / r.front().second;
  for (auto& [c, v] : r) v *= inv;
  // Eliminate the new pivot column from existing rows.
  Rational f;
  for (auto& existing : rows_) {
    auto it = std::lower_bound(existing.begin(), existing.end(), pc,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == existing.end() || it->first != pc) continue;
    Rational coef = it->second;
    Row merged;
    merged.reserve(existing.size() + r.size());
    auto a = existing.begin();
    auto b = r.begin();
    while (a != existing.end() || b != r.end()) {
      if (b == r.end() || (a != existing.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == existing.end() || b->first < a->first) {
        f = coef * b->second;
        merged.emplace_back(b->first, -f);
        ++b;
      } else {
        f = coef * b->second;
        Rational v = a->second - f;
        if (sgn(v) != 0) merged.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    existing = std::move(merged);
  }
  pivot_row_[pc] = static_cast<long>(rows_.size());
  pivots_.push_back(pc);
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseEchelon::Row> SparseEchelon::kernel_basis() const {
  std::vector<Row> basis;
  // Column -> list of (pivot column, entry) for the rows where it appears.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> occurrences(cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i])
      if (c != pivots_[i]) occurrences[c].emplace_back(pivots_[i], v);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    Row vec;
    vec.emplace_back(f, Rational(1));
    for (const auto& [p, v] : occurrences[f]) vec.emplace_back(p, -v);
    std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace syzygy
