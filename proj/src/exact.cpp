#include "residuum/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "residuum/errors.hpp"

namespace residuum {

ExpVec::ExpVec(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("exponent vector must have dimension >= 1");
  for (auto c : coords_) {
    if (c < 0) throw DomainError("exponent vector has a negative entry: " + residuum::to_string(coords_));
  }
}

ExpVec::ExpVec(std::initializer_list<std::int64_t> coords)
    : ExpVec(std::vector<std::int64_t>(coords)) {}

ExpVec ExpVec::zero(std::size_t dim) { return ExpVec(std::vector<std::int64_t>(dim, 0)); }

ExpVec ExpVec::unit(std::size_t dim, std::size_t axis, std::int64_t power) {
  std::vector<std::int64_t> c(dim, 0);
  c.at(axis) = power;
  return ExpVec(std::move(c));
}

std::int64_t ExpVec::degree() const {
  std::int64_t s = 0;
  for (auto c : coords_) s = checked_add(s, c);
  return s;
}

bool ExpVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool ExpVec::divides(const ExpVec& other) const {
  if (dim() != other.dim()) throw DimensionError("exponent dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

int ExpVec::pure_axis() const {
  int axis = -1;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords_[i] == 0) continue;
    if (axis >= 0) return -1;
    axis = static_cast<int>(i);
  }
  return axis;
}

ExpVec ExpVec::scaled(std::int64_t k) const {
  if (k < 0) throw DomainError("negative scale factor");
  std::vector<std::int64_t> c(coords_);
  for (auto& x : c) x = checked_mul(x, k);
  return ExpVec(std::move(c));
}

ExpVec ExpVec::operator+(const ExpVec& other) const {
  if (dim() != other.dim()) throw DimensionError("exponent dimensions differ");
  std::vector<std::int64_t> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], other.coords_[i]);
  return ExpVec(std::move(c));
}

ExpVec ExpVec::join(const ExpVec& other) const {
  if (dim() != other.dim()) throw DimensionError("exponent dimensions differ");
  std::vector<std::int64_t> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], other.coords_[i]);
  return ExpVec(std::move(c));
}

ExpVec ExpVec::saturating_minus(const ExpVec& other) const {
  if (dim() != other.dim()) throw DimensionError("exponent dimensions differ");
  std::vector<std::int64_t> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max<std::int64_t>(c[i] - other.coords_[i], 0);
  return ExpVec(std::move(c));
}

std::string ExpVec::to_string() const { return residuum::to_string(coords_); }

IntMatrix::IntMatrix(std::vector<IntVec> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw DimensionError("ragged matrix rows");
  }
}

IntMatrix IntMatrix::from_exponents(std::span<const ExpVec> rows) {
  std::vector<IntVec> r;
  r.reserve(rows.size());
  for (const auto& e : rows) r.push_back(e.coords());
  return IntMatrix(std::move(r));
}

IntMatrix IntMatrix::with_rows_swapped(std::size_t i, std::size_t j) const {
  IntMatrix out(*this);
  std::swap(out.rows_.at(i), out.rows_.at(j));
  return out;
}

namespace {

using BigMatrix = std::vector<std::vector<Integer>>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

Integer laplace(const BigMatrix& a, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.size() == 1) return a[row][cols[0]];
  Integer sum = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (a[row][cols[k]] == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) rest.push_back(cols[t]);
    Integer term = a[row][cols[k]] * laplace(a, rest, row + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

// Fraction-free elimination in place; returns the rank and the sign of the
// row permutation applied. For a square full-rank matrix the last pivot is
// the determinant up to that sign.
std::size_t bareiss(BigMatrix& a, int& perm_sign) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  perm_sign = 1;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      perm_sign = -perm_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

namespace detail {

Integer det_cofactor(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto a = to_big(m);
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return laplace(a, cols, 0);
}

Integer det_bareiss(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  auto a = to_big(m);
  int s = 1;
  if (bareiss(a, s) < n) return 0;
  return s * a[n - 1][n - 1];
}

}  // namespace detail

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  return m.rows() <= 4 ? detail::det_cofactor(m) : detail::det_bareiss(m);
}

int sign(const Integer& x) { return x.sign(); }

std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = to_big(m);
  int s = 1;
  return bareiss(a, s);
}

Integer gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntVec primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) throw DomainError("primitive() of the zero vector");
  IntVec out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  return out;
}

IntVec primitive(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) throw DomainError("primitive() of the zero vector");
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64(x / g));
  return out;
}

std::vector<Integer> generalized_cross(const IntMatrix& rows) {
  const std::size_t n = rows.cols();
  if (rows.rows() + 1 != n) throw DimensionError("generalized cross product needs n-1 rows in Z^n");
  std::vector<Integer> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<IntVec> minor;
    minor.reserve(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      IntVec r;
      r.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(rows(i, k));
      minor.push_back(std::move(r));
    }
    Integer d = n == 1 ? Integer(1) : det(IntMatrix(std::move(minor)));
    w[j] = (j % 2 == 0) ? d : Integer(-d);
  }
  return w;
}

IntVec unimodular_complement(std::span<const std::int64_t> rho) {
  if (rho.size() != 2) throw DimensionError("unimodular_complement needs a 2-vector");
  if (gcd_of(rho) != 1) throw DomainError("unimodular_complement needs a primitive vector, got " + to_string(rho));
  const std::int64_t r1 = rho[0], r2 = rho[1];
  if (r1 == 0) return {1, 0};

  // Extended Euclid for the coefficient y in r1 * x + r2 * y = 1; then
  // eta = (-y, x) has det(rho; eta) = 1.
  std::int64_t old_r = r1, r = r2, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) old_t = -old_t;
  const std::int64_t y = old_t;
  const std::int64_t m = r1 < 0 ? -r1 : r1;
  auto mod = [m](std::int64_t a) { return ((a % m) + m) % m; };

  // eta1 runs over -y + k*r1 for det +1 and y + k*r1 for det -1.
  const std::int64_t e_plus = mod(-y);
  const std::int64_t e_minus = mod(y);
  const bool use_plus = e_plus <= e_minus;
  const std::int64_t s_det = use_plus ? 1 : -1;
  const std::int64_t eta1 = use_plus ? e_plus : e_minus;
  // r1 * eta2 - r2 * eta1 = s_det
  const std::int64_t num = checked_add(s_det, checked_mul(r2, eta1));
  if (num % r1 != 0) throw DomainError("unimodular_complement: no integral completion");
  return {eta1, num / r1};
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("64-bit integer overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("64-bit integer overflow");
  return out;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

std::string to_string(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace residuum
