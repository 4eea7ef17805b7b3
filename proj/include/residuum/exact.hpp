#pragma once

// Exact integer kernel: exponent vectors, integer matrices, determinants,
// gcd reductions and unimodular completions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace residuum {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A general integer vector (normals, directions). May have negative entries.
using IntVec = std::vector<std::int64_t>;

/// Exponent vector of a monomial z^a: n >= 1 nonnegative entries.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::vector<std::int64_t> coords);
  ExpVec(std::initializer_list<std::int64_t> coords);

  static ExpVec zero(std::size_t dim);
  static ExpVec unit(std::size_t dim, std::size_t axis, std::int64_t power = 1);

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::span<const std::int64_t> span() const { return coords_; }

  /// |a| = a_1 + ... + a_n
  std::int64_t degree() const;
  bool is_zero() const;
  /// Componentwise <=, i.e. z^this divides z^other.
  bool divides(const ExpVec& other) const;
  /// Index of the only nonzero coordinate, or -1 when the support is not a single axis.
  int pure_axis() const;

  ExpVec scaled(std::int64_t k) const;
  ExpVec operator+(const ExpVec& other) const;
  /// Componentwise max (exponent of the lcm).
  ExpVec join(const ExpVec& other) const;
  /// Componentwise max(a - b, 0) (exponent of z^a : z^b).
  ExpVec saturating_minus(const ExpVec& other) const;

  auto operator<=>(const ExpVec&) const = default;
  bool operator==(const ExpVec&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

/// Rectangular integer matrix stored by rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::vector<IntVec> rows);
  static IntMatrix from_exponents(std::span<const ExpVec> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }
  const IntVec& row(std::size_t i) const { return rows_[i]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  IntMatrix with_rows_swapped(std::size_t i, std::size_t j) const;

 private:
  std::vector<IntVec> rows_;
  std::size_t cols_ = 0;
};

/// Exact determinant. Cofactor expansion up to 4x4, Bareiss elimination above.
Integer det(const IntMatrix& m);
int sign(const Integer& x);

/// Exact rank by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

Integer gcd_of(std::span<const std::int64_t> v);

/// v divided by the gcd of its entries; signs preserved.
IntVec primitive(std::span<const std::int64_t> v);
IntVec primitive(const std::vector<Integer>& v);

/// For n-1 rows in Z^n, the vector w with w . x = det[x; rows] for all x.
std::vector<Integer> generalized_cross(const IntMatrix& rows);

/// For a primitive rho in Z^2, the eta with |det(rho; eta)| = 1 and the
/// smallest nonnegative first entry (ties broken towards det = +1).
IntVec unimodular_complement(std::span<const std::int64_t> rho);

/// Overflow-checked dot product.
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const Integer& x);

std::string to_string(std::span<const std::int64_t> v);

namespace detail {
Integer det_cofactor(const IntMatrix& m);
Integer det_bareiss(const IntMatrix& m);
}  // namespace detail

}  // namespace residuum
