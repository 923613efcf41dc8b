#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace oplax {

/// Element of the underlying real vector space V = R^dim.
class Vector {
 public:
  explicit Vector(std::size_t dim);
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }

  static Vector basis(std::size_t dim, std::size_t k);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> entries_;
};

/// Homogeneous multilinear map V^{(x)n} -> V, stored densely.
///
/// Coefficient c[i; j1..jn] is the e_i component of f(e_j1, ..., e_jn). The
/// flat layout is row-major with the output index i slowest and jn fastest,
/// so a degree-1 operation is an ordinary row-major matrix.
class Operation {
 public:
  /// Zero operation.
  Operation(std::size_t dim, std::size_t degree);
  Operation(std::size_t dim, std::size_t degree, std::vector<double> coeffs);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  /// |f| = degree - 1, the exponent used in every sign rule.
  int reduced_degree() const noexcept { return static_cast<int>(degree_) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const double> coeffs() const noexcept { return coeffs_; }

  /// Access by (output, inputs...) multi-index; inputs.size() must equal degree().
  double coeff(std::size_t out, std::span<const std::size_t> inputs) const;
  void set_coeff(std::size_t out, std::span<const std::size_t> inputs, double value);

  double operator[](std::size_t flat) const { return coeffs_[flat]; }
  void set(std::size_t flat, double value);

  double max_abs() const noexcept;
  bool is_finite() const noexcept;

  Operation& operator+=(const Operation& other);
  Operation& operator-=(const Operation& other);
  Operation& operator*=(double s);

  friend Operation operator+(Operation a, const Operation& b) { return a += b; }
  friend Operation operator-(Operation a, const Operation& b) { return a -= b; }
  friend Operation operator*(double s, Operation a) { return a *= s; }
  friend Operation operator-(Operation a) { return a *= -1.0; }

  friend bool operator==(const Operation&, const Operation&) = default;

 private:
  std::size_t flat_index(std::size_t out, std::span<const std::size_t> inputs) const;
  void require_compatible(const Operation& other, const char* op) const;

  std::size_t dim_;
  std::size_t degree_;
  std::vector<double> coeffs_;
};

/// dim^n with overflow checking.
std::size_t checked_power(std::size_t dim, std::size_t n);

/// Largest absolute coefficient difference; shapes must agree.
double max_abs_diff(const Operation& a, const Operation& b);

}  // namespace oplax
