#include "oplax/operation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oplax/error.hpp"

namespace oplax {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, std::string(what) + ": non-finite entry");
  }
}

}  // namespace

std::size_t checked_power(std::size_t dim, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (dim != 0 && r > std::numeric_limits<std::size_t>::max() / dim)
      fail(ErrorCode::InvalidArgument, "operation too large: dim^n overflows");
    r *= dim;
  }
  return r;
}

Vector::Vector(std::size_t dim) : entries_(dim, 0.0) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "vector dimension must be >= 1");
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(ErrorCode::InvalidArgument, "vector dimension must be >= 1");
  require_finite(entries_, "vector");
}

Vector::Vector(std::initializer_list<double> entries) : Vector(std::vector<double>(entries)) {}

Vector Vector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) fail(ErrorCode::InvalidArgument, "basis index out of range");
  Vector v(dim);
  v.entries_[k] = 1.0;
  return v;
}

Operation::Operation(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "operation dimension must be >= 1");
  if (degree == 0) fail(ErrorCode::InvalidArgument, "operation degree must be >= 1");
  coeffs_.assign(checked_power(dim, degree + 1), 0.0);
}

Operation::Operation(std::size_t dim, std::size_t degree, std::vector<double> coeffs)
    : Operation(dim, degree) {
  if (coeffs.size() != coeffs_.size())
    fail(ErrorCode::DimensionMismatch, "coefficient count " + std::to_string(coeffs.size()) +
                                           " != dim^(degree+1) = " + std::to_string(coeffs_.size()));
  require_finite(coeffs, "operation");
  coeffs_ = std::move(coeffs);
}

std::size_t Operation::flat_index(std::size_t out, std::span<const std::size_t> inputs) const {
  if (inputs.size() != degree_) fail(ErrorCode::InvalidArgument, "multi-index arity does not match degree");
  if (out >= dim_) fail(ErrorCode::InvalidArgument, "output index out of range");
  std::size_t flat = out;
  for (std::size_t j : inputs) {
    if (j >= dim_) fail(ErrorCode::InvalidArgument, "input index out of range");
    flat = flat * dim_ + j;
  }
  return flat;
}

double Operation::coeff(std::size_t out, std::span<const std::size_t> inputs) const {
  return coeffs_[flat_index(out, inputs)];
}

void Operation::set_coeff(std::size_t out, std::span<const std::size_t> inputs, double value) {
  set(flat_index(out, inputs), value);
}

void Operation::set(std::size_t flat, double value) {
  if (flat >= coeffs_.size()) fail(ErrorCode::InvalidArgument, "flat index out of range");
  if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, "operation: non-finite entry");
  coeffs_[flat] = value;
}

double Operation::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Operation::is_finite() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return std::isfinite(c); });
}

void Operation::require_compatible(const Operation& other, const char* op) const {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    fail(ErrorCode::DimensionMismatch, std::string(op) + ": operations differ in dim or degree");
}

Operation& Operation::operator+=(const Operation& other) {
  require_compatible(other, "operator+=");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Operation& Operation::operator-=(const Operation& other) {
  require_compatible(other, "operator-=");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

Operation& Operation::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

double max_abs_diff(const Operation& a, const Operation& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree())
    fail(ErrorCode::DimensionMismatch, "max_abs_diff: operations differ in dim or degree");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace oplax
