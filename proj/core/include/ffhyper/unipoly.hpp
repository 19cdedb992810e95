#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffhyper/field.hpp"

namespace ffhyper {

/// Dense univariate polynomial over F_q, coefficients low to high.
/// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
  UniPoly(FieldPtr field, std::vector<Elem> coeffs);

  static UniPoly constant(FieldPtr field, Elem c);
  static UniPoly x(FieldPtr field);
  /// Coefficients given as integers reduced mod p, low to high.
  static UniPoly from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Elem lead() const noexcept { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

  Elem eval(Elem x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(Elem c) const;
  /// Requires every nonzero exponent to be divisible by p.
  UniPoly pth_root() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder; throws InvalidArgument when dividing by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct UniSquarefreeDecomposition {
  Elem unit;
  /// Pairwise coprime monic square-free factors with their multiplicities.
  std::vector<std::pair<UniPoly, unsigned>> factors;
};

/// f = unit * prod factor^mult, valid in characteristic p (p-th root fallback).
UniSquarefreeDecomposition squarefree_decomposition(const UniPoly& f);
/// Product of the distinct monic irreducible factors; 1 for constants.
UniPoly squarefree_part(const UniPoly& f);
/// h = c * g(x)^2 over F_q. Throws ZeroPolynomial.
bool univar_is_const_square(const UniPoly& h);

}  // namespace ffhyper
