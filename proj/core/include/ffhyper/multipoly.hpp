#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffhyper/field.hpp"
#include "ffhyper/unipoly.hpp"

namespace ffhyper {

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exps;
  Elem coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Graded lexicographic order with x1 > x2 > ... > xk.
bool grlex_greater(const Exponents& a, const Exponents& b) noexcept;
std::uint32_t exponent_sum(const Exponents& e) noexcept;

/// Sparse polynomial in nvars variables over F_q.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients and no repeated exponent vectors, so structural equality is
/// polynomial equality. nvars may be zero (constants).
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static MultiPoly from_terms(FieldPtr field, std::size_t nvars, std::vector<Term> terms);
  static MultiPoly constant(FieldPtr field, std::size_t nvars, Elem c);
  static MultiPoly constant(FieldPtr field, std::size_t nvars, std::int64_t c);
  /// x_{index+1}; index is 0-based.
  static MultiPoly variable(FieldPtr field, std::size_t nvars, std::size_t index);
  static MultiPoly monomial(FieldPtr field, Exponents exps, Elem c);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial (0 for zero).
  Elem constant_value() const noexcept;
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  /// -1 for the zero polynomial.
  int degree_in(std::size_t var) const noexcept;
  bool uses_var(std::size_t var) const noexcept;
  const Term& leading_term() const { return terms_.front(); }
  Elem leading_coeff() const noexcept { return terms_.empty() ? Elem{0} : terms_.front().coeff; }

  Elem eval(std::span<const Elem> point) const;

  /// Scaled so the graded-lex leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;
  MultiPoly scaled(Elem c) const;
  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;
  /// Requires every exponent divisible by p; inverse of the Frobenius map.
  MultiPoly pth_root() const;
  /// Exchanges x_i and x_j.
  MultiPoly swap_vars(std::size_t i, std::size_t j) const;
  /// Moves variable j to position targets[j] in a polynomial of target_nvars variables.
  MultiPoly rename_vars(std::size_t target_nvars, std::span<const std::size_t> targets) const;
  /// Maps coefficients through a field embedding.
  MultiPoly embed(const FieldEmbedding& emb) const;

  std::string to_string() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && same_field(a.field_, b.field_) && a.terms_ == b.terms_;
  }

 private:
  friend MultiPoly sub_scaled_shift(const MultiPoly& r, const Term& t, const MultiPoly& g);

  FieldPtr field_;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

void require_compatible(const MultiPoly& a, const MultiPoly& b);

/// Substitutes x_{var+1} = value; the result has nvars-1 variables.
MultiPoly partial_eval(const MultiPoly& f, std::size_t var, Elem value);
/// Invariant under every adjacent transposition of variables.
bool is_symmetric(const MultiPoly& f);
/// [H_0, ..., H_d] with f = sum H_j x_{var+1}^j; each H_j in nvars-1 variables.
/// Empty for the zero polynomial.
std::vector<MultiPoly> expand_in_var(const MultiPoly& f, std::size_t var);
/// Like expand_in_var but keeps the arity (coefficients simply do not use var).
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var);
/// Substitutes values[i] for every variable i != var, leaving a polynomial in x_{var+1}.
UniPoly substitute_all_but(const MultiPoly& f, std::size_t var, std::span<const Elem> values);
/// Univariate view of a polynomial that uses at most the single variable var.
UniPoly to_unipoly(const MultiPoly& f, std::size_t var = 0);
MultiPoly from_unipoly(const UniPoly& h, std::size_t nvars = 1, std::size_t var = 0);

/// Exact quotient f/g, or nullopt if g does not divide f.
std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g);
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

/// Monic gcd via recursive content / primitive-part reduction.
MultiPoly multivar_gcd(const MultiPoly& f, const MultiPoly& g);

struct SquarefreeDecomposition {
  Elem unit;
  /// Pairwise coprime monic square-free factors with multiplicities.
  std::vector<std::pair<MultiPoly, unsigned>> factors;
};

SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f);
MultiPoly squarefree_part(const MultiPoly& f);
/// f = c * g^2 for a constant c and a polynomial g over F_q.
bool is_const_square(const MultiPoly& f);
/// (c, g) with f = c * g^2 when f is a constant multiple of a square.
std::optional<std::pair<Elem, MultiPoly>> const_square_split(const MultiPoly& f);

/// Exhaustive number of zeros in F_q^nvars. Throws ZeroPolynomial, BudgetExceeded.
std::uint64_t zero_count(const MultiPoly& f, std::uint64_t budget = std::uint64_t{1} << 28);

}  // namespace ffhyper
