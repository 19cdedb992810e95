#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ffhyper {

/// An element of F_q, encoded as sum c_i * p^i over its coefficient vector
/// (c_0, ..., c_{n-1}) in the polynomial basis 1, t, ..., t^{n-1}.
/// Codes are only meaningful together with the Field that produced them.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class CharVariant { strict, tilde };

/// Quadratic character values for every element of a field.
struct CharTable {
  CharVariant variant = CharVariant::strict;
  std::vector<std::int8_t> values;

  int operator()(Elem x) const { return values[x.code]; }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Odd-characteristic finite field F_{p^n} = F_p[t]/(modulus(t)).
///
/// Immutable after construction. Multiplication goes through discrete
/// log/antilog tables and the quadratic character is a table lookup, so
/// construction costs O(q) time and memory.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// Builds F_{p^n}. Without an explicit modulus the lexicographically least
  /// monic irreducible of degree n is used (coefficients compared from the
  /// top degree down).
  static FieldPtr create(std::uint32_t p, std::uint32_t n = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Accepts "p", "p^n" and "p^n:c0,c1,...,1" (modulus coefficients low to high).
  static FieldPtr parse(std::string_view spec);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime() const noexcept { return n_ == 1; }
  /// Monic modulus, low to high; x for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Canonical text form: "p" for prime fields, "p^n:c0,...,1" otherwise.
  std::string spec() const;

  bool contains(Elem x) const noexcept { return x.code < q_; }
  void check(Elem x) const;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Integer reduced mod p, i.e. an element of the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  /// The class of t; a root of modulus().
  Elem generator() const noexcept;
  bool in_prime_subfield(Elem x) const noexcept { return x.code < p_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (n_ == 1) {
      std::uint32_t s = a.code + b.code;
      return Elem{s >= p_ ? s - p_ : s};
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (n_ == 1) return Elem{a.code == 0 ? 0 : p_ - a.code};
    return neg_ext(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (n_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
    if (a.code == 0 || b.code == 0) return zero();
    return Elem{exp_[log_[a.code] + log_[b.code]]};
  }
  /// Throws InvalidArgument on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Inverse Frobenius x -> x^{p^{n-1}}, the unique p-th root.
  Elem pth_root(Elem a) const noexcept { return pow(a, pth_root_exp_); }

  int quad_char(Elem x, CharVariant variant = CharVariant::strict) const;
  bool is_square(Elem x) const;  // 0 counts as a square
  const CharTable& char_table(CharVariant variant) const noexcept {
    return variant == CharVariant::strict ? strict_ : tilde_;
  }

  /// All q elements in code order (lexicographic on (c_{n-1}, ..., c_0)).
  std::vector<Elem> elements() const;

  /// Human-readable element: "3" in prime fields, "1+2*g+g^2" otherwise.
  std::string format(Elem x) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

  Elem add_ext(Elem a, Elem b) const noexcept;
  Elem neg_ext(Elem a) const noexcept;
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t pth_root_exp_;
  std::vector<std::uint32_t> exp_;  // 2(q-1) entries, extension fields only
  std::vector<std::uint32_t> log_;
  CharTable strict_;
  CharTable tilde_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// Embedding of F_q into an extension F_{q^e}, given by the image of t.
struct FieldEmbedding {
  FieldPtr base;
  FieldPtr ext;
  Elem image_of_generator;

  Elem operator()(Elem x) const;
};

/// F_{q^e} built as F_p[s]/(lex-least irreducible of degree n*e) together
/// with an embedding of `base` (found by locating a root of base's modulus).
FieldEmbedding make_extension(const FieldPtr& base, std::uint32_t e);

bool is_odd_prime(std::uint64_t p) noexcept;

}  // namespace ffhyper
