#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffhyper/count_report.hpp"
#include "ffhyper/hypergraph.hpp"
#include "ffhyper/multipoly.hpp"
#include "ffhyper/unipoly.hpp"

namespace ffhyper {

/// Character sum of a*g(x) over the base field against (s-1)*sqrt(q).
struct WeilCheck {
  std::int64_t sum = 0;
  unsigned s = 0;  // distinct roots of g, i.e. deg squarefree_part(g)
  std::uint32_t q = 0;
  bool applicable = false;  // g is not the square of a polynomial

  /// sum^2 <= (s-1)^2 q, or not applicable.
  bool pass() const noexcept;
  nlohmann::json to_json() const;
};

/// Throws NotMonic (including constants) and InvalidArgument for a = 0.
WeilCheck weil_check(const UniPoly& g, Elem a);

/// Tuples (u_2..u_k) for which f(x_1, u_2, ..., u_k) is c*h(x_1)^2.
struct ExceptionalSetX {
  std::vector<std::vector<Elem>> members;
  std::uint64_t y_count = 0;           // members with vanishing top x_1-coefficient
  std::uint64_t z_count = 0;           // the rest
  std::uint64_t constant_members = 0;  // f(x_1, u) a nonzero constant
  std::uint64_t zero_members = 0;      // f(x_1, u) identically zero
  unsigned n = 0;                      // degree of f in x_1
  unsigned d = 0;                      // total degree
  BigInt bound;                        // (d^2+d) q^{k-2}
  BigInt y_bound;                      // (d-n) q^{k-2}
  BigInt z_bound;                      // n d q^{k-2}

  std::size_t size() const noexcept { return members.size(); }
  bool pass() const;
  nlohmann::json to_json() const;
};

/// Exhaustive over F^{k-1}. With require_admissible, an identically zero
/// specialisation throws NotAdmissible. Throws BudgetExceeded.
ExceptionalSetX enumerate_X(const MultiPoly& f, bool require_admissible = false, const CountOptions& options = {});

/// Tuples (u_2(0), u_2(1), ..., u_k(0), u_k(1)) for which the product of
/// f(x, u_2(e_2), ..., u_k(e_k)) over e in {0,1}^{k-1} is c*h(x)^2.
struct ExceptionalSetB {
  std::vector<std::vector<Elem>> members;
  BigInt bound;  // ((d^2+d) + 2^{k-1} d (d+1)) q^{2k-3}, an empirical constant

  std::size_t size() const noexcept { return members.size(); }
  bool pass() const { return BigInt(members.size()) <= bound; }
};

ExceptionalSetB enumerate_B(const MultiPoly& f, const CountOptions& options = {});

/// Joint nonzero-square count for a family of polynomials in m variables.
struct SlavovResult {
  CountReport report;  // predicted q^m / 2^n, envelope attached
  bool condition_checked = false;
  /// Index sets T whose product is a constant times a square.
  std::vector<std::vector<std::size_t>> failing_subsets;

  bool condition_holds() const noexcept { return condition_checked && failing_subsets.empty(); }
};

/// Throws BudgetExceeded, InvalidArgument (empty family or more than 20 members).
SlavovResult slavov_count(std::span<const MultiPoly> fs, bool check_condition, const CountOptions& options = {});

struct ErrorEnvelope {
  Rational main;  // q^m / (m! 2^{C(m,k)})
  double err = 0;  // (2d)^{2C(m,k)} q^{m-1/2} + (2d)^{13C(m,k)/3} q^{m-1}, rounded up
};

ErrorEnvelope predict_envelope(std::uint64_t q, std::size_t m, std::size_t k, unsigned d);

/// Compares the m-subset count N(f, m) with S(f, m)/m!, where S(f, m) counts
/// points of F^m at which every f_I (I a k-subset of [m]) is a nonzero square.
struct TupleCrosscheck {
  BigInt N;
  BigInt S;
  Rational difference;  // N - S/m!
  BigInt bound;         // d C(m,k) q^{m-1}
  bool pass() const { return abs(difference) <= Rational(bound); }
  nlohmann::json to_json() const;
};

TupleCrosscheck tuple_count_crosscheck(const Hypergraph& y, std::size_t m, const CountOptions& options = {});

/// f_I(x_1..x_m) = f(x_{i_1}, ..., x_{i_k}) for every k-subset I of [m].
std::vector<MultiPoly> subset_family(const MultiPoly& f, std::size_t m);

/// {check, instance, observed, bound, pass}
nlohmann::json check_record(const std::string& check, const std::string& instance, const std::string& observed,
                            const std::string& bound, bool pass);

}  // namespace ffhyper
