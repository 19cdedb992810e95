#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffhyper/groebner.hpp"
#include "ffhyper/multipoly.hpp"

namespace ffhyper {

enum class AdmissibilityStatus { Admissible, FailsSquareCondition, FailsPrimitive };

std::string_view to_string(AdmissibilityStatus s) noexcept;

struct AdmissibilityVerdict {
  AdmissibilityStatus status = AdmissibilityStatus::Admissible;
  /// Common zero of the H_j, only looked for when the primitive condition fails.
  std::optional<CommonZero> witness;
  /// H_0..H_d with f = sum H_j(x2..xk) x1^j.
  std::vector<MultiPoly> expansion;
  int degree = 0;
  std::size_t k = 0;

  bool admissible() const noexcept { return status == AdmissibilityStatus::Admissible; }
  nlohmann::json to_json() const;
};

/// Decides admissibility: f is not c*g^2, and the x1-coefficients H_j have no
/// common zero over the algebraic closure (decided by Groebner basis). On a
/// primitive failure a witness is searched over F_q and F_{q^2}.
///
/// Throws ConstantPolynomial, NotSymmetric, ArityMismatch (k < 2).
AdmissibilityVerdict is_admissible(const MultiPoly& f, std::uint32_t witness_ext_degree = 2);

/// True iff the x1-coefficients of f share no common zero over the closure.
bool primitive_condition(const MultiPoly& f);

/// Random symmetric polynomial of degree exactly d in k variables: uniform
/// coefficients on the monomial orbit sums of degree <= d, resampled until
/// some degree-d orbit has a nonzero coefficient. Deterministic in seed.
MultiPoly random_symmetric_poly(const FieldPtr& field, std::size_t k, unsigned d, std::uint64_t seed);

/// Orbit sum of a monomial: sum over the distinct permutations of exps.
MultiPoly orbit_sum(const FieldPtr& field, Exponents exps);

struct DensityCount {
  std::uint64_t primitive = 0;
  std::uint64_t total = 0;
  friend bool operator==(const DensityCount&, const DensityCount&) = default;
};

/// Scans f = A*(x^2+y^2+z^2) + B*(xy+yz+zx) + C*(x+y+z) + D over all (A,B,C,D)
/// and counts the nonconstant members that satisfy the primitive condition.
DensityCount primitive_density_deg2_var3(const FieldPtr& field, unsigned workers = 1);

}  // namespace ffhyper
