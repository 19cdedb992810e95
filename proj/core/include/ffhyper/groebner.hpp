#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffhyper/multipoly.hpp"

namespace ffhyper {

/// Graded reverse lexicographic order with x1 > x2 > ... > xk.
bool grevlex_greater(const Exponents& a, const Exponents& b) noexcept;

/// Reduced Groebner basis under grevlex, every element monic.
/// Plain Buchberger with the product and chain criteria. Throws EmptyGenerators.
std::vector<MultiPoly> groebner_basis(std::span<const MultiPoly> gens);

/// True iff 1 lies in the ideal, i.e. the generators have no common zero
/// over the algebraic closure (weak Nullstellensatz). Throws EmptyGenerators.
bool ideal_contains_one(std::span<const MultiPoly> gens);

struct CommonZero {
  std::uint32_t ext_degree = 1;
  FieldPtr field;  // F_{q^ext_degree}
  std::vector<Elem> point;
};

/// Exhaustive search for a common zero over F_{q^e}, e = 1..max_ext_degree,
/// returning one from the smallest degree that has any. Extensions whose
/// point count exceeds `budget` are skipped, so nullopt is inconclusive.
std::optional<CommonZero> common_zero_search(std::span<const MultiPoly> gens, std::uint32_t max_ext_degree,
                                             std::uint64_t budget = std::uint64_t{1} << 24);

}  // namespace ffhyper
