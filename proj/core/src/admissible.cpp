#include "ffhyper/admissible.hpp"

#include <algorithm>

#include "ffhyper/error.hpp"
#include "ffhyper/parallel.hpp"
#include "ffhyper/random.hpp"

namespace ffhyper {

std::string_view to_string(AdmissibilityStatus s) noexcept {
  switch (s) {
    case AdmissibilityStatus::Admissible:
      return "Admissible";
    case AdmissibilityStatus::FailsSquareCondition:
      return "FailsSquareCondition";
    case AdmissibilityStatus::FailsPrimitive:
      return "FailsPrimitive";
  }
  return "?";
}

nlohmann::json AdmissibilityVerdict::to_json() const {
  nlohmann::json j;
  j["status"] = std::string(to_string(status));
  j["degree"] = degree;
  j["k"] = k;
  if (witness) {
    nlohmann::json point = nlohmann::json::array();
    for (Elem x : witness->point) point.push_back(witness->field->format(x));
    j["witness"] = {{"ext_degree", witness->ext_degree}, {"field", witness->field->spec()}, {"point", point}};
  }
  return j;
}

namespace {

void check_input(const MultiPoly& f) {
  if (f.nvars() < 2) throw Error(ErrorCode::ArityMismatch, "admissibility needs k >= 2 variables");
  if (f.total_degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "degree must be at least 1");
  if (!is_symmetric(f)) throw Error(ErrorCode::NotSymmetric, f.to_string());
}

}  // namespace

bool primitive_condition(const MultiPoly& f) {
  const auto H = expand_in_var(f, 0);
  return ideal_contains_one(H);
}

AdmissibilityVerdict is_admissible(const MultiPoly& f, std::uint32_t witness_ext_degree) {
  check_input(f);
  AdmissibilityVerdict v;
  v.k = f.nvars();
  v.degree = f.total_degree();
  v.expansion = expand_in_var(f, 0);
  if (is_const_square(f)) {
    v.status = AdmissibilityStatus::FailsSquareCondition;
    return v;
  }
  if (ideal_contains_one(v.expansion)) {
    v.status = AdmissibilityStatus::Admissible;
    return v;
  }
  v.status = AdmissibilityStatus::FailsPrimitive;
  if (witness_ext_degree > 0) v.witness = common_zero_search(v.expansion, witness_ext_degree, std::uint64_t{1} << 20);
  return v;
}

MultiPoly orbit_sum(const FieldPtr& field, Exponents exps) {
  std::sort(exps.begin(), exps.end());
  std::vector<Term> terms;
  do {
    terms.push_back({exps, field->one()});
  } while (std::next_permutation(exps.begin(), exps.end()));
  return MultiPoly::from_terms(field, exps.size(), std::move(terms));
}

namespace {

// Partitions of every total in [0, d] into at most k parts, padded to length k.
void partitions(std::size_t k, unsigned remaining, unsigned max_part, Exponents& cur,
                std::vector<Exponents>& out) {
  out.push_back(cur);
  if (cur.size() == k || remaining == 0) return;
  // cur is the nonincreasing prefix; extend it by one more part.
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(k, remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MultiPoly random_symmetric_poly(const FieldPtr& field, std::size_t k, unsigned d, std::uint64_t seed) {
  if (k < 2 || d < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 2 and d >= 1");
  std::vector<Exponents> shapes;
  Exponents cur;
  for (unsigned total = 0; total <= d; ++total) {
    std::vector<Exponents> found;
    partitions(k, total, total, cur, found);
    for (auto& e : found) {
      if (exponent_sum(e) == total) {
        e.resize(k, 0);
        shapes.push_back(std::move(e));
      }
    }
  }
  std::vector<MultiPoly> orbits;
  orbits.reserve(shapes.size());
  for (const auto& s : shapes) orbits.push_back(orbit_sum(field, s));

  Rng rng(seed);
  while (true) {
    MultiPoly f(field, k);
    bool top = false;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const Elem c = rng.elem(*field);
      if (c.code == 0) continue;
      if (exponent_sum(shapes[i]) == d) top = true;
      f = f + orbits[i].scaled(c);
    }
    if (top) return f;
  }
}

DensityCount primitive_density_deg2_var3(const FieldPtr& field, unsigned workers) {
  const std::uint32_t q = field->q();
  const MultiPoly sq = orbit_sum(field, {2, 0, 0});
  const MultiPoly mixed = orbit_sum(field, {1, 1, 0});
  const MultiPoly lin = orbit_sum(field, {1, 0, 0});
  // Partition on A; each slice scans (B, C, D).
  const auto slices = parallel_map<std::uint64_t>(q, workers, [&](std::size_t a) {
    std::uint64_t count = 0;
    const MultiPoly fa = sq.scaled(Elem{static_cast<std::uint32_t>(a)});
    for (std::uint32_t b = 0; b < q; ++b) {
      const MultiPoly fb = fa + mixed.scaled(Elem{b});
      for (std::uint32_t c = 0; c < q; ++c) {
        const MultiPoly fc = fb + lin.scaled(Elem{c});
        for (std::uint32_t d = 0; d < q; ++d) {
          const MultiPoly f = fc + MultiPoly::constant(field, 3, Elem{d});
          if (f.total_degree() < 1) continue;
          if (primitive_condition(f)) ++count;
        }
      }
    }
    return count;
  });
  DensityCount out;
  out.total = std::uint64_t{q} * q * q * q;
  for (auto s : slices) out.primitive += s;
  return out;
}

}  // namespace ffhyper
