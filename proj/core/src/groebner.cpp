#include "ffhyper/groebner.hpp"

#include <algorithm>
#include <set>

#include "ffhyper/error.hpp"

namespace ffhyper {

bool grevlex_greater(const Exponents& a, const Exponents& b) noexcept {
  const auto da = exponent_sum(a), db = exponent_sum(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

// Polynomial as a grevlex-descending term list; the working type of Buchberger.
using GPoly = std::vector<Term>;

bool divides(const Exponents& a, const Exponents& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

GPoly to_gpoly(const MultiPoly& f) {
  GPoly out = f.terms();
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.exps, b.exps); });
  return out;
}

void make_monic(const Field& F, GPoly& f) {
  if (f.empty()) return;
  const Elem inv = F.inv(f.front().coeff);
  for (auto& t : f) t.coeff = F.mul(t.coeff, inv);
}

bool is_constant(const GPoly& f) { return f.size() == 1 && exponent_sum(f.front().exps) == 0; }

// a - c * x^shift * b
GPoly sub_shifted(const Field& F, const GPoly& a, Elem c, const Exponents& shift, const GPoly& b) {
  GPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Exponents e(shift.size());
  auto shifted = [&](std::size_t idx) {
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = b[idx].exps[v] + shift[v];
    return e;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Exponents bj = shifted(j);
    if (i < a.size() && grevlex_greater(a[i].exps, bj)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grevlex_greater(bj, a[i].exps)) {
      out.push_back({bj, F.neg(F.mul(c, b[j].coeff))});
      ++j;
    } else {
      const Elem v = F.sub(a[i].coeff, F.mul(c, b[j].coeff));
      if (v.code != 0) out.push_back({a[i].exps, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of h modulo the (monic) polynomials in basis, skipping index `skip`.
GPoly reduce(const Field& F, GPoly h, const std::vector<GPoly>& basis, std::size_t skip = SIZE_MAX) {
  GPoly rem;
  std::size_t head = 0;
  while (head < h.size()) {
    const Term& lt = h[head];
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const auto& g = basis[k];
      if (!divides(g.front().exps, lt.exps)) continue;
      Exponents shift(lt.exps.size());
      for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = lt.exps[v] - g.front().exps[v];
      GPoly tail(h.begin() + static_cast<std::ptrdiff_t>(head), h.end());
      h = sub_shifted(F, tail, lt.coeff, shift, g);
      head = 0;
      reduced = true;
      break;
    }
    if (!reduced) rem.push_back(h[head++]);
  }
  return rem;
}

GPoly spoly(const Field& F, const GPoly& a, const GPoly& b) {
  const Exponents l = lcm(a.front().exps, b.front().exps);
  Exponents sa(l.size()), sb(l.size());
  for (std::size_t v = 0; v < l.size(); ++v) {
    sa[v] = l[v] - a.front().exps[v];
    sb[v] = l[v] - b.front().exps[v];
  }
  // x^sa * a - x^sb * b, both monic.
  const GPoly zero;
  GPoly left = sub_shifted(F, zero, F.neg(F.one()), sa, a);
  return sub_shifted(F, left, F.one(), sb, b);
}

std::vector<GPoly> prepare(std::span<const MultiPoly> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators");
  std::vector<GPoly> out;
  for (const auto& g : gens) {
    require_compatible(g, gens.front());
    if (g.is_zero()) continue;
    GPoly h = to_gpoly(g);
    make_monic(*g.field(), h);
    out.push_back(std::move(h));
  }
  if (out.empty()) throw Error(ErrorCode::EmptyGenerators, "all generators are zero");
  return out;
}

// Buchberger; returns a (non-reduced) basis, or {1} as soon as a unit appears.
std::vector<GPoly> buchberger(const Field& F, std::vector<GPoly> basis) {
  for (const auto& g : basis) {
    if (is_constant(g)) return {g};
  }
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }
  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first, ties by index.
    auto best = pending.begin();
    Exponents best_lcm = lcm(basis[best->first].front().exps, basis[best->second].front().exps);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponents l = lcm(basis[it->first].front().exps, basis[it->second].front().exps);
      if (grevlex_greater(best_lcm, l)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const auto& lti = basis[i].front().exps;
    const auto& ltj = basis[j].front().exps;
    if (coprime(lti, ltj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(basis[k].front().exps, best_lcm)) continue;
      const auto ik = std::minmax(i, k);
      const auto jk = std::minmax(j, k);
      chain = !pending.contains({ik.first, ik.second}) && !pending.contains({jk.first, jk.second});
    }
    if (chain) continue;

    GPoly r = reduce(F, spoly(F, basis[i], basis[j]), basis);
    if (r.empty()) continue;
    make_monic(F, r);
    if (is_constant(r)) return {r};
    const std::size_t idx = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t t = 0; t < idx; ++t) pending.emplace(t, idx);
  }
  return basis;
}

std::vector<GPoly> reduce_basis(const Field& F, std::vector<GPoly> basis) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = basis[j].front().exps;
      const auto& b = basis[i].front().exps;
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GPoly head{minimal[i].front()};
    GPoly tail(minimal[i].begin() + 1, minimal[i].end());
    GPoly rest = reduce(F, std::move(tail), minimal, i);
    head.insert(head.end(), rest.begin(), rest.end());
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const GPoly& a, const GPoly& b) { return grevlex_greater(b.front().exps, a.front().exps); });
  return minimal;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(std::span<const MultiPoly> gens) {
  auto basis = prepare(gens);
  const auto& field = gens.front().field();
  const std::size_t nvars = gens.front().nvars();
  auto reduced = reduce_basis(*field, buchberger(*field, std::move(basis)));
  std::vector<MultiPoly> out;
  out.reserve(reduced.size());
  for (auto& g : reduced) out.push_back(MultiPoly::from_terms(field, nvars, std::move(g)));
  return out;
}

bool ideal_contains_one(std::span<const MultiPoly> gens) {
  auto basis = prepare(gens);
  const auto& field = gens.front().field();
  const auto result = buchberger(*field, std::move(basis));
  return std::any_of(result.begin(), result.end(), [](const GPoly& g) { return is_constant(g); });
}

std::optional<CommonZero> common_zero_search(std::span<const MultiPoly> gens, std::uint32_t max_ext_degree,
                                             std::uint64_t budget) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators");
  if (std::all_of(gens.begin(), gens.end(), [](const MultiPoly& g) { return g.is_zero(); })) {
    throw Error(ErrorCode::EmptyGenerators, "all generators are zero");
  }
  for (const auto& g : gens) require_compatible(g, gens.front());
  const FieldPtr& base = gens.front().field();
  const std::size_t nvars = gens.front().nvars();

  for (std::uint32_t e = 1; e <= max_ext_degree; ++e) {
    std::uint64_t qe = 1;
    for (std::uint32_t i = 0; i < e; ++i) qe *= base->q();
    if (qe > Field::kMaxOrder) break;
    std::uint64_t total = 1;
    bool too_big = false;
    for (std::size_t i = 0; i < nvars; ++i) {
      total *= qe;
      if (total > budget) too_big = true;
    }
    if (too_big) break;

    const FieldEmbedding emb = make_extension(base, e);
    std::vector<MultiPoly> lifted;
    for (const auto& g : gens) {
      if (!g.is_zero()) lifted.push_back(g.embed(emb));
    }
    std::vector<Elem> point(nvars, Elem{0});
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t v = nvars; v-- > 0;) {
        point[v] = Elem{static_cast<std::uint32_t>(r % qe)};
        r /= qe;
      }
      const bool all_zero =
          std::all_of(lifted.begin(), lifted.end(), [&](const MultiPoly& g) { return g.eval(point).code == 0; });
      if (all_zero) return CommonZero{e, emb.ext, point};
    }
  }
  return std::nullopt;
}

}  // namespace ffhyper
