#include "ffhyper/multipoly.hpp"

#include <algorithm>
#include <map>

#include "ffhyper/error.hpp"

namespace ffhyper {

std::uint32_t exponent_sum(const Exponents& e) noexcept {
  std::uint32_t s = 0;
  for (auto v : e) s += v;
  return s;
}

bool grlex_greater(const Exponents& a, const Exponents& b) noexcept {
  const auto da = exponent_sum(a), db = exponent_sum(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept { return grlex_greater(a, b); }
};

bool divides(const Exponents& a, const Exponents& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Merge two sorted term lists: a + sign * b.
std::vector<Term> merge(const Field& F, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
      out.push_back({b[j].exps, subtract ? F.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      const Elem c = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (c.code != 0) out.push_back({a[i].exps, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::ArityMismatch,
                "polynomials in " + std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()) + " variables");
  }
}

MultiPoly MultiPoly::from_terms(FieldPtr field, std::size_t nvars, std::vector<Term> terms) {
  std::map<Exponents, Elem, GrlexGreater> acc;
  for (auto& t : terms) {
    if (t.exps.size() != nvars) throw Error(ErrorCode::ArityMismatch, "exponent vector length differs from nvars");
    field->check(t.coeff);
    auto [it, inserted] = acc.try_emplace(std::move(t.exps), t.coeff);
    if (!inserted) it->second = field->add(it->second, t.coeff);
  }
  MultiPoly out(std::move(field), nvars);
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c.code != 0) out.terms_.push_back({e, c});
  }
  return out;
}

MultiPoly MultiPoly::constant(FieldPtr field, std::size_t nvars, Elem c) {
  MultiPoly out(std::move(field), nvars);
  out.field_->check(c);
  if (c.code != 0) out.terms_.push_back({Exponents(nvars, 0), c});
  return out;
}

MultiPoly MultiPoly::constant(FieldPtr field, std::size_t nvars, std::int64_t c) {
  const Elem e = field->from_int(c);
  return constant(std::move(field), nvars, e);
}

MultiPoly MultiPoly::variable(FieldPtr field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  const Elem one = field->one();
  return monomial(std::move(field), std::move(e), one);
}

MultiPoly MultiPoly::monomial(FieldPtr field, Exponents exps, Elem c) {
  MultiPoly out(std::move(field), exps.size());
  out.field_->check(c);
  if (c.code != 0) out.terms_.push_back({std::move(exps), c});
  return out;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_[0].exps) == 0);
}

Elem MultiPoly::constant_value() const noexcept {
  if (terms_.empty()) return Elem{0};
  const auto& last = terms_.back();
  return exponent_sum(last.exps) == 0 ? last.coeff : Elem{0};
}

int MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(exponent_sum(terms_.front().exps));
}

int MultiPoly::degree_in(std::size_t var) const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[var]));
  return d;
}

bool MultiPoly::uses_var(std::size_t var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exps[var] != 0; });
}

Elem MultiPoly::eval(std::span<const Elem> point) const {
  if (point.size() != nvars_) {
    throw Error(ErrorCode::ArityMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(nvars_));
  }
  const Field& F = *field_;
  for (auto x : point) F.check(x);
  Elem acc = F.zero();
  for (const auto& t : terms_) {
    Elem m = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exps[i]) m = F.mul(m, F.pow(point[i], t.exps[i]));
    }
    acc = F.add(acc, m);
  }
  return acc;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading_coeff()));
}

MultiPoly MultiPoly::scaled(Elem c) const {
  MultiPoly out(field_, nvars_);
  if (c.code == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = field_->mul(t.coeff, c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, nvars_, field_->one());
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    const Elem c = field_->mul(t.coeff, field_->from_int(t.exps[var]));
    if (c.code == 0) continue;
    Exponents e = t.exps;
    --e[var];
    out.push_back({std::move(e), c});
  }
  return from_terms(field_, nvars_, std::move(out));
}

MultiPoly MultiPoly::pth_root() const {
  const std::uint32_t p = field_->p();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponents e = t.exps;
    for (auto& v : e) {
      if (v % p != 0) throw Error(ErrorCode::InvalidArgument, "polynomial is not a p-th power");
      v /= p;
    }
    out.push_back({std::move(e), field_->pth_root(t.coeff)});
  }
  return from_terms(field_, nvars_, std::move(out));
}

MultiPoly MultiPoly::swap_vars(std::size_t i, std::size_t j) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) std::swap(t.exps[i], t.exps[j]);
  return from_terms(field_, nvars_, std::move(out));
}

MultiPoly MultiPoly::rename_vars(std::size_t target_nvars, std::span<const std::size_t> targets) const {
  if (targets.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "rename map length differs from nvars");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (targets[i] >= target_nvars) throw Error(ErrorCode::ArityMismatch, "rename target out of range");
      e[targets[i]] += t.exps[i];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return from_terms(field_, target_nvars, std::move(out));
}

MultiPoly MultiPoly::embed(const FieldEmbedding& emb) const {
  require_same_field(field_, emb.base);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.exps, emb(t.coeff)});
  return from_terms(emb.ext, nvars_, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = field_->neg(t.coeff);
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  MultiPoly out(a.field_, a.nvars_);
  out.terms_ = merge(*a.field_, a.terms_, b.terms_, false);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  MultiPoly out(a.field_, a.nvars_);
  out.terms_ = merge(*a.field_, a.terms_, b.terms_, true);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  const Field& F = *a.field_;
  std::map<Exponents, Elem, GrlexGreater> acc;
  Exponents e(a.nvars_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exps[i] + t.exps[i];
      const Elem c = F.mul(s.coeff, t.coeff);
      auto [it, inserted] = acc.try_emplace(e, c);
      if (!inserted) it->second = F.add(it->second, c);
    }
  }
  MultiPoly out(a.field_, a.nvars_);
  out.terms_.reserve(acc.size());
  for (auto& [ex, c] : acc) {
    if (c.code != 0) out.terms_.push_back({ex, c});
  }
  return out;
}

// r - t * g, where multiplying by a monomial preserves the term order.
MultiPoly sub_scaled_shift(const MultiPoly& r, const Term& t, const MultiPoly& g) {
  const Field& F = *r.field_;
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const auto& s : g.terms_) {
    Exponents e = s.exps;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exps[i];
    shifted.push_back({std::move(e), F.mul(s.coeff, t.coeff)});
  }
  MultiPoly out(r.field_, r.nvars_);
  out.terms_ = merge(F, r.terms_, shifted, true);
  return out;
}

MultiPoly partial_eval(const MultiPoly& f, std::size_t var, Elem value) {
  if (var >= f.nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  const Field& F = *f.field();
  F.check(value);
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Exponents e;
    e.reserve(f.nvars() - 1);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (i != var) e.push_back(t.exps[i]);
    }
    out.push_back({std::move(e), F.mul(t.coeff, F.pow(value, t.exps[var]))});
  }
  return MultiPoly::from_terms(f.field(), f.nvars() - 1, std::move(out));
}

bool is_symmetric(const MultiPoly& f) {
  for (std::size_t i = 0; i + 1 < f.nvars(); ++i) {
    if (f.swap_vars(i, i + 1) != f) return false;
  }
  return true;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  const int d = f.degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d + 1));
  for (const auto& t : f.terms()) {
    Exponents e = t.exps;
    const auto j = e[var];
    e[var] = 0;
    buckets[j].push_back({std::move(e), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(f.field(), f.nvars(), std::move(b)));
  return out;
}

std::vector<MultiPoly> expand_in_var(const MultiPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  const int d = f.degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d + 1));
  for (const auto& t : f.terms()) {
    Exponents e;
    e.reserve(f.nvars() - 1);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (i != var) e.push_back(t.exps[i]);
    }
    buckets[t.exps[var]].push_back({std::move(e), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(f.field(), f.nvars() - 1, std::move(b)));
  return out;
}

UniPoly substitute_all_but(const MultiPoly& f, std::size_t var, std::span<const Elem> values) {
  if (values.size() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "value vector length differs from nvars");
  const Field& F = *f.field();
  std::vector<Elem> coeffs(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1, F.zero());
  for (const auto& t : f.terms()) {
    Elem m = t.coeff;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (i != var && t.exps[i]) m = F.mul(m, F.pow(values[i], t.exps[i]));
    }
    auto& slot = coeffs[t.exps[var]];
    slot = F.add(slot, m);
  }
  return UniPoly(f.field(), std::move(coeffs));
}

UniPoly to_unipoly(const MultiPoly& f, std::size_t var) {
  std::vector<Elem> coeffs(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1, f.field()->zero());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (i != var && t.exps[i]) throw Error(ErrorCode::ArityMismatch, "polynomial uses more than one variable");
    }
    coeffs[t.exps[var]] = t.coeff;
  }
  return UniPoly(f.field(), std::move(coeffs));
}

MultiPoly from_unipoly(const UniPoly& h, std::size_t nvars, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    if (h.coeffs()[i].code == 0) continue;
    Exponents e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(i);
    terms.push_back({std::move(e), h.coeffs()[i]});
  }
  return MultiPoly::from_terms(h.field(), nvars, std::move(terms));
}

std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
  require_compatible(f, g);
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const Field& F = *f.field();
  const Term& lead = g.leading_term();
  const Elem lead_inv = F.inv(lead.coeff);
  std::vector<Term> quotient;
  MultiPoly r = f;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!divides(lead.exps, lt.exps)) return std::nullopt;
    Term t{lt.exps, F.mul(lt.coeff, lead_inv)};
    for (std::size_t i = 0; i < t.exps.size(); ++i) t.exps[i] -= lead.exps[i];
    r = sub_scaled_shift(r, t, g);
    quotient.push_back(std::move(t));
  }
  return MultiPoly::from_terms(f.field(), f.nvars(), std::move(quotient));
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_divide(f, g);
  if (!q) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return *std::move(q);
}

namespace {

int highest_var(const MultiPoly& f) {
  for (int v = static_cast<int>(f.nvars()) - 1; v >= 0; --v) {
    if (f.uses_var(static_cast<std::size_t>(v))) return v;
  }
  return -1;
}

MultiPoly one_like(const MultiPoly& f) { return MultiPoly::constant(f.field(), f.nvars(), f.field()->one()); }

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  MultiPoly c(f.field(), f.nvars());
  for (auto& coeff : coefficients_in(f, var)) {
    if (coeff.is_zero()) continue;
    c = multivar_gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

MultiPoly primitive_part_in(const MultiPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  return divide_exact(f, content_in(f, var)).monic();
}

// Pseudo-remainder of a by b with respect to x_var.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const MultiPoly lcb = coefficients_in(b, var).back();
  MultiPoly r = a;
  while (!r.is_zero()) {
    const int dr = r.degree_in(var);
    if (dr < db) break;
    const MultiPoly lcr = coefficients_in(r, var).back();
    Exponents shift(r.nvars(), 0);
    shift[var] = static_cast<std::uint32_t>(dr - db);
    const MultiPoly mono = MultiPoly::monomial(r.field(), std::move(shift), r.field()->one());
    r = lcb * r - lcr * mono * b;
  }
  return r;
}

}  // namespace

MultiPoly multivar_gcd(const MultiPoly& f, const MultiPoly& g) {
  require_compatible(f, g);
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return one_like(f);

  const int v = std::max(highest_var(f), highest_var(g));
  const auto var = static_cast<std::size_t>(v);
  if (!f.uses_var(var)) return multivar_gcd(f, content_in(g, var));
  if (!g.uses_var(var)) return multivar_gcd(content_in(f, var), g);

  const MultiPoly cf = content_in(f, var);
  const MultiPoly cg = content_in(g, var);
  const MultiPoly content = multivar_gcd(cf, cg);

  MultiPoly a = divide_exact(f, cf);
  MultiPoly b = divide_exact(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    MultiPoly r = prem(a, b, var);
    a = std::move(b);
    b = primitive_part_in(r, var);
  }
  const MultiPoly pp = a.degree_in(var) <= 0 ? one_like(f) : a;
  return (content * pp).monic();
}

namespace {

// Musser's algorithm with the p-th root step for characteristic p.
void musser(const MultiPoly& f, unsigned scale, std::vector<std::pair<MultiPoly, unsigned>>& out) {
  MultiPoly c = f;
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    const MultiPoly d = f.derivative(v);
    if (!d.is_zero()) c = multivar_gcd(c, d);
  }
  MultiPoly w = divide_exact(f, c);
  unsigned i = 1;
  while (!w.is_constant()) {
    MultiPoly y = multivar_gcd(w, c);
    MultiPoly z = divide_exact(w, y);
    if (!z.is_constant()) out.emplace_back(z.monic(), i * scale);
    ++i;
    c = divide_exact(c, y);
    w = std::move(y);
  }
  if (!c.is_constant()) musser(c.monic().pth_root().monic(), scale * f.field()->p(), out);
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const MultiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  SquarefreeDecomposition out{f.leading_coeff(), {}};
  if (!f.is_constant()) musser(f.monic(), 1, out.factors);
  return out;
}

MultiPoly squarefree_part(const MultiPoly& f) {
  const auto dec = squarefree_decomposition(f);
  MultiPoly acc = one_like(f);
  for (const auto& [g, e] : dec.factors) acc = acc * g;
  return acc;
}

bool is_const_square(const MultiPoly& f) {
  const auto dec = squarefree_decomposition(f);
  return std::all_of(dec.factors.begin(), dec.factors.end(), [](const auto& fe) { return fe.second % 2 == 0; });
}

std::optional<std::pair<Elem, MultiPoly>> const_square_split(const MultiPoly& f) {
  const auto dec = squarefree_decomposition(f);
  MultiPoly g = one_like(f);
  for (const auto& [h, e] : dec.factors) {
    if (e % 2 == 1) return std::nullopt;
    g = g * h.pow(e / 2);
  }
  return std::make_pair(dec.unit, g);
}

std::uint64_t zero_count(const MultiPoly& f, std::uint64_t budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero_count of the zero polynomial");
  const std::uint64_t q = f.field()->q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    total *= q;
    if (total > budget) throw Error(ErrorCode::BudgetExceeded, "q^k exceeds the enumeration budget");
  }
  std::vector<Elem> point(f.nvars(), Elem{0});
  std::uint64_t zeros = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (auto& x : point) {
      x = Elem{static_cast<std::uint32_t>(r % q)};
      r /= q;
    }
    if (f.eval(point).code == 0) ++zeros;
  }
  return zeros;
}

}  // namespace ffhyper
