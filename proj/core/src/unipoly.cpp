#include "ffhyper/unipoly.hpp"

#include "ffhyper/error.hpp"

namespace ffhyper {

UniPoly::UniPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) field_->check(c);
  trim();
}

UniPoly UniPoly::constant(FieldPtr field, Elem c) { return UniPoly(std::move(field), {c}); }

UniPoly UniPoly::x(FieldPtr field) {
  auto zero = field->zero(), one = field->one();
  return UniPoly(std::move(field), {zero, one});
}

UniPoly UniPoly::from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> cs;
  cs.reserve(coeffs.size());
  for (auto c : coeffs) cs.push_back(field->from_int(c));
  return UniPoly(std::move(field), std::move(cs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

Elem UniPoly::eval(Elem x) const {
  const Field& F = *field_;
  Elem acc = F.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(field_);
  std::vector<Elem> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i)), coeffs_[i]);
  }
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

UniPoly UniPoly::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::pth_root() const {
  const std::uint32_t p = field_->p();
  std::vector<Elem> out(coeffs_.empty() ? 0 : (coeffs_.size() - 1) / p + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].code == 0) continue;
    if (i % p != 0) throw Error(ErrorCode::InvalidArgument, "polynomial is not a p-th power");
    out[i / p] = field_->pth_root(coeffs_[i]);
  }
  return UniPoly(field_, std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_->add(a.coeff(i), b.coeff(i));
  return UniPoly(a.field_, std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_->sub(a.coeff(i), b.coeff(i));
  return UniPoly(a.field_, std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const Field& F = *a.field_;
  std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].code == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return UniPoly(a.field_, std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Elem c = coeffs_[static_cast<std::size_t>(i)];
    if (c.code == 0) continue;
    if (!out.empty()) out += '+';
    const bool bare = field_->in_prime_subfield(c);
    const std::string cs = bare ? field_->format(c) : "(" + field_->format(c) + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != field_->one()) out += cs + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const Field& F = *a.field();
  std::vector<Elem> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(a.field()), a};
  std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - db + 1), F.zero());
  const Elem lead_inv = F.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = F.mul(r[static_cast<std::size_t>(i)], lead_inv);
    if (c.code == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = F.sub(slot, F.mul(c, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  return {UniPoly(a.field(), std::move(quot)), UniPoly(a.field(), std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

void musser(const UniPoly& f, unsigned scale, std::vector<std::pair<UniPoly, unsigned>>& out) {
  // f monic and nonconstant.
  UniPoly c = gcd(f, f.derivative());
  UniPoly w = divmod(f, c).first;
  unsigned i = 1;
  while (!w.is_constant()) {
    UniPoly y = gcd(w, c);
    UniPoly z = divmod(w, y).first;
    if (!z.is_constant()) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = std::move(y);
    c = divmod(c, w).first;
  }
  if (!c.is_constant()) musser(c.monic().pth_root().monic(), scale * f.field()->p(), out);
}

}  // namespace

UniSquarefreeDecomposition squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  UniSquarefreeDecomposition out{f.lead(), {}};
  if (!f.is_constant()) musser(f.monic(), 1, out.factors);
  return out;
}

UniPoly squarefree_part(const UniPoly& f) {
  const auto dec = squarefree_decomposition(f);
  UniPoly acc = UniPoly::constant(f.field(), f.field()->one());
  for (const auto& [g, e] : dec.factors) acc = acc * g;
  return acc;
}

bool univar_is_const_square(const UniPoly& h) {
  const auto dec = squarefree_decomposition(h);
  for (const auto& [g, e] : dec.factors) {
    if (e % 2 == 1) return false;
  }
  return true;
}

}  // namespace ffhyper
