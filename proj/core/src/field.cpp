#include "ffhyper/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "ffhyper/error.hpp"

namespace ffhyper {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

// Dense polynomials over F_p, low to high, used only while constructing fields.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

PrimePoly rem(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return rem(std::move(out), m, p);
}

PrimePoly gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PrimePoly& m, std::uint32_t p) {
  const std::size_t n = m.size() - 1;
  if (n <= 1) return true;
  // m is irreducible iff gcd(x^{p^i} - x, m) = 1 for 1 <= i <= n/2.
  PrimePoly h = rem({0, 1}, m, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    PrimePoly acc{1};
    PrimePoly base = h;
    for (std::uint64_t e = p; e != 0; e >>= 1) {
      if (e & 1) acc = mulmod(acc, base, m, p);
      base = mulmod(base, base, m, p);
    }
    h = acc;
    PrimePoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (gcd(diff, m, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::InvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_odd_prime(std::uint64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t n, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_odd_prime(p)) throw Error(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (n == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^20");
  }

  PrimePoly m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) c %= p;
    trim(m);
    if (m.size() != n + 1) throw Error(ErrorCode::DegreeMismatch, "modulus degree differs from n");
    if (m.back() != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (!is_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
    if (n == 1) m = {0, 1};
  } else if (n == 1) {
    m = {0, 1};
  } else {
    const std::uint64_t tails = q;
    for (std::uint64_t code = 0; code < tails; ++code) {
      PrimePoly cand(n + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < n; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      cand[n] = 1;
      if (is_irreducible(cand, p)) {
        m = std::move(cand);
        break;
      }
    }
  }
  return FieldPtr(new Field(p, n, std::move(m)));
}

FieldPtr Field::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const auto caret = head.find('^');
  const std::uint32_t p = parse_uint(head.substr(0, caret), "characteristic");
  const std::uint32_t n = caret == std::string_view::npos ? 1 : parse_uint(head.substr(caret + 1), "degree");
  if (colon == std::string_view::npos) return create(p, n);

  std::vector<std::uint32_t> coeffs;
  std::string_view rest = spec.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    coeffs.push_back(parse_uint(rest.substr(0, comma), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return create(p, n, std::move(coeffs));
}

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < n_; ++i) q_ *= p_;
  pth_root_exp_ = 1;
  for (std::uint32_t i = 0; i + 1 < n_; ++i) pth_root_exp_ *= p_;
  build_tables();
}

void Field::build_tables() {
  if (n_ > 1) {
    // Find a primitive element by testing orders against the prime factors of q-1.
    const std::uint64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
      Elem r = one();
      while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
      }
      return r;
    };
    Elem gen{0};
    for (std::uint32_t c = 2; c < q_; ++c) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(Elem{c}, order / r) == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = Elem{c};
        break;
      }
    }
    exp_.assign(2 * order, 0);
    log_.assign(q_, 0);
    Elem cur = one();
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = exp_[i + order] = cur.code;
      log_[cur.code] = static_cast<std::uint32_t>(i);
      cur = mul_slow(cur, gen);
    }
  }

  strict_.variant = CharVariant::strict;
  strict_.values.assign(q_, -1);
  strict_.values[0] = 0;
  for (std::uint32_t y = 1; y < q_; ++y) strict_.values[mul(Elem{y}, Elem{y}).code] = 1;
  tilde_ = strict_;
  tilde_.variant = CharVariant::tilde;
  tilde_.values[0] = 1;
}

std::string Field::spec() const {
  if (n_ == 1) return std::to_string(p_);
  std::ostringstream os;
  os << p_ << '^' << n_ << ':';
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

void Field::check(Elem x) const {
  if (!contains(x)) {
    throw Error(ErrorCode::FieldMismatch, "element code " + std::to_string(x.code) + " not in F_" + std::to_string(q_));
  }
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = p_;
  return Elem{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw Error(ErrorCode::DegreeMismatch, "too many coefficients for element");
  std::uint32_t code = 0;
  std::uint32_t scale = 1;
  for (auto c : coeffs) {
    code += (c % p_) * scale;
    scale *= p_;
  }
  return Elem{code};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  std::vector<std::uint32_t> out(n_);
  std::uint32_t c = x.code;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Elem Field::generator() const noexcept {
  if (n_ == 1) return zero();  // root of the placeholder modulus x
  return Elem{p_};
}

Elem Field::add_ext(Elem a, Elem b) const noexcept {
  std::uint32_t out = 0, scale = 1, x = a.code, y = b.code;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem Field::neg_ext(Elem a) const noexcept {
  std::uint32_t out = 0, scale = 1, x = a.code;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    x /= p_;
  }
  return Elem{out};
}

Elem Field::mul_slow(Elem a, Elem b) const {
  return from_coeffs(mulmod(coeffs(a), coeffs(b), modulus_, p_));
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (n_ == 1) return Elem{inv_mod(a.code, p_)};
  return Elem{exp_[(q_ - 1) - log_[a.code]]};
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  if (n_ > 1) return Elem{exp_[static_cast<std::uint64_t>(log_[a.code]) * (e % (q_ - 1)) % (q_ - 1)]};
  std::uint64_t r = 1, b = a.code;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return Elem{static_cast<std::uint32_t>(r)};
}

int Field::quad_char(Elem x, CharVariant variant) const {
  check(x);
  return char_table(variant)(x);
}

bool Field::is_square(Elem x) const {
  check(x);
  return strict_.values[x.code] >= 0;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
  return out;
}

std::string Field::format(Elem x) const {
  if (n_ == 1) return std::to_string(x.code);
  if (x.code == 0) return "0";
  const auto cs = coeffs(x);
  std::string out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (cs[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(cs[i]);
      continue;
    }
    if (cs[i] != 1) out += std::to_string(cs[i]) + '*';
    out += 'g';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
}

Elem FieldEmbedding::operator()(Elem x) const {
  if (base == ext) return x;
  const auto cs = base->coeffs(x);
  Elem out = ext->zero();
  Elem power = ext->one();
  for (auto c : cs) {
    out = ext->add(out, ext->mul(ext->from_int(c), power));
    power = ext->mul(power, image_of_generator);
  }
  return out;
}

FieldEmbedding make_extension(const FieldPtr& base, std::uint32_t e) {
  if (e == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  if (e == 1) return {base, base, base->generator()};
  auto ext = Field::create(base->p(), base->n() * e);
  const auto& m = base->modulus();
  for (std::uint32_t c = 0; c < ext->q(); ++c) {
    Elem acc = ext->zero();
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = ext->add(ext->mul(acc, Elem{c}), ext->from_int(*it));
    if (acc == ext->zero()) return {base, ext, Elem{c}};
  }
  throw Error(ErrorCode::ReducibleModulus, "no root of base modulus in extension");
}

}  // namespace ffhyper
