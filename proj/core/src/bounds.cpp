#include "ffhyper/bounds.hpp"

#include <cmath>

#include "ffhyper/error.hpp"
#include "ffhyper/parallel.hpp"

namespace ffhyper {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e, const CountOptions& options, const char* what) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (base != 0 && out > options.budget_tuples / base) {
      throw Error(ErrorCode::BudgetExceeded, std::string(what) + " exceeds the tuple budget");
    }
    out *= base;
  }
  return out;
}

// Mixed-radix decode of idx into out[from..], base q, lowest digit first.
void decode(std::uint64_t idx, std::uint32_t q, std::vector<Elem>& out, std::size_t from) {
  for (std::size_t i = from; i < out.size(); ++i) {
    out[i] = Elem{static_cast<std::uint32_t>(idx % q)};
    idx /= q;
  }
}

}  // namespace

bool WeilCheck::pass() const noexcept {
  if (!applicable) return true;
  const BigInt r = s > 0 ? s - 1 : 0;
  return BigInt(sum) * sum <= r * r * q;
}

nlohmann::json WeilCheck::to_json() const {
  return {{"sum", sum}, {"s", s}, {"q", q}, {"applicable", applicable}, {"pass", pass()}};
}

WeilCheck weil_check(const UniPoly& g, Elem a) {
  if (g.degree() < 1 || !g.is_monic()) throw Error(ErrorCode::NotMonic, "g must be monic of positive degree");
  const Field& F = *g.field();
  F.check(a);
  if (a.code == 0) throw Error(ErrorCode::InvalidArgument, "a must be nonzero");
  WeilCheck w;
  w.q = F.q();
  for (std::uint32_t x = 0; x < F.q(); ++x) w.sum += F.quad_char(F.mul(a, g.eval(Elem{x})));
  w.s = static_cast<unsigned>(squarefree_part(g).degree());
  w.applicable = !univar_is_const_square(g);
  return w;
}

bool ExceptionalSetX::pass() const {
  const BigInt size(members.size());
  return size <= bound && BigInt(y_count) <= y_bound && BigInt(z_count) <= z_bound;
}

nlohmann::json ExceptionalSetX::to_json() const {
  return {{"size", members.size()},        {"y", y_count},
          {"z", z_count},                  {"constant_members", constant_members},
          {"zero_members", zero_members},  {"n", n},
          {"d", d},                        {"bound", bound.str()},
          {"y_bound", y_bound.str()},      {"z_bound", z_bound.str()},
          {"pass", pass()}};
}

ExceptionalSetX enumerate_X(const MultiPoly& f, bool require_admissible, const CountOptions& options) {
  const std::size_t k = f.nvars();
  if (k < 2) throw Error(ErrorCode::ArityMismatch, "need k >= 2");
  if (f.total_degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "degree must be at least 1");
  const FieldPtr& field = f.field();
  const std::uint32_t q = field->q();
  const std::uint64_t rest = checked_pow(q, k - 2, options, "exceptional set X");
  checked_pow(q, k - 1, options, "exceptional set X");

  ExceptionalSetX out;
  out.n = static_cast<unsigned>(f.degree_in(0));
  out.d = static_cast<unsigned>(f.total_degree());
  const MultiPoly top = expand_in_var(f, 0).back();  // p_n(x_2..x_k)

  struct Slice {
    std::vector<std::vector<Elem>> members;
    std::uint64_t y = 0, z = 0, constants = 0, zeros = 0;
  };
  const auto slices = parallel_map<Slice>(q, options.workers, [&](std::size_t u2) {
    Slice s;
    std::vector<Elem> u(k - 1);
    std::vector<Elem> point(k);
    u[0] = Elem{static_cast<std::uint32_t>(u2)};
    for (std::uint64_t idx = 0; idx < rest; ++idx) {
      decode(idx, q, u, 1);
      for (std::size_t i = 0; i + 1 < k; ++i) point[i + 1] = u[i];
      const UniPoly h = substitute_all_but(f, 0, point);
      if (h.is_zero()) {
        if (require_admissible) throw Error(ErrorCode::NotAdmissible, "f(x1, u) vanishes identically");
        ++s.zeros;
      } else if (!univar_is_const_square(h)) {
        continue;
      } else if (h.degree() == 0) {
        ++s.constants;
      }
      (top.eval(u).code == 0 ? s.y : s.z) += 1;
      s.members.push_back(u);
    }
    return s;
  });
  for (const auto& s : slices) {
    out.members.insert(out.members.end(), s.members.begin(), s.members.end());
    out.y_count += s.y;
    out.z_count += s.z;
    out.constant_members += s.constants;
    out.zero_members += s.zeros;
  }
  const BigInt qk2 = pow(BigInt(q), static_cast<unsigned>(k - 2));
  out.bound = BigInt(out.d) * (out.d + 1) * qk2;
  out.y_bound = BigInt(out.d - out.n) * qk2;
  out.z_bound = BigInt(out.n) * out.d * qk2;
  return out;
}

ExceptionalSetB enumerate_B(const MultiPoly& f, const CountOptions& options) {
  const std::size_t k = f.nvars();
  if (k < 2) throw Error(ErrorCode::ArityMismatch, "need k >= 2");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "enumerate_B of zero");
  const FieldPtr& field = f.field();
  const std::uint32_t q = field->q();
  checked_pow(q, 2 * k - 2, options, "exceptional set B");
  const std::uint64_t rest = checked_pow(q, 2 * k - 3, options, "exceptional set B");
  const std::size_t half = std::size_t{1} << (k - 1);

  const auto slices = parallel_map<std::vector<std::vector<Elem>>>(q, options.workers, [&](std::size_t first) {
    std::vector<std::vector<Elem>> members;
    std::vector<Elem> w(2 * k - 2);
    std::vector<Elem> point(k);
    w[0] = Elem{static_cast<std::uint32_t>(first)};
    for (std::uint64_t idx = 0; idx < rest; ++idx) {
      decode(idx, q, w, 1);
      UniPoly prod = UniPoly::constant(field, field->one());
      for (std::size_t e = 0; e < half && !prod.is_zero(); ++e) {
        for (std::size_t j = 0; j + 1 < k; ++j) point[j + 1] = w[2 * j + ((e >> j) & 1u)];
        prod = prod * substitute_all_but(f, 0, point);
      }
      // The zero polynomial is 0 * 1^2.
      if (prod.is_zero() || univar_is_const_square(prod)) members.push_back(w);
    }
    return members;
  });
  ExceptionalSetB out;
  for (const auto& s : slices) out.members.insert(out.members.end(), s.begin(), s.end());
  const BigInt d(std::max(0, f.total_degree()));
  const BigInt c = d * d + d + BigInt(half) * d * (d + 1);
  out.bound = c * pow(BigInt(q), static_cast<unsigned>(2 * k - 3));
  return out;
}

SlavovResult slavov_count(std::span<const MultiPoly> fs, bool check_condition, const CountOptions& options) {
  if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "empty family");
  if (fs.size() > 20) throw Error(ErrorCode::InvalidArgument, "at most 20 polynomials");
  for (const auto& f : fs) require_compatible(f, fs.front());
  const FieldPtr& field = fs.front().field();
  const std::size_t m = fs.front().nvars();
  const std::uint32_t q = field->q();
  const std::size_t n = fs.size();
  checked_pow(q, m, options, "joint square count");
  const std::uint64_t rest = m == 0 ? 1 : checked_pow(q, m - 1, options, "joint square count");

  const auto slices = parallel_map<std::uint64_t>(m == 0 ? 1 : q, options.workers, [&](std::size_t first) {
    std::uint64_t count = 0;
    std::vector<Elem> point(m);
    if (m > 0) point[0] = Elem{static_cast<std::uint32_t>(first)};
    for (std::uint64_t idx = 0; idx < rest; ++idx) {
      decode(idx, q, point, 1);
      bool all = true;
      for (const auto& f : fs) {
        if (field->quad_char(f.eval(point)) != 1) {
          all = false;
          break;
        }
      }
      count += all;
    }
    return count;
  });
  BigInt observed = 0;
  for (auto c : slices) observed += c;

  int d = 1;
  for (const auto& f : fs) d = std::max(d, f.total_degree());
  const Rational predicted(pow(BigInt(q), static_cast<unsigned>(m)), pow(BigInt(2), static_cast<unsigned>(n)));
  const long double td = 2.0L * d;
  const long double qd = static_cast<long double>(q);
  const long double mm = static_cast<long double>(m);
  const long double env = std::pow(td, 2.0L * n) * std::pow(qd, mm - 0.5L) +
                          std::pow(td, 13.0L * n / 3.0L) * std::pow(qd, mm - 1.0L);

  SlavovResult out{CountReport::make(observed, predicted, static_cast<double>(env * (1 + 1e-12L))), check_condition,
                   {}};
  if (check_condition) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      MultiPoly prod = MultiPoly::constant(field, m, field->one());
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
          prod = prod * fs[i];
          subset.push_back(i);
        }
      }
      if (prod.is_zero() || is_const_square(prod)) out.failing_subsets.push_back(std::move(subset));
    }
  }
  return out;
}

ErrorEnvelope predict_envelope(std::uint64_t q, std::size_t m, std::size_t k, unsigned d) {
  if (k < 2 || m < k || d < 1) throw Error(ErrorCode::InvalidArgument, "need m >= k >= 2 and d >= 1");
  BigInt cmk = 1;
  for (std::size_t i = 0; i < k; ++i) cmk = cmk * (m - i) / (i + 1);
  BigInt mfact = 1;
  for (std::size_t i = 2; i <= m; ++i) mfact *= i;
  const auto c = static_cast<unsigned>(cmk);
  ErrorEnvelope env;
  env.main = Rational(pow(BigInt(q), static_cast<unsigned>(m)), mfact * pow(BigInt(2), c));
  const long double td = 2.0L * d;
  const long double qd = static_cast<long double>(q);
  const long double err = std::pow(td, 2.0L * c) * std::pow(qd, m - 0.5L) +
                          std::pow(td, 13.0L * c / 3.0L) * std::pow(qd, m - 1.0L);
  // Upward rounding: long double slack dominates the conversion error.
  env.err = std::nextafter(static_cast<double>(err * (1 + 1e-12L)), HUGE_VAL);
  return env;
}

std::vector<MultiPoly> subset_family(const MultiPoly& f, std::size_t m) {
  const std::size_t k = f.nvars();
  std::vector<MultiPoly> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return out;
  while (true) {
    out.push_back(f.rename_vars(m, idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

nlohmann::json TupleCrosscheck::to_json() const {
  return {{"N", N.str()},
          {"S", S.str()},
          {"difference", rational_json(difference)},
          {"bound", bound.str()},
          {"pass", pass()}};
}

TupleCrosscheck tuple_count_crosscheck(const Hypergraph& y, std::size_t m, const CountOptions& options) {
  const MultiPoly& f = y.poly();
  const std::size_t k = f.nvars();
  if (m < k) throw Error(ErrorCode::InvalidArgument, "m must be at least k");
  const auto family = subset_family(f, m);
  TupleCrosscheck out;
  out.N = count_m_subsets(y, m, options).observed;
  out.S = slavov_count(family, false, options).report.observed;
  BigInt mfact = 1;
  for (std::size_t i = 2; i <= m; ++i) mfact *= i;
  out.difference = Rational(out.N) - Rational(out.S, mfact);
  const BigInt d(std::max(1, f.total_degree()));
  out.bound = d * family.size() * pow(BigInt(y.order()), static_cast<unsigned>(m - 1));
  return out;
}

nlohmann::json check_record(const std::string& check, const std::string& instance, const std::string& observed,
                            const std::string& bound, bool pass) {
  return {{"check", check}, {"instance", instance}, {"observed", observed}, {"bound", bound}, {"pass", pass}};
}

}  // namespace ffhyper
