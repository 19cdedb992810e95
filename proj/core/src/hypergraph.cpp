#include "ffhyper/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <unordered_map>

#include "ffhyper/bounds.hpp"
#include "ffhyper/error.hpp"
#include "ffhyper/parallel.hpp"

namespace ffhyper {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t pow_sat(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out = mul_sat(out, base);
  return out;
}

std::uint64_t binom_sat(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  // Exact while it fits: C(n, i) * (n - i) is divisible by i + 1.
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    const u128 next = static_cast<u128>(out) * (n - i) / (i + 1);
    if (next > kSaturated) return kSaturated;
    out = static_cast<std::uint64_t>(next);
  }
  return out;
}

void require_budget(std::uint64_t work, const CountOptions& options, const char* what) {
  if (work > options.budget_tuples) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + " needs " +
                                               (work == kSaturated ? std::string("> 2^64") : std::to_string(work)) +
                                               " tuples, budget is " + std::to_string(options.budget_tuples));
  }
}

// Calls fn(idx) for every r-subset of {0..n-1}, idx ascending.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return;
  std::array<std::size_t, kMaxUniformity + 1> idx{};
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(idx.data());
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

struct Hypergraph::Impl {
  FieldPtr field;
  MultiPoly f;
  std::size_t k = 0;
  std::uint32_t q = 0;
  // binom[i][c] = C(c, i) for the combinatorial number system.
  std::vector<std::vector<std::uint64_t>> binom;
  std::vector<std::uint64_t> bits;
  bool eager = false;

  static constexpr std::size_t kShards = 64;
  struct Shard {
    std::mutex mutex;
    std::unordered_map<std::string, bool> values;
  };
  mutable std::array<Shard, kShards> memo;

  bool evaluate(const std::uint32_t* codes) const {
    std::array<Elem, kMaxUniformity> point;
    for (std::size_t i = 0; i < k; ++i) point[i] = Elem{codes[i]};
    return field->is_square(f.eval(std::span<const Elem>(point.data(), k)));
  }

  std::uint64_t rank(const std::uint32_t* sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < k; ++i) r += binom[i + 1][sorted[i]];
    return r;
  }

  bool edge(const std::uint32_t* codes) const {
    std::array<std::uint32_t, kMaxUniformity> s;
    std::copy(codes, codes + k, s.begin());
    std::sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    if (eager) {
      const std::uint64_t r = rank(s.data());
      return (bits[r >> 6] >> (r & 63)) & 1u;
    }
    std::string key(reinterpret_cast<const char*>(s.data()), k * sizeof(std::uint32_t));
    Shard& shard = memo[std::hash<std::string>{}(key) % kShards];
    {
      std::lock_guard lock(shard.mutex);
      if (auto it = shard.values.find(key); it != shard.values.end()) return it->second;
    }
    const bool value = evaluate(s.data());
    std::lock_guard lock(shard.mutex);
    shard.values.emplace(std::move(key), value);
    return value;
  }

  void fill_bitset(unsigned workers) {
    const std::uint64_t total = binom[k][q];
    bits.assign((total + 63) / 64, 0);
    // Subsets whose largest element is `top` occupy one contiguous rank range.
    parallel_map<char>(q, workers, [&](std::size_t top) {
      if (top + 1 < k) return char{0};
      std::array<std::uint32_t, kMaxUniformity> s;
      s[k - 1] = static_cast<std::uint32_t>(top);
      for_each_combination(top, k - 1, [&](const std::size_t* idx) {
        for (std::size_t i = 0; i + 1 < k; ++i) s[i] = static_cast<std::uint32_t>(idx[i]);
        if (evaluate(s.data())) {
          const std::uint64_t r = rank(s.data());
          std::atomic_ref<std::uint64_t>(bits[r >> 6]).fetch_or(std::uint64_t{1} << (r & 63),
                                                                std::memory_order_relaxed);
        }
      });
      return char{0};
    });
    eager = true;
  }
};

Hypergraph Hypergraph::build(const MultiPoly& f, const HypergraphOptions& options) {
  if (f.nvars() < 2 || f.nvars() > kMaxUniformity) {
    throw Error(ErrorCode::ArityMismatch, "uniformity must be between 2 and " + std::to_string(kMaxUniformity));
  }
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "hypergraph of the zero polynomial");
  if (!is_symmetric(f)) throw Error(ErrorCode::NotSymmetric, f.to_string());
  auto impl = std::make_shared<Impl>();
  impl->field = f.field();
  impl->f = f;
  impl->k = f.nvars();
  impl->q = f.field()->q();
  const std::uint64_t subsets = binom_sat(impl->q, impl->k);
  if (subsets <= options.max_bitset_bits) {
    impl->binom.assign(impl->k + 1, std::vector<std::uint64_t>(impl->q + 1, 0));
    for (std::size_t i = 0; i <= impl->k; ++i) {
      for (std::uint32_t c = 0; c <= impl->q; ++c) impl->binom[i][c] = binom_sat(c, i);
    }
    impl->fill_bitset(options.workers);
  }
  return Hypergraph(std::move(impl));
}

Hypergraph Hypergraph::paley(const FieldPtr& field, std::size_t k, const HypergraphOptions& options) {
  if (k < 2 || k > kMaxUniformity) throw Error(ErrorCode::ArityMismatch, "uniformity out of range");
  MultiPoly f(field, k);
  for (std::size_t i = 0; i < k; ++i) f = f + MultiPoly::variable(field, k, i);
  return build(f, options);
}

const FieldPtr& Hypergraph::field() const noexcept { return impl_->field; }
const MultiPoly& Hypergraph::poly() const noexcept { return impl_->f; }
std::size_t Hypergraph::k() const noexcept { return impl_->k; }
std::uint32_t Hypergraph::order() const noexcept { return impl_->q; }
bool Hypergraph::has_bitset() const noexcept { return impl_->eager; }

bool Hypergraph::edge(const std::uint32_t* codes) const { return impl_->edge(codes); }

bool Hypergraph::is_edge(std::span<const Elem> vertices) const {
  if (vertices.size() != impl_->k) {
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(impl_->k) + " vertices");
  }
  std::array<std::uint32_t, kMaxUniformity> codes;
  for (std::size_t i = 0; i < impl_->k; ++i) {
    impl_->field->check(vertices[i]);
    codes[i] = vertices[i].code;
    for (std::size_t j = 0; j < i; ++j) {
      if (codes[j] == codes[i]) throw Error(ErrorCode::DuplicateVertex, impl_->field->format(vertices[i]));
    }
  }
  return impl_->edge(codes.data());
}

BigInt Hypergraph::edge_count(const CountOptions& options) const {
  const Impl& g = *impl_;
  if (g.eager) {
    BigInt total = 0;
    for (auto w : g.bits) total += std::popcount(w);
    return total;
  }
  require_budget(binom_sat(g.q, g.k), options, "edge count");
  const auto per_top = parallel_map<std::uint64_t>(g.q, options.workers, [&](std::size_t top) {
    std::uint64_t count = 0;
    std::array<std::uint32_t, kMaxUniformity> s;
    s[g.k - 1] = static_cast<std::uint32_t>(top);
    for_each_combination(top, g.k - 1, [&](const std::size_t* idx) {
      for (std::size_t i = 0; i + 1 < g.k; ++i) s[i] = static_cast<std::uint32_t>(idx[i]);
      count += g.edge(s.data());
    });
    return count;
  });
  BigInt total = 0;
  for (auto c : per_top) total += c;
  return total;
}

// Patterns

Pattern Pattern::single_edge(std::size_t k) {
  Pattern p{k, k, {}};
  std::vector<std::size_t> e(k);
  for (std::size_t i = 0; i < k; ++i) e[i] = i;
  p.edges.push_back(std::move(e));
  return p;
}

Pattern Pattern::empty(std::size_t s, std::size_t k) { return Pattern{s, k, {}}; }

Pattern Pattern::path(std::size_t s) {
  Pattern p{s, 2, {}};
  for (std::size_t i = 0; i + 1 < s; ++i) p.edges.push_back({i, i + 1});
  return p;
}

bool Pattern::has_edge(std::vector<std::size_t> subset) const {
  std::sort(subset.begin(), subset.end());
  return std::find(edges.begin(), edges.end(), subset) != edges.end();
}

// EPO counting

EpoCounts epo_parity_counts(const Hypergraph& y, const CountOptions& options) {
  const std::size_t k = y.k();
  const std::uint32_t q = y.order();
  require_budget(pow_sat(q, 2 * k), options, "EPO count");
  struct Pair {
    std::uint64_t even = 0, odd = 0;
  };
  // v[2i + e] holds u_{i+1}(e); the outer coordinate is u_1(0).
  const auto slices = parallel_map<Pair>(q, options.workers, [&](std::size_t first) {
    Pair out;
    std::vector<std::uint32_t> v(2 * k);
    std::vector<char> used(q, 0);
    v[0] = static_cast<std::uint32_t>(first);
    used[first] = 1;
    std::array<std::uint32_t, kMaxUniformity> codes;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == 2 * k) {
        unsigned edges = 0;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          for (std::size_t i = 0; i < k; ++i) codes[i] = v[2 * i + ((mask >> i) & 1u)];
          edges += y.edge(codes.data());
        }
        (edges % 2 == 0 ? out.even : out.odd) += 1;
        return;
      }
      for (std::uint32_t c = 0; c < q; ++c) {
        if (used[c]) continue;
        used[c] = 1;
        v[pos] = c;
        self(self, pos + 1);
        used[c] = 0;
      }
    };
    rec(rec, 1);
    return out;
  });
  EpoCounts total{0, 0};
  for (const auto& s : slices) {
    total.even += s.even;
    total.odd += s.odd;
  }
  return total;
}

CountReport count_epo_direct(const Hypergraph& y, const CountOptions& options) {
  const EpoCounts c = epo_parity_counts(y, options);
  const BigInt q2k = pow(BigInt(y.order()), static_cast<unsigned>(2 * y.k()));
  return CountReport::make(c.even, Rational(q2k, 2));
}

nlohmann::json CharsumReport::to_json() const {
  return {{"S", S.str()},
          {"estimate", rational_json(estimate)},
          {"method", method == CharsumMethod::factored ? "factored" : "naive"}};
}

namespace {

// chi(f(a)) for every a in F^k, indexed by sum a_i q^i.
std::vector<std::int8_t> char_values(const Hypergraph& y, unsigned workers) {
  const std::size_t k = y.k();
  const std::uint32_t q = y.order();
  const Field& F = *y.field();
  const MultiPoly& f = y.poly();
  const std::uint64_t rest = pow_sat(q, k - 1);
  const auto slices = parallel_map<std::vector<std::int8_t>>(q, workers, [&](std::size_t a0) {
    std::vector<std::int8_t> out(rest);
    std::vector<Elem> point(k);
    point[0] = Elem{static_cast<std::uint32_t>(a0)};
    for (std::uint64_t idx = 0; idx < rest; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = 1; i < k; ++i) {
        point[i] = Elem{static_cast<std::uint32_t>(r % q)};
        r /= q;
      }
      out[idx] = static_cast<std::int8_t>(F.quad_char(f.eval(point)));
    }
    return out;
  });
  std::vector<std::int8_t> table(rest * q);
  for (std::uint32_t a0 = 0; a0 < q; ++a0) {
    for (std::uint64_t idx = 0; idx < rest; ++idx) table[a0 + idx * q] = slices[a0][idx];
  }
  return table;
}

}  // namespace

CharsumReport count_epo_charsum(const Hypergraph& y, CharsumMethod method, const CountOptions& options) {
  const std::size_t k = y.k();
  const std::uint32_t q = y.order();
  const std::uint64_t q2k = pow_sat(q, 2 * k);
  if (q2k >= (std::uint64_t{1} << 62)) throw Error(ErrorCode::BudgetExceeded, "q^{2k} exceeds 2^62");
  require_budget(method == CharsumMethod::factored ? pow_sat(q, 2 * k - 1) : q2k, options, "character sum");
  require_budget(pow_sat(q, k), options, "character table");
  const auto chi = char_values(y, options.workers);

  std::vector<std::uint64_t> qpow(k + 1, 1);
  for (std::size_t i = 1; i <= k; ++i) qpow[i] = qpow[i - 1] * q;

  std::vector<std::int64_t> slices;
  if (method == CharsumMethod::factored) {
    // Slice on u_2(0); the remaining 2k-3 coordinates of u' run in mixed radix.
    const std::uint64_t inner = pow_sat(q, 2 * k - 3);
    const std::size_t half = std::size_t{1} << (k - 1);
    slices = parallel_map<std::int64_t>(q, options.workers, [&](std::size_t s) {
      std::int64_t acc = 0;
      std::vector<std::uint32_t> w(2 * (k - 1));
      std::vector<std::uint64_t> off(half);
      w[0] = static_cast<std::uint32_t>(s);
      for (std::uint64_t idx = 0; idx < inner; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t j = 1; j < w.size(); ++j) {
          w[j] = static_cast<std::uint32_t>(r % q);
          r /= q;
        }
        for (std::size_t e = 0; e < half; ++e) {
          std::uint64_t o = 0;
          for (std::size_t j = 0; j + 1 < k; ++j) o += w[2 * j + ((e >> j) & 1u)] * qpow[j + 1];
          off[e] = o;
        }
        std::int64_t T = 0;
        for (std::uint32_t x = 0; x < q; ++x) {
          int prod = 1;
          for (std::size_t e = 0; e < half && prod != 0; ++e) prod *= chi[x + off[e]];
          T += prod;
        }
        acc += T * T;
      }
      return acc;
    });
  } else {
    const std::uint64_t inner = pow_sat(q, 2 * k - 1);
    const std::size_t full = std::size_t{1} << k;
    slices = parallel_map<std::int64_t>(q, options.workers, [&](std::size_t s) {
      std::int64_t acc = 0;
      std::vector<std::uint32_t> u(2 * k);
      u[0] = static_cast<std::uint32_t>(s);
      for (std::uint64_t idx = 0; idx < inner; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t j = 1; j < u.size(); ++j) {
          u[j] = static_cast<std::uint32_t>(r % q);
          r /= q;
        }
        int prod = 1;
        for (std::size_t e = 0; e < full && prod != 0; ++e) {
          std::uint64_t o = 0;
          for (std::size_t i = 0; i < k; ++i) o += u[2 * i + ((e >> i) & 1u)] * qpow[i];
          prod *= chi[o];
        }
        acc += prod;
      }
      return acc;
    });
  }
  CharsumReport out;
  out.method = method;
  out.S = 0;
  for (auto v : slices) out.S += v;
  out.estimate = Rational(BigInt(q2k), 2) + Rational(out.S, 2);
  return out;
}

// Induced pattern counts

CountReport count_labeled_induced(const Hypergraph& y, const Pattern& pattern, const CountOptions& options) {
  const std::size_t k = y.k();
  const std::uint32_t q = y.order();
  const std::size_t s = pattern.s;
  if (pattern.k != k) throw Error(ErrorCode::ArityMismatch, "pattern uniformity differs from the hypergraph");
  if (s < k) throw Error(ErrorCode::InvalidArgument, "pattern needs at least k vertices");
  for (const auto& e : pattern.edges) {
    if (e.size() != k || !std::is_sorted(e.begin(), e.end()) || e.back() >= s ||
        std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::InvalidArgument, "pattern edge is not a sorted k-subset of its vertices");
    }
  }
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < s; ++i) work = mul_sat(work, q > i ? q - i : 0);
  require_budget(work, options, "induced count");

  // When vertex j is placed, check every k-subset whose largest member is j.
  struct Check {
    std::vector<std::size_t> others;
    bool expected;
  };
  std::vector<std::vector<Check>> checks(s);
  for (std::size_t j = k - 1; j < s; ++j) {
    for_each_combination(j, k - 1, [&](const std::size_t* idx) {
      Check c{std::vector<std::size_t>(idx, idx + k - 1), false};
      auto full = c.others;
      full.push_back(j);
      c.expected = pattern.has_edge(full);
      checks[j].push_back(std::move(c));
    });
  }

  const auto slices = parallel_map<std::uint64_t>(q, options.workers, [&](std::size_t first) {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> v(s);
    std::vector<char> used(q, 0);
    std::array<std::uint32_t, kMaxUniformity> codes;
    v[0] = static_cast<std::uint32_t>(first);
    used[first] = 1;
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == s) {
        ++count;
        return;
      }
      for (std::uint32_t c = 0; c < q; ++c) {
        if (used[c]) continue;
        v[j] = c;
        bool ok = true;
        for (const auto& chk : checks[j]) {
          for (std::size_t i = 0; i + 1 < k; ++i) codes[i] = v[chk.others[i]];
          codes[k - 1] = c;
          if (y.edge(codes.data()) != chk.expected) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        used[c] = 1;
        self(self, j + 1);
        used[c] = 0;
      }
    };
    rec(rec, 1);
    return count;
  });
  BigInt observed = 0;
  for (auto c : slices) observed += c;
  const BigInt sk = binom_sat(s, k);
  const Rational predicted(pow(BigInt(q), static_cast<unsigned>(s)), pow(BigInt(2), static_cast<unsigned>(sk)));
  return CountReport::make(observed, predicted);
}

namespace {

// True iff every k-set made of (k-2) members of clique plus v and w is an edge.
bool extends(const Hypergraph& y, const std::vector<std::uint32_t>& clique, std::uint32_t v, std::uint32_t w) {
  const std::size_t k = y.k();
  std::array<std::uint32_t, kMaxUniformity> codes;
  codes[k - 2] = v;
  codes[k - 1] = w;
  bool ok = true;
  if (clique.size() + 2 < k) return true;
  for_each_combination(clique.size(), k - 2, [&](const std::size_t* idx) {
    if (!ok) return;
    for (std::size_t i = 0; i + 2 < k; ++i) codes[i] = clique[idx[i]];
    ok = y.edge(codes.data());
  });
  return ok;
}

std::vector<std::uint32_t> filter_candidates(const Hypergraph& y, const std::vector<std::uint32_t>& clique,
                                             std::uint32_t v, std::span<const std::uint32_t> cand) {
  std::vector<std::uint32_t> out;
  out.reserve(cand.size());
  for (auto w : cand) {
    if (extends(y, clique, v, w)) out.push_back(w);
  }
  return out;
}

}  // namespace

CountReport count_m_subsets(const Hypergraph& y, std::size_t m, const CountOptions& options) {
  const std::size_t k = y.k();
  const std::uint32_t q = y.order();
  if (m < k) throw Error(ErrorCode::InvalidArgument, "m must be at least k");
  const int d = std::max(1, y.poly().total_degree());
  const ErrorEnvelope env = predict_envelope(q, m, k, static_cast<unsigned>(d));
  if (m > q) return CountReport::make(0, env.main, env.err);

  const auto slices = parallel_map<std::uint64_t>(q, options.workers, [&](std::size_t first) {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> clique;
    std::vector<std::uint32_t> all;
    for (std::uint32_t w = static_cast<std::uint32_t>(first) + 1; w < q; ++w) all.push_back(w);
    const auto v0 = static_cast<std::uint32_t>(first);
    auto rec = [&](auto&& self, const std::vector<std::uint32_t>& cand) -> void {
      // clique holds |clique| members; every vertex in cand extends it.
      if (clique.size() + 1 == m) {
        count += cand.size();
        return;
      }
      const std::size_t need = m - clique.size() - 1;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (cand.size() - i < need + 1) return;
        const auto v = cand[i];
        auto next = filter_candidates(y, clique, v, std::span(cand).subspan(i + 1));
        if (next.size() < need) continue;
        clique.push_back(v);
        self(self, next);
        clique.pop_back();
      }
    };
    auto cand = filter_candidates(y, clique, v0, all);
    clique.push_back(v0);
    rec(rec, cand);
    return count;
  });
  BigInt observed = 0;
  for (auto c : slices) observed += c;
  return CountReport::make(observed, env.main, env.err);
}

CliqueResult omega_clique(const Hypergraph& y, std::uint64_t budget_nodes) {
  const std::size_t k = y.k();
  const std::uint32_t q = y.order();

  // Order by the number of edges through each vertex, sampled for k >= 3 on big fields.
  std::vector<std::uint64_t> score(q, 0);
  std::array<std::uint32_t, kMaxUniformity> codes;
  const std::uint64_t per_vertex = binom_sat(q - 1, k - 1);
  constexpr std::uint64_t kSample = 4096;
  for (std::uint32_t v = 0; v < q; ++v) {
    if (per_vertex <= kSample) {
      for_each_combination(q - 1, k - 1, [&](const std::size_t* idx) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
          codes[i] = static_cast<std::uint32_t>(idx[i] >= v ? idx[i] + 1 : idx[i]);
        }
        codes[k - 1] = v;
        score[v] += y.edge(codes.data());
      });
    } else {
      // Fixed-seed LCG sample of (k-1)-sets of other vertices.
      std::uint64_t state = 0x9e3779b97f4a7c15ull ^ v;
      for (std::uint64_t t = 0; t < kSample; ++t) {
        std::size_t filled = 0;
        while (filled + 1 < k) {
          state = state * 6364136223846793005ull + 1442695040888963407ull;
          const auto c = static_cast<std::uint32_t>((state >> 33) % q);
          if (c == v || std::find(codes.begin(), codes.begin() + static_cast<std::ptrdiff_t>(filled), c) !=
                            codes.begin() + static_cast<std::ptrdiff_t>(filled)) {
            continue;
          }
          codes[filled++] = c;
        }
        codes[k - 1] = v;
        score[v] += y.edge(codes.data());
      }
    }
  }
  std::vector<std::uint32_t> order(q);
  for (std::uint32_t v = 0; v < q; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return score[a] > score[b]; });

  CliqueResult best;
  std::vector<std::uint32_t> clique;
  std::vector<std::uint32_t> best_codes;
  bool aborted = false;
  auto rec = [&](auto&& self, const std::vector<std::uint32_t>& cand) -> void {
    if (++best.nodes > budget_nodes) {
      aborted = true;
      return;
    }
    if (clique.size() > best_codes.size()) best_codes = clique;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (aborted || clique.size() + (cand.size() - i) <= best_codes.size()) return;
      const auto v = cand[i];
      auto next = filter_candidates(y, clique, v, std::span(cand).subspan(i + 1));
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };
  rec(rec, order);
  best.size = best_codes.size();
  best.exact = !aborted;
  std::sort(best_codes.begin(), best_codes.end());
  for (auto c : best_codes) best.clique.push_back(Elem{c});
  return best;
}

}  // namespace ffhyper
