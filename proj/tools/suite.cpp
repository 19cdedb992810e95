#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "cli.hpp"
#include "ffhyper/admissible.hpp"
#include "ffhyper/bounds.hpp"
#include "ffhyper/error.hpp"
#include "ffhyper/groebner.hpp"
#include "ffhyper/hypergraph.hpp"
#include "ffhyper/parse.hpp"
#include "ffhyper/random.hpp"

namespace ffhyper::cli {

using nlohmann::json;

namespace {

class Recorder {
 public:
  void add(const std::string& check, const std::string& instance, const std::string& observed,
           const std::string& bound, bool pass, bool asserted = true) {
    json r = check_record(check, instance, observed, bound, pass);
    if (!asserted) r["asserted"] = false;
    records_.push_back(std::move(r));
    if (asserted && !pass) ok_ = false;
  }
  template <class A, class B>
  void add_num(const std::string& check, const std::string& instance, const A& observed, const B& bound, bool pass,
               bool asserted = true) {
    add(check, instance, to_s(observed), to_s(bound), pass, asserted);
  }
  bool ok() const { return ok_; }
  json records() const { return records_; }

 private:
  template <class T>
  static std::string to_s(const T& v) {
    if constexpr (std::is_convertible_v<T, std::string>) {
      return std::string(v);
    } else if constexpr (std::is_same_v<T, BigInt>) {
      return v.str();
    } else if constexpr (std::is_same_v<T, Rational>) {
      return denominator(v) == 1 ? numerator(v).str() : numerator(v).str() + "/" + denominator(v).str();
    } else {
      return std::to_string(v);
    }
  }
  json records_ = json::array();
  bool ok_ = true;
};

struct Ctx {
  unsigned workers;
  CountOptions count() const { return {std::uint64_t{1} << 36, workers}; }
  HypergraphOptions graph() const { return {std::uint64_t{1} << 26, workers}; }
};

using CheckFn = std::function<void(Recorder&, const Ctx&)>;

const std::vector<std::uint32_t> kOddPrimePowersTo121{3,  5,  7,  9,  11, 13, 17, 19, 23, 25, 27,  29,  31,  37, 41,
                                                      43, 47, 49, 53, 59, 61, 67, 71, 73, 79, 81,  83,  89,  97, 101,
                                                      103, 107, 109, 113, 121};

FieldPtr field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 3; p <= q; p += 2) {
    if (!is_odd_prime(p)) continue;
    std::uint32_t n = 0, v = 1;
    while (v < q) {
      v *= p;
      ++n;
    }
    if (v == q) return Field::create(p, n);
  }
  throw Error(ErrorCode::InvalidArgument, "not an odd prime power");
}

MultiPoly random_poly(const FieldPtr& F, std::size_t nvars, unsigned max_deg, std::size_t terms, Rng& rng) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < terms; ++i) {
    Exponents e(nvars, 0);
    const unsigned deg = static_cast<unsigned>(rng.below(max_deg + 1));
    for (unsigned j = 0; j < deg && nvars > 0; ++j) ++e[rng.below(nvars)];
    t.push_back({e, rng.nonzero(*F)});
  }
  return MultiPoly::from_terms(F, nvars, std::move(t));
}

MultiPoly nonzero_random_poly(const FieldPtr& F, std::size_t nvars, unsigned max_deg, std::size_t terms, Rng& rng) {
  while (true) {
    auto f = random_poly(F, nvars, max_deg, terms, rng);
    if (!f.is_zero()) return f;
  }
}

std::string inst(const FieldPtr& F, const MultiPoly& f) { return "q=" + std::to_string(F->q()) + " f=" + f.to_string(); }

BigInt falling(std::uint64_t q, std::size_t r) {
  BigInt out = 1;
  for (std::size_t i = 0; i < r; ++i) out *= BigInt(q) - i;
  return out;
}

// Field

void check_quadratic_character(Recorder& rec, const Ctx&) {
  for (auto q : kOddPrimePowersTo121) {
    const auto F = field_of_order(q);
    std::vector<char> square(q, 0);
    for (std::uint32_t y = 0; y < q; ++y) square[F->mul(Elem{y}, Elem{y}).code] = 1;
    bool ok = F->quad_char(F->zero()) == 0 && F->quad_char(F->zero(), CharVariant::tilde) == 1;
    int sum = 0, plus = 0;
    for (std::uint32_t x = 1; x < q; ++x) {
      const int c = F->quad_char(Elem{x});
      sum += c;
      plus += c == 1;
      ok = ok && (c == 1) == static_cast<bool>(square[x]) && F->is_square(Elem{x}) == (c == 1);
    }
    ok = ok && sum == 0 && plus == static_cast<int>((q - 1) / 2);
    rec.add_num("quadratic character", "q=" + std::to_string(q), sum, 0, ok);
  }
}

void check_multiplicativity(Recorder& rec, const Ctx&) {
  for (auto q : kOddPrimePowersTo121) {
    if (q > 49) break;
    const auto F = field_of_order(q);
    std::uint64_t bad = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        bad += F->quad_char(F->mul(Elem{a}, Elem{b})) != F->quad_char(Elem{a}) * F->quad_char(Elem{b});
      }
    }
    rec.add_num("chi(xy) = chi(x)chi(y)", "q=" + std::to_string(q), bad, 0, bad == 0);
  }
}

void check_axioms(Recorder& rec, const Ctx&) {
  for (auto q : kOddPrimePowersTo121) {
    if (q > 25) break;
    const auto F = field_of_order(q);
    std::uint64_t bad = 0;
    for (std::uint32_t a = 0; a < q; ++a) {
      const Elem x{a};
      bad += F->add(x, F->neg(x)) != F->zero();
      if (a) bad += F->mul(x, F->inv(x)) != F->one();
      for (std::uint32_t b = 0; b < q; ++b) {
        const Elem y{b};
        bad += F->add(x, y) != F->add(y, x);
        bad += F->mul(x, y) != F->mul(y, x);
        for (std::uint32_t c = 0; c < q; ++c) {
          const Elem z{c};
          bad += F->add(F->add(x, y), z) != F->add(x, F->add(y, z));
          bad += F->mul(F->mul(x, y), z) != F->mul(x, F->mul(y, z));
          bad += F->mul(x, F->add(y, z)) != F->add(F->mul(x, y), F->mul(x, z));
        }
      }
    }
    rec.add_num("field axioms", "q=" + std::to_string(q), bad, 0, bad == 0);
  }
}

// Polynomials

void check_schwartz_zippel(Recorder& rec, const Ctx&) {
  Rng rng(11);
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const auto F = field_of_order(q);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (int t = 0; t < 8; ++t) {
        const auto f = nonzero_random_poly(F, k, 3, 1 + rng.below(4), rng);
        const auto zeros = zero_count(f);
        const BigInt bound = BigInt(f.total_degree()) * pow(BigInt(q), static_cast<unsigned>(k - 1));
        rec.add_num("zeros <= d q^{k-1}", inst(F, f), zeros, bound, BigInt(zeros) <= bound);
      }
    }
  }
}

void check_nullstellensatz(Recorder& rec, const Ctx&) {
  Rng rng(12);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto F = field_of_order(q);
    for (int t = 0; t < 25; ++t) {
      std::vector<MultiPoly> gens;
      const std::size_t count = 2 + rng.below(2);
      for (std::size_t i = 0; i < count; ++i) gens.push_back(nonzero_random_poly(F, 2, 3, 1 + rng.below(3), rng));
      const bool unit = ideal_contains_one(gens);
      const auto witness = common_zero_search(gens, 2);
      std::string name;
      for (const auto& g : gens) name += g.to_string() + "; ";
      rec.add("unit ideal implies no common zero", "q=" + std::to_string(q) + " " + name,
              unit ? "unit" : "proper", witness ? "witness" : "none", !(unit && witness));
    }
  }
}

void check_const_square_character(Recorder& rec, const Ctx&) {
  Rng rng(13);
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (int t = 0; t < 6; ++t) {
      const auto g = nonzero_random_poly(F, 2, 2, 1 + rng.below(3), rng);
      const Elem c = rng.nonzero(*F);
      const auto f = g * g * MultiPoly::constant(F, 2, c);
      const auto split = const_square_split(f);
      bool ok = split.has_value() && is_const_square(f);
      if (ok) {
        const int chi_c = F->quad_char(split->first);
        for (std::uint32_t a = 0; a < q && ok; ++a) {
          for (std::uint32_t b = 0; b < q && ok; ++b) {
            const std::vector<Elem> pt{Elem{a}, Elem{b}};
            const Elem v = f.eval(pt);
            if (v.code != 0) ok = F->quad_char(v) == chi_c;
          }
        }
      }
      rec.add("character constant on c*g^2", inst(F, f), ok ? "constant" : "varies", "constant", ok);
    }
  }
}

void check_squarefree(Recorder& rec, const Ctx&) {
  Rng rng(14);
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (int t = 0; t < 6; ++t) {
      const auto f = nonzero_random_poly(F, 2, 2, 1 + rng.below(3), rng);
      const auto g = nonzero_random_poly(F, 2, 2, 1 + rng.below(3), rng);
      const auto a = squarefree_part(f * f * g).monic();
      const auto b = squarefree_part(f * g).monic();
      rec.add("sqf(f^2 g) = sqf(f g)", inst(F, f) + " g=" + g.to_string(), a.to_string(), b.to_string(), a == b);
    }
  }
}

void check_gcd(Recorder& rec, const Ctx&) {
  Rng rng(15);
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 13u}) {
    const auto F = field_of_order(q);
    for (int t = 0; t < 6; ++t) {
      const auto h = nonzero_random_poly(F, 2, 2, 2, rng);
      const auto f = h * nonzero_random_poly(F, 2, 2, 2, rng);
      const auto g = h * nonzero_random_poly(F, 2, 2, 2, rng);
      const auto d1 = multivar_gcd(f, g);
      const auto d2 = multivar_gcd(g, f);
      const bool ok = d1 == d2 && try_divide(f, d1).has_value() && try_divide(g, d1).has_value() &&
                      try_divide(d1, h.monic()).has_value();
      rec.add("gcd divides, symmetric", inst(F, f) + " g=" + g.to_string(), d1.to_string(), d2.to_string(), ok);
    }
  }
}

void check_roundtrip(Recorder& rec, const Ctx&) {
  Rng rng(16);
  for (const char* spec : {"3", "5", "7", "3^2", "5^2", "3^3", "13"}) {
    const auto F = Field::parse(spec);
    for (int t = 0; t < 10; ++t) {
      const std::size_t k = 1 + rng.below(4);
      const auto f = random_poly(F, k, 4, rng.below(6), rng);
      const auto text = f.to_string();
      const auto back = parse_poly(F, text, k);
      rec.add("parse(print(f)) = f", std::string(spec) + " " + text, back.to_string(), text, back == f);
    }
  }
}

// Admissibility

void check_density(Recorder& rec, const Ctx& ctx) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto F = Field::create(q);
    const auto got = primitive_density_deg2_var3(F, ctx.workers);
    const std::uint64_t expect = std::uint64_t{q - 1} * q * q * q + std::uint64_t{q - 1} * q;
    rec.add("primitive count", "q=" + std::to_string(q),
            std::to_string(got.primitive) + "/" + std::to_string(got.total),
            std::to_string(expect) + "/" + std::to_string(std::uint64_t{q} * q * q * q),
            got.primitive == expect && got.total == std::uint64_t{q} * q * q * q);
  }
}

void check_primitive_kernel(Recorder& rec, const Ctx&) {
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    const auto F = Field::create(q);
    const auto v = is_admissible(parse_poly(F, "x1*x2+x2*x3+x3*x1"));
    const bool ok = v.status == AdmissibilityStatus::FailsPrimitive && v.witness && v.witness->ext_degree == 1 &&
                    v.witness->point == std::vector<Elem>{Elem{0}, Elem{0}};
    rec.add("x1x2+x2x3+x3x1", "q=" + std::to_string(q), std::string(to_string(v.status)), "FailsPrimitive (0,0)", ok);
    const auto w = is_admissible(parse_poly(F, "x1*x2*x3+1"));
    rec.add("x1x2x3+1", "q=" + std::to_string(q), std::string(to_string(w.status)), "Admissible", w.admissible());
  }
}

void check_admissible_fraction(Recorder& rec, const Ctx&) {
  // Sampling noise allowance: three standard errors of a difference of two proportions.
  double prev = -1.0;
  constexpr int kSamples = 2000;
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    const auto F = Field::create(q);
    int admissible = 0;
    for (int i = 0; i < kSamples; ++i) {
      admissible += is_admissible(random_symmetric_poly(F, 3, 2, 1000003ull * q + i), 0).admissible();
    }
    const double frac = static_cast<double>(admissible) / kSamples;
    const double slack = 3.0 * std::sqrt(2.0 * 0.25 / kSamples);
    rec.add("admissible fraction nondecreasing", "q=" + std::to_string(q), std::to_string(frac),
            prev < 0 ? "-" : ">= " + std::to_string(prev - slack), prev < 0 || frac >= prev - slack);
    prev = frac;
  }
}

void check_verdict_invariance(Recorder& rec, const Ctx&) {
  std::uint64_t seed = 17;
  for (std::uint32_t q : {5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (std::size_t k : {2u, 3u}) {
      for (int t = 0; t < 5; ++t) {
        const auto f = random_symmetric_poly(F, k, 1 + static_cast<unsigned>(seed % 3), seed);
        ++seed;
        const auto v = is_admissible(f);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < k; ++i) ok = ok && is_admissible(f.swap_vars(i, i + 1)).status == v.status;
        if (v.admissible()) ok = ok && !common_zero_search(v.expansion, 2).has_value();
        if (v.witness) {
          for (const auto& h : v.expansion) {
            ok = ok && h.embed(make_extension(F, v.witness->ext_degree)).eval(v.witness->point).code == 0;
          }
        }
        rec.add("verdict stable, witness consistent", inst(F, f), std::string(to_string(v.status)), "-", ok);
      }
    }
  }
}

// Hypergraphs

void check_edge_symmetry(Recorder& rec, const Ctx&) {
  std::uint64_t seed = 21;
  for (std::uint32_t q : {5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (std::size_t k : {2u, 3u}) {
      const auto f = random_symmetric_poly(F, k, 2, seed++);
      std::uint64_t bad = 0;
      std::vector<Elem> pt(k);
      std::vector<std::uint32_t> idx(k);
      // All ordered tuples of distinct elements: the square test must not depend on the order.
      const std::uint64_t total = static_cast<std::uint64_t>(std::pow(q, k));
      for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t r = t;
        for (std::size_t i = 0; i < k; ++i) {
          idx[i] = static_cast<std::uint32_t>(r % q);
          r /= q;
        }
        auto sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        for (std::size_t i = 0; i < k; ++i) pt[i] = Elem{idx[i]};
        std::vector<Elem> spt(k);
        for (std::size_t i = 0; i < k; ++i) spt[i] = Elem{sorted[i]};
        bad += F->is_square(f.eval(pt)) != F->is_square(f.eval(spt));
      }
      rec.add_num("edge independent of order", inst(F, f), bad, 0, bad == 0);
    }
  }
}

void check_epo_complementarity(Recorder& rec, const Ctx& ctx) {
  std::uint64_t seed = 31;
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    const auto F = field_of_order(q);
    for (const auto& f : {parse_poly(F, "x1*x2+1"), random_symmetric_poly(F, 2, 2, seed++)}) {
      const auto c = epo_parity_counts(Hypergraph::build(f, ctx.graph()), ctx.count());
      const BigInt total = falling(q, 4);
      rec.add_num("even + odd = q(q-1)(q-2)(q-3)", inst(F, f), BigInt(c.even + c.odd), total, c.even + c.odd == total);
    }
  }
}

void check_epo_main_term(Recorder& rec, const Ctx& ctx) {
  for (const char* poly : {"x1*x2+1", "x1+x2"}) {
    double rel13 = 0, rel29 = 0;
    for (std::uint32_t q : {13u, 17u, 25u, 29u}) {
      const auto F = field_of_order(q);
      const auto f = parse_poly(F, poly);
      const auto r = count_epo_direct(Hypergraph::build(f, ctx.graph()), ctx.count());
      const BigInt bound = 8 * pow(BigInt(q), 3);
      rec.add_num("|N - q^4/2| <= 8 q^3", inst(F, f), Rational(abs(r.deviation)), bound, abs(r.deviation) <= Rational(bound));
      if (q == 13) rel13 = std::abs(r.relative_deviation);
      if (q == 29) rel29 = std::abs(r.relative_deviation);
    }
    rec.add("relative deviation shrinks", poly, std::to_string(rel29), "< " + std::to_string(rel13), rel29 < rel13);
  }
  for (const char* poly : {"x1*x2*x3+1", "x1+x2+x3"}) {
    for (std::uint32_t q : {7u, 9u, 11u}) {
      const auto F = field_of_order(q);
      const auto f = parse_poly(F, poly);
      const auto r = count_epo_direct(Hypergraph::build(f, ctx.graph()), ctx.count());
      const BigInt bound = 40 * pow(BigInt(q), 5);
      rec.add_num("|N - q^6/2| <= 40 q^5", inst(F, f), Rational(abs(r.deviation)), bound, abs(r.deviation) <= Rational(bound));
    }
  }
}

void check_charsum_dual_path(Recorder& rec, const Ctx& ctx) {
  std::uint64_t seed = 41;
  int done = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (std::size_t k : {2u, 3u}) {
      int found = 0;
      while (found < 3) {
        const auto f = random_symmetric_poly(F, k, 1 + static_cast<unsigned>(seed % 3), seed);
        ++seed;
        if (!is_admissible(f, 0).admissible()) continue;
        ++found;
        const auto y = Hypergraph::build(f, ctx.graph());
        const auto a = count_epo_charsum(y, CharsumMethod::factored, ctx.count());
        const auto b = count_epo_charsum(y, CharsumMethod::naive, ctx.count());
        rec.add_num("factored S = naive S", inst(F, f), a.S, b.S, a.S == b.S);
        ++done;
      }
    }
  }
  rec.add_num("instances", "admissible f", done, 20, done >= 20);
}

void check_charsum_vs_direct(Recorder& rec, const Ctx& ctx) {
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    const auto F = field_of_order(q);
    for (const char* poly : {"x1*x2+1", "x1+x2", "x1*x2*x3+1"}) {
      const auto f = parse_poly(F, poly);
      if (f.nvars() == 3 && q > 9) continue;
      const auto y = Hypergraph::build(f, ctx.graph());
      const auto direct = count_epo_direct(y, ctx.count());
      const auto cs = count_epo_charsum(y, CharsumMethod::factored, ctx.count());
      const std::size_t k = f.nvars();
      const BigInt d(f.total_degree());
      const BigInt bound = (2 * (BigInt(1) << k) * d + BigInt(k) * (2 * k - 1)) *
                           pow(BigInt(q), static_cast<unsigned>(2 * k - 1));
      const Rational gap = abs(cs.estimate - Rational(direct.observed));
      rec.add_num("|estimate - N| <= (2^{k+1} d + C(2k,2)) q^{2k-1}", inst(F, f), gap, bound,
                  gap <= Rational(bound));
    }
  }
}

Elem first_nonsquare(const Field& F) {
  for (std::uint32_t x = 1; x < F.q(); ++x) {
    if (!F.is_square(Elem{x})) return Elem{x};
  }
  return F.one();
}

void check_square_dichotomy(Recorder& rec, const Ctx& ctx) {
  const std::vector<std::vector<const char*>> gs{
      {"x1+x2", "x1*x2+1", "x1^2+x2^2", "x1+x2+1", "x1*x2+x1+x2"},
      {"x1+x2+x3", "x1*x2*x3+1", "x1^2+x2^2+x3^2", "x1*x2+x2*x3+x3*x1", "x1+x2+x3+1"}};
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    const Elem ns = first_nonsquare(*F);
    for (std::size_t k : {2u, 3u}) {
      for (const char* gtext : gs[k - 2]) {
        const auto g = parse_poly(F, gtext, k);
        const auto f1 = g * g;
        const auto f2 = f1.scaled(ns);
        const auto e1 = Hypergraph::build(f1, ctx.graph()).edge_count(ctx.count());
        const BigInt all = falling(q, k) / falling(k, k);
        rec.add_num("square constant: complete", inst(F, f1), e1, all, e1 == all);
        const auto e2 = Hypergraph::build(f2, ctx.graph()).edge_count(ctx.count());
        const BigInt bound = BigInt(f2.total_degree()) * pow(BigInt(q), static_cast<unsigned>(k - 1));
        rec.add_num("nonsquare constant: sparse", inst(F, f2), e2, bound, e2 <= bound);
      }
    }
  }
}

void check_subsets_vs_labeled(Recorder& rec, const Ctx& ctx) {
  std::uint64_t seed = 51;
  for (std::uint32_t q : {5u, 7u, 9u, 11u}) {
    const auto F = field_of_order(q);
    for (std::size_t k : {2u, 3u}) {
      const auto f = random_symmetric_poly(F, k, 2, seed++);
      const auto y = Hypergraph::build(f, ctx.graph());
      const auto sub = count_m_subsets(y, k, ctx.count());
      const auto lab = count_labeled_induced(y, Pattern::single_edge(k), ctx.count());
      const auto emp = count_labeled_induced(y, Pattern::empty(k, k), ctx.count());
      const BigInt kf = falling(k, k);
      const bool ok = sub.observed * kf == lab.observed && lab.observed + emp.observed == falling(q, k) &&
                      sub.observed == y.edge_count(ctx.count());
      rec.add_num("k! N(k) = labeled edges; edges + non-edges = q^(k)", inst(F, f), BigInt(sub.observed * kf),
                  lab.observed, ok);
    }
  }
}

void check_single_edge_deviation(Recorder& rec, const Ctx& ctx) {
  for (std::uint32_t q : {13u, 17u, 25u, 29u}) {
    const auto F = field_of_order(q);
    const auto y = Hypergraph::paley(F, 2, ctx.graph());
    const auto r = count_labeled_induced(y, Pattern::single_edge(2), ctx.count());
    // |obs/pred - 1| <= 3/sqrt(q)  <=>  dev^2 q <= 9 pred^2
    const Rational lhs = r.deviation * r.deviation * q;
    const Rational rhs = 9 * r.predicted_main * r.predicted_main;
    rec.add_num("|rel dev| <= 3/sqrt(q)", "Paley q=" + std::to_string(q), r.relative_deviation,
                3.0 / std::sqrt(q), lhs <= rhs);
  }
}

void check_clique_sanity(Recorder& rec, const Ctx& ctx) {
  for (std::uint32_t q : {5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (std::size_t k : {2u, 3u}) {
      MultiPoly one = MultiPoly::constant(F, k, F->one());
      const auto r = omega_clique(Hypergraph::build(one, ctx.graph()));
      rec.add_num("complete graph", "q=" + std::to_string(q) + " k=" + std::to_string(k), r.size, q,
                  r.size == q && r.exact);
      const auto p = omega_clique(Hypergraph::paley(F, k, ctx.graph()));
      rec.add_num("omega >= k-1", "Paley q=" + std::to_string(q) + " k=" + std::to_string(k), p.size, k - 1,
                  p.size >= k - 1 && p.exact);
    }
  }
}

void check_worker_independence(Recorder& rec, const Ctx&) {
  const auto F = Field::create(13);
  const auto f = parse_poly(F, "x1*x2+1");
  std::vector<std::string> seen;
  for (unsigned w : {1u, 2u, 8u}) {
    const auto y = Hypergraph::build(f, {std::uint64_t{1} << 26, w});
    const CountOptions o{std::uint64_t{1} << 36, w};
    seen.push_back(count_epo_direct(y, o).observed.str() + "/" +
                   count_epo_charsum(y, CharsumMethod::factored, o).S.str() + "/" +
                   count_m_subsets(y, 3, o).observed.str());
  }
  rec.add("counts equal for 1, 2, 8 workers", inst(F, f), seen[1] + " " + seen[2], seen[0],
          seen[0] == seen[1] && seen[0] == seen[2]);
}

// Tuples

void check_tuple_envelope(Recorder& rec, const Ctx& ctx) {
  struct Case {
    std::uint32_t q;
    const char* poly;
    std::size_t m;
  };
  for (const auto& c : {Case{101, "x1*x2+1", 3}, Case{151, "x1*x2+1", 3}, Case{13, "x1*x2*x3+1", 4},
                        Case{17, "x1*x2*x3+1", 4}}) {
    const auto F = Field::create(c.q);
    const auto f = parse_poly(F, c.poly);
    const auto y = Hypergraph::build(f, ctx.graph());
    const auto r = count_m_subsets(y, c.m, ctx.count());
    const auto env = predict_envelope(c.q, c.m, f.nvars(), static_cast<unsigned>(f.total_degree()));
    rec.add_num("|N - main| <= envelope", inst(F, f) + " m=" + std::to_string(c.m), Rational(abs(r.deviation)), *r.envelope,
                r.within_envelope() && env.main == r.predicted_main);
  }
}

void check_tuple_crosscheck(Recorder& rec, const Ctx& ctx) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const auto F = field_of_order(q);
    for (const char* poly : {"x1*x2+1", "x1+x2", "x1*x2*x3+1", "x1+x2+x3"}) {
      const auto f = parse_poly(F, poly);
      const std::size_t k = f.nvars();
      if (k == 3 && q > 9) continue;
      const auto y = Hypergraph::build(f, ctx.graph());
      for (std::size_t m : {2u, 3u}) {
        if (m < k) continue;
        const auto c = tuple_count_crosscheck(y, m, ctx.count());
        rec.add_num("|N - S/m!| <= d C(m,k) q^{m-1}", inst(F, f) + " m=" + std::to_string(m), Rational(abs(c.difference)),
                    c.bound, c.pass());
      }
    }
  }
}

// Bounds

void check_weil(Recorder& rec, const Ctx&) {
  Rng rng(61);
  const std::vector<FieldPtr> fields{field_of_order(9), field_of_order(13), field_of_order(25), field_of_order(49)};
  int done = 0, failures = 0;
  while (done < 500) {
    const auto& F = fields[rng.below(fields.size())];
    const int deg = 1 + static_cast<int>(rng.below(6));
    std::vector<Elem> coeffs(deg + 1);
    for (int i = 0; i < deg; ++i) coeffs[i] = rng.elem(*F);
    coeffs[deg] = F->one();
    const UniPoly g(F, coeffs);
    const Elem a = rng.nonzero(*F);
    const auto w = weil_check(g, a);
    if (!w.applicable) continue;
    ++done;
    if (!w.pass()) {
      ++failures;
      rec.add_num("sum^2 <= (s-1)^2 q", "q=" + std::to_string(F->q()) + " g=" + g.to_string(), w.sum, w.s, false);
    }
  }
  rec.add_num("Weil failures over 500 instances", "q in {9,13,25,49}", failures, 0, failures == 0);
  for (std::uint32_t q : {13u, 17u}) {
    const auto F = Field::create(q);
    for (std::uint32_t c = 1; c < q; ++c) {
      int sum = 0;
      for (std::uint32_t x = 0; x < q; ++x) sum += F->quad_char(F->add(F->mul(Elem{x}, Elem{x}), Elem{c}));
      rec.add_num("sum chi(x^2+c) = -1", "q=" + std::to_string(q) + " c=" + std::to_string(c), sum, -1, sum == -1);
    }
  }
}

void check_xset(Recorder& rec, const Ctx& ctx) {
  std::uint64_t seed = 71;
  int done = 0;
  const std::vector<std::uint32_t> qs{5, 7, 9};
  while (done < 100) {
    const auto F = field_of_order(qs[done % 3]);
    const std::size_t k = 2 + (done / 3) % 2;
    const unsigned d = 1 + static_cast<unsigned>(seed % 3);
    const auto f = random_symmetric_poly(F, k, d, seed++);
    if (!is_admissible(f, 0).admissible()) continue;
    ++done;
    const auto x = enumerate_X(f, true, ctx.count());
    rec.add("|X| <= (d^2+d) q^{k-2}; |Y| <= (d-n) q^{k-2}; |Z| <= n d q^{k-2}", inst(F, f),
            std::to_string(x.size()) + "," + std::to_string(x.y_count) + "," + std::to_string(x.z_count),
            x.bound.str() + "," + x.y_bound.str() + "," + x.z_bound.str(), x.pass());
  }
  for (std::uint32_t q : {5u, 7u, 13u}) {
    const auto F = Field::create(q);
    const auto x = enumerate_X(parse_poly(F, "x1^2+x2^2+x3^2"), true, ctx.count());
    if (q == 7) rec.add_num("diagonal |X|", "q=7", x.size(), 1, x.size() == 1);
    if (q == 13) rec.add_num("diagonal |X|", "q=13", x.size(), 25, x.size() == 25);
    // Magnitude q^{k-2} + 6 q^{k/2}: reported only, the constant is not pinned down.
    const double mag = q + 6.0 * std::pow(q, 1.5);
    rec.add_num("diagonal |X| magnitude", "q=" + std::to_string(q), x.size(), mag, x.size() <= mag, false);
  }
}

void check_bset(Recorder& rec, const Ctx& ctx) {
  for (std::uint32_t q : {5u, 7u, 9u, 11u}) {
    const auto F = field_of_order(q);
    for (const char* poly : {"x1*x2+1", "x1+x2", "x1^2+x2^2+1"}) {
      const auto f = parse_poly(F, poly);
      const auto b = enumerate_B(f, ctx.count());
      rec.add_num("|B| <= C q^{2k-3}", inst(F, f), b.size(), b.bound, b.pass());
    }
  }
  for (std::uint32_t q : {5u, 7u}) {
    const auto F = Field::create(q);
    const auto f = parse_poly(F, "x1*x2*x3+1");
    const auto b = enumerate_B(f, ctx.count());
    rec.add_num("|B| <= C q^{2k-3}", inst(F, f), b.size(), b.bound, b.pass());
  }
}

void check_slavov(Recorder& rec, const Ctx& ctx) {
  for (std::uint32_t q : {13u, 29u, 53u}) {
    const auto F = Field::create(q);
    const std::vector<MultiPoly> fs{parse_poly(F, "x1"), parse_poly(F, "x1+1")};
    const auto r = slavov_count(fs, true, ctx.count());
    // |dev| <= 2 sqrt(q) + 4, squared: (|dev| - 4)^2 <= 4q when |dev| > 4
    const Rational dev = abs(r.report.deviation);
    const bool ok = dev <= 4 || (dev - 4) * (dev - 4) <= Rational(4 * q);
    rec.add_num("|N - q/4| <= 2 sqrt(q) + 4", "(x, x+1) q=" + std::to_string(q), dev, 2 * std::sqrt(q) + 4,
                ok && r.condition_holds() && r.report.within_envelope());
  }
  const auto F = Field::create(13);
  const std::vector<MultiPoly> bad{parse_poly(F, "x1"), parse_poly(F, "4*x1")};
  const auto r = slavov_count(bad, true, ctx.count());
  const bool reported = r.failing_subsets == std::vector<std::vector<std::size_t>>{{0, 1}};
  rec.add_num("condition failure reported", "(x, 4x) q=13", r.failing_subsets.size(), 1, reported);
}

struct Entry {
  SuiteCheck id;
  CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"quadratic_character", "field"}, check_quadratic_character},
      {{"multiplicativity", "field"}, check_multiplicativity},
      {{"axioms", "field"}, check_axioms},
      {{"schwartz_zippel", "poly"}, check_schwartz_zippel},
      {{"nullstellensatz_consistency", "poly"}, check_nullstellensatz},
      {{"const_square_character", "poly"}, check_const_square_character},
      {{"squarefree", "poly"}, check_squarefree},
      {{"gcd", "poly"}, check_gcd},
      {{"roundtrip", "poly"}, check_roundtrip},
      {{"density_deg2_var3", "admissible"}, check_density},
      {{"primitive_kernel", "admissible"}, check_primitive_kernel},
      {{"admissible_fraction", "admissible"}, check_admissible_fraction},
      {{"verdict_invariance", "admissible"}, check_verdict_invariance},
      {{"edge_symmetry", "hypergraph"}, check_edge_symmetry},
      {{"epo_complementarity", "epo"}, check_epo_complementarity},
      {{"epo_main_term", "epo"}, check_epo_main_term},
      {{"charsum_dual_path", "epo"}, check_charsum_dual_path},
      {{"charsum_vs_direct", "epo"}, check_charsum_vs_direct},
      {{"square_dichotomy", "hypergraph"}, check_square_dichotomy},
      {{"subsets_vs_labeled", "hypergraph"}, check_subsets_vs_labeled},
      {{"single_edge_deviation", "hypergraph"}, check_single_edge_deviation},
      {{"clique_sanity", "hypergraph"}, check_clique_sanity},
      {{"worker_independence", "hypergraph"}, check_worker_independence},
      {{"envelope", "tuples"}, check_tuple_envelope},
      {{"crosscheck", "tuples"}, check_tuple_crosscheck},
      {{"weil", "weil"}, check_weil},
      {{"xset", "xset"}, check_xset},
      {{"bset", "bset"}, check_bset},
      {{"slavov", "slavov"}, check_slavov},
  };
  return entries;
}

bool selected(const SuiteCheck& c, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  const std::string full = c.group + "." + c.name;
  return std::any_of(only.begin(), only.end(), [&](const std::string& o) { return full.find(o) != std::string::npos; });
}

}  // namespace

std::vector<SuiteCheck> suite_checks() {
  std::vector<SuiteCheck> out;
  for (const auto& e : registry()) out.push_back(e.id);
  return out;
}

json run_suite(const SuiteOptions& options) {
  json report;
  report["schema"] = kSchema;
  report["checks"] = json::array();
  bool all = true;
  const Ctx ctx{options.workers};
  for (const auto& e : registry()) {
    if (!selected(e.id, options.only)) continue;
    Recorder rec;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      e.fn(rec, ctx);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && rec.ok();
    all = all && pass;
    json c{{"name", e.id.name}, {"group", e.id.group}, {"pass", pass}, {"seconds", seconds},
           {"records", rec.records()}};
    if (!error.empty()) c["error"] = error;
    report["checks"].push_back(std::move(c));
  }
  report["pass"] = all;
  return report;
}

}  // namespace ffhyper::cli
