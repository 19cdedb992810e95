// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ffhyper/admissible.hpp"
#include "ffhyper/bounds.hpp"
#include "ffhyper/hypergraph.hpp"
#include "ffhyper/parse.hpp"
#include "ffhyper/random.hpp"
#include "oracle_fixtures.hpp"

using namespace ffhyper;
namespace fx = ffhyper::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

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
  return nullptr;
}

std::string qs(std::uint32_t q) { return "q=" + std::to_string(q); }

template <std::size_t N>
std::int64_t fixture(const fx::QCount (&table)[N], std::uint32_t q) {
  for (const auto& e : table) {
    if (e.q == q) return e.value;
  }
  return -1;
}

// 1. Exact primitive density of the degree-2, three-variable family.
void ac1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto got = primitive_density_deg2_var3(Field::create(q));
    const std::uint64_t want = std::uint64_t{q - 1} * q * q * q + std::uint64_t{q - 1} * q;
    o.detail << " " << qs(q) << ":" << got.primitive << "/" << got.total;
    o.require(got.primitive == want && got.total == std::uint64_t{q} * q * q * q, qs(q));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << " time=" << secs << "s";
  o.require(secs < 10.0, "runtime >= 10 s");
}

// 2. The elementary symmetric counterexample and x1x2x3+1.
void ac2(Outcome& o) {
  for (std::uint32_t q : {5u, 7u, 13u}) {
    const auto F = Field::create(q);
    const auto v = is_admissible(parse_poly(F, "x1*x2+x2*x3+x3*x1"));
    const bool witness_ok =
        v.witness && v.witness->ext_degree == 1 && v.witness->point == std::vector<Elem>{Elem{0}, Elem{0}};
    o.require(v.status == AdmissibilityStatus::FailsPrimitive && witness_ok, "e2 " + qs(q));
    o.require(is_admissible(parse_poly(F, "x1*x2*x3+1")).admissible(), "x1x2x3+1 " + qs(q));
  }
  o.detail << " e2: FailsPrimitive at (0,0); x1x2x3+1: Admissible";
}

// 3. EPO main term, pinned against brute-force fixtures.
void ac3(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  struct Family {
    const char* poly;
    const fx::QCount* table;
    std::size_t size;
  };
  const Family k2[] = {{"x1*x2+1", fx::kEpoXyPlus1K2, std::size(fx::kEpoXyPlus1K2)},
                       {"x1+x2", fx::kEpoPaleyK2, std::size(fx::kEpoPaleyK2)}};
  for (const auto& fam : k2) {
    double rel13 = 0, rel29 = 0;
    for (std::uint32_t q : {13u, 17u, 25u, 29u}) {
      const auto F = field_of_order(q);
      const auto r = count_epo_direct(Hypergraph::build(parse_poly(F, fam.poly)));
      std::int64_t want = -1;
      for (std::size_t i = 0; i < fam.size; ++i) {
        if (fam.table[i].q == q) want = fam.table[i].value;
      }
      o.require(r.observed == want, std::string(fam.poly) + " " + qs(q) + " fixture");
      o.require(abs(r.deviation) <= Rational(8 * pow(BigInt(q), 3)), std::string(fam.poly) + " " + qs(q) + " bound");
      if (q == 13) rel13 = std::abs(r.relative_deviation);
      if (q == 29) rel29 = std::abs(r.relative_deviation);
    }
    o.detail << " " << fam.poly << " rel(13)=" << rel13 << " rel(29)=" << rel29;
    o.require(rel29 < rel13, std::string(fam.poly) + " relative deviation not shrinking");
  }
  for (std::uint32_t q : {7u, 9u, 11u}) {
    const auto F = field_of_order(q);
    const auto a = count_epo_direct(Hypergraph::build(parse_poly(F, "x1*x2*x3+1")));
    const auto b = count_epo_direct(Hypergraph::paley(F, 3));
    o.require(a.observed == fixture(fx::kEpoXyzPlus1K3, q) && b.observed == fixture(fx::kEpoPaleyK3, q),
              "k=3 fixture " + qs(q));
    const Rational bound(40 * pow(BigInt(q), 5));
    o.require(abs(a.deviation) <= bound && abs(b.deviation) <= bound, "k=3 bound " + qs(q));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << " time=" << secs << "s";
  o.require(secs < 300.0, "runtime >= 5 min");
}

// 4. Factored and naive character sums agree exactly.
void ac4(Outcome& o) {
  int instances = 0;
  std::uint64_t seed = 4000;
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (std::size_t k : {2u, 3u}) {
      for (int found = 0; found < 3;) {
        const auto f = random_symmetric_poly(F, k, 1 + static_cast<unsigned>(seed % 3), seed);
        ++seed;
        if (!is_admissible(f, 0).admissible()) continue;
        ++found;
        ++instances;
        const auto y = Hypergraph::build(f);
        const auto a = count_epo_charsum(y, CharsumMethod::factored);
        const auto b = count_epo_charsum(y, CharsumMethod::naive);
        o.require(a.S == b.S, qs(q) + " f=" + f.to_string());
      }
    }
  }
  const auto F5 = Field::create(5);
  o.require(count_epo_charsum(Hypergraph::build(parse_poly(F5, "x1*x2+1"))).S == fx::kCharsumXyPlus1F5,
            "xy+1 F5 fixture");
  o.require(count_epo_charsum(Hypergraph::paley(Field::create(7), 3), CharsumMethod::naive).S ==
                fx::kCharsumPaleyK3F7,
            "Paley k=3 F7 fixture");
  o.detail << " admissible instances=" << instances;
  o.require(instances >= 20, "fewer than 20 instances");
}

// 5. Tuple counts inside the error envelope.
void ac5(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t q : {101u, 151u}) {
    const auto F = Field::create(q);
    const auto r = count_m_subsets(Hypergraph::build(parse_poly(F, "x1*x2+1")), 3);
    const auto env = predict_envelope(q, 3, 2, 2);
    o.detail << " k=2 " << qs(q) << " N=" << r.observed;
    o.require(r.observed == fixture(fx::kTriplesXyPlus1, q), "fixture " + qs(q));
    o.require(r.predicted_main == Rational(BigInt(q) * q * q, 48), "main " + qs(q));
    o.require(abs(Rational(r.observed) - env.main) <= Rational(env.err), "envelope " + qs(q));
  }
  for (std::uint32_t q : {13u, 17u}) {
    const auto F = Field::create(q);
    const auto r = count_m_subsets(Hypergraph::build(parse_poly(F, "x1*x2*x3+1")), 4);
    const auto env = predict_envelope(q, 4, 3, 3);
    o.detail << " k=3 " << qs(q) << " N=" << r.observed;
    o.require(r.observed == fixture(fx::kQuadruplesXyzPlus1, q), "fixture k=3 " + qs(q));
    o.require(r.predicted_main == Rational(pow(BigInt(q), 4), 24 * 16), "main k=3 " + qs(q));
    o.require(abs(Rational(r.observed) - env.main) <= Rational(env.err), "envelope k=3 " + qs(q));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << " time=" << secs << "s";
  o.require(secs < 300.0, "runtime >= 5 min");
}

// 6. |N - S/m!| <= d C(m,k) q^{m-1}.
void ac6(Outcome& o) {
  int cases = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const auto F = field_of_order(q);
    for (const char* poly : {"x1*x2+1", "x1+x2", "x1^2+x2^2+x1*x2"}) {
      const auto y = Hypergraph::build(parse_poly(F, poly));
      for (std::size_t m : {2u, 3u}) {
        const auto c = tuple_count_crosscheck(y, m);
        ++cases;
        o.require(c.pass(), std::string(poly) + " " + qs(q) + " m=" + std::to_string(m));
        if (q == 7 && m == 2 && std::string(poly) == "x1*x2+1") {
          o.require(c.N == fx::kCrossN_XyPlus1F7M2 && c.S == fx::kCrossS_XyPlus1F7M2, "F7 m=2 fixture");
        }
      }
    }
  }
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    for (const char* poly : {"x1*x2*x3+1", "x1+x2+x3"}) {
      const auto c = tuple_count_crosscheck(Hypergraph::build(parse_poly(F, poly)), 3);
      ++cases;
      o.require(c.pass(), std::string(poly) + " " + qs(q));
    }
  }
  o.detail << " cases=" << cases;
}

// 7. Weil bound over 500 instances and the quadratic shift sums.
void ac7(Outcome& o) {
  Rng rng(7);
  const std::vector<FieldPtr> fields{field_of_order(9), field_of_order(13), field_of_order(25), field_of_order(49)};
  int instances = 0, failures = 0, skipped = 0;
  while (instances < 500) {
    const auto& F = fields[rng.below(fields.size())];
    const int deg = 1 + static_cast<int>(rng.below(6));
    std::vector<Elem> coeffs(deg + 1);
    for (int i = 0; i < deg; ++i) coeffs[i] = rng.elem(*F);
    coeffs[deg] = F->one();
    const auto w = weil_check(UniPoly(F, coeffs), rng.nonzero(*F));
    if (!w.applicable) {
      ++skipped;
      continue;
    }
    ++instances;
    failures += !w.pass();
  }
  o.detail << " instances=" << instances << " failures=" << failures << " squares skipped=" << skipped;
  o.require(failures == 0, "Weil failures");
  for (std::uint32_t q : {13u, 17u}) {
    const auto F = Field::create(q);
    const std::int64_t want = q == 13 ? fx::kQuadCharsumF13 : fx::kQuadCharsumF17;
    for (std::uint32_t c = 1; c < q; ++c) {
      std::vector<Elem> coeffs{Elem{c}, F->zero(), F->one()};
      const auto w = weil_check(UniPoly(F, coeffs), F->one());
      o.require(w.sum == want, qs(q) + " c=" + std::to_string(c));
    }
  }
}

// 8. Exceptional set X for 100 admissible f, plus the diagonal example.
void ac8(Outcome& o) {
  int instances = 0;
  std::uint64_t seed = 8000;
  const std::uint32_t qlist[] = {5, 7, 9};
  while (instances < 100) {
    const auto F = field_of_order(qlist[instances % 3]);
    const std::size_t k = 2 + (instances / 3) % 2;
    const unsigned d = 1 + static_cast<unsigned>(seed % 3);
    const auto f = random_symmetric_poly(F, k, d, seed++);
    if (!is_admissible(f, 0).admissible()) continue;
    ++instances;
    const auto x = enumerate_X(f, true);
    o.require(x.pass(), qs(F->q()) + " f=" + f.to_string());
  }
  for (std::uint32_t q : {7u, 13u}) {
    const auto x = enumerate_X(parse_poly(Field::create(q), "x1^2+x2^2+x3^2"), true);
    const std::int64_t want = q == 7 ? fx::kXDiagonalF7 : fx::kXDiagonalF13;
    o.detail << " diagonal " << qs(q) << " |X|=" << x.size();
    o.require(static_cast<std::int64_t>(x.size()) == want, "diagonal " + qs(q));
  }
  o.detail << " instances=" << instances;
}

// 9. Joint square count for (x, x+1); failure of the condition for (x, 4x).
void ac9(Outcome& o) {
  for (std::uint32_t q : {13u, 29u, 53u}) {
    const auto F = Field::create(q);
    const std::vector<MultiPoly> fs{parse_poly(F, "x1"), parse_poly(F, "x1+1")};
    const auto r = slavov_count(fs, true);
    const Rational dev = abs(r.report.deviation);
    // |dev| <= 2 sqrt(q) + 4, compared exactly
    const bool within = dev <= 4 || (dev - 4) * (dev - 4) <= Rational(4 * q);
    o.detail << " " << qs(q) << " N=" << r.report.observed;
    o.require(r.report.observed == fixture(fx::kSlavovXXPlus1, q), "fixture " + qs(q));
    o.require(within && r.condition_holds(), "bound " + qs(q));
  }
  const auto F = Field::create(13);
  const std::vector<MultiPoly> bad{parse_poly(F, "x1"), parse_poly(F, "4*x1")};
  const auto r = slavov_count(bad, true);
  o.require(!r.condition_holds() && r.failing_subsets == std::vector<std::vector<std::size_t>>{{0, 1}},
            "(x, 4x) not reported");
}

// 10. c*g^2: complete for square c, sparse for nonsquare c.
void ac10(Outcome& o) {
  const std::vector<std::vector<const char*>> gs{
      {"x1+x2", "x1*x2+1", "x1^2+x2^2", "x1+x2+1", "x1*x2+x1+x2"},
      {"x1+x2+x3", "x1*x2*x3+1", "x1^2+x2^2+x3^2", "x1*x2+x2*x3+x3*x1", "x1+x2+x3+1"}};
  int cases = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto F = field_of_order(q);
    Elem square{0}, nonsquare{0};
    for (std::uint32_t x = 2; x < q; ++x) {
      if (F->is_square(Elem{x}) && square.code == 0) square = Elem{x};
      if (!F->is_square(Elem{x}) && nonsquare.code == 0) nonsquare = Elem{x};
    }
    if (square.code == 0) square = F->one();
    for (std::size_t k : {2u, 3u}) {
      BigInt all = 1;
      for (std::size_t i = 0; i < k; ++i) all = all * (q - i) / (i + 1);
      for (const char* gtext : gs[k - 2]) {
        const auto g = parse_poly(F, gtext, k);
        const auto g2 = g * g;
        const auto e1 = Hypergraph::build(g2.scaled(square)).edge_count();
        const auto f2 = g2.scaled(nonsquare);
        const auto e2 = Hypergraph::build(f2).edge_count();
        const BigInt sparse = BigInt(f2.total_degree()) * pow(BigInt(q), static_cast<unsigned>(k - 1));
        o.require(e1 == all, "square " + qs(q) + " g=" + gtext);
        o.require(e2 <= sparse, "nonsquare " + qs(q) + " g=" + gtext);
        cases += 2;
      }
    }
  }
  o.detail << " cases=" << cases;
}

// 11. Byte-identical scan output across runs and worker counts.
void ac11(Outcome& o) {
  cli::RunConfig c;
  c.command = "scan";
  c.fields = {"5", "7", "3^2", "11"};
  c.k = 2;
  c.d = 2;
  c.seed = 20240611;
  c.samples = 6;
  c.format = "csv";
  std::vector<std::string> outputs;
  for (unsigned w : {1u, 1u, 2u, 8u}) {
    c.workers = w;
    const auto r = cli::execute(c);
    o.require(r.exit_code == cli::kOk, "exit code workers=" + std::to_string(w));
    outputs.push_back(r.output);
  }
  for (std::size_t i = 1; i < outputs.size(); ++i) o.require(outputs[i] == outputs[0], "output differs");
  std::size_t rows = 0;
  for (char ch : outputs[0]) rows += ch == '\n';
  o.detail << " bytes=" << outputs[0].size() << " lines=" << rows;
  o.require(outputs[0].size() > 0, "empty output");
}

// Clique numbers against the exhaustive oracle; the constant in the lower bound is not asserted.
void clique(Outcome& o) {
  struct Family {
    const char* label;
    std::size_t k;
    bool paley;
    const fx::QCount* table;
    std::size_t size;
  };
  const Family fams[] = {
      {"x1*x2+1", 2, false, fx::kOmegaXyPlus1K2, std::size(fx::kOmegaXyPlus1K2)},
      {"paley2", 2, true, fx::kOmegaPaleyK2, std::size(fx::kOmegaPaleyK2)},
      {"x1*x2*x3+1", 3, false, fx::kOmegaXyzPlus1K3, std::size(fx::kOmegaXyzPlus1K3)},
      {"paley3", 3, true, fx::kOmegaPaleyK3, std::size(fx::kOmegaPaleyK3)},
  };
  for (const auto& fam : fams) {
    o.detail << " " << fam.label << ":";
    for (std::size_t i = 0; i < fam.size; ++i) {
      const auto F = field_of_order(fam.table[i].q);
      const auto y = fam.paley ? Hypergraph::paley(F, fam.k) : Hypergraph::build(parse_poly(F, fam.label));
      const auto r = omega_clique(y);
      o.detail << " " << fam.table[i].q << "->" << r.size;
      o.require(r.exact && static_cast<std::int64_t>(r.size) == fam.table[i].value,
                std::string(fam.label) + " " + qs(fam.table[i].q));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 primitive density", ac1},        {"AC2 primitive counterexample", ac2},
      {"AC3 epo main term", ac3},            {"AC4 charsum dual path", ac4},
      {"AC5 tuple envelope", ac5},           {"AC6 tuple crosscheck", ac6},
      {"AC7 weil bound", ac7},               {"AC8 exceptional set X", ac8},
      {"AC9 joint square count", ac9},       {"AC10 square dichotomy", ac10},
      {"AC11 scan determinism", ac11},       {"CLIQUE omega vs fixtures", clique},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " |" << o.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
