#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffhyper/count_report.hpp"
#include "ffhyper/multipoly.hpp"

namespace ffhyper {

struct HypergraphOptions {
  /// Edges are precomputed into a bitset when C(q, k) fits; otherwise they are
  /// evaluated on demand and memoized.
  std::uint64_t max_bitset_bits = std::uint64_t{1} << 26;
  unsigned workers = 1;
};

struct CountOptions {
  /// Upper limit on the number of tuples an exhaustive loop may visit.
  std::uint64_t budget_tuples = std::uint64_t{1} << 36;
  unsigned workers = 1;
};

inline constexpr std::size_t kMaxUniformity = 16;

/// The k-uniform hypergraph Y_{f,q}: vertices F_q, a k-set of distinct
/// elements is an edge iff f evaluated on it is a square (0 included).
/// Cheap to copy; copies share the edge store.
class Hypergraph {
 public:
  /// Throws NotSymmetric, ZeroPolynomial, ArityMismatch (k < 2 or k > kMaxUniformity).
  static Hypergraph build(const MultiPoly& f, const HypergraphOptions& options = {});
  /// Paley sum k-graph: f = x1 + ... + xk.
  static Hypergraph paley(const FieldPtr& field, std::size_t k, const HypergraphOptions& options = {});

  const FieldPtr& field() const noexcept;
  const MultiPoly& poly() const noexcept;
  std::size_t k() const noexcept;
  std::uint32_t order() const noexcept;
  bool has_bitset() const noexcept;

  /// Throws ArityMismatch, FieldMismatch, DuplicateVertex.
  bool is_edge(std::span<const Elem> vertices) const;
  /// Unchecked lookup on k distinct vertex codes in any order.
  bool edge(const std::uint32_t* codes) const;

  /// Number of edges (unlabeled). Throws BudgetExceeded past the budget.
  BigInt edge_count(const CountOptions& options = {}) const;

  struct Impl;

 private:
  explicit Hypergraph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Induced pattern: a k-uniform hypergraph on vertices 0..s-1.
struct Pattern {
  std::size_t s = 0;
  std::size_t k = 2;
  std::vector<std::vector<std::size_t>> edges;  // each sorted

  static Pattern single_edge(std::size_t k);
  static Pattern empty(std::size_t s, std::size_t k);
  /// Graph path 0-1-2-...-(s-1) (k = 2).
  static Pattern path(std::size_t s);
  bool has_edge(std::vector<std::size_t> subset) const;
};

struct EpoCounts {
  BigInt even;
  BigInt odd;
};

/// Labeled 2k-tuples of distinct vertices split by the parity of the number of
/// octahedron positions {u_1(e_1), ..., u_k(e_k)} that are edges.
EpoCounts epo_parity_counts(const Hypergraph& y, const CountOptions& options = {});

/// Even partial octahedra; predicted main term q^{2k}/2.
CountReport count_epo_direct(const Hypergraph& y, const CountOptions& options = {});

enum class CharsumMethod { factored, naive };

struct CharsumReport {
  BigInt S;
  Rational estimate;  // q^{2k}/2 + S/2
  CharsumMethod method = CharsumMethod::factored;
  nlohmann::json to_json() const;
};

/// S = sum over u in F^{2k} of prod_e chi(f(u_1(e_1), ..., u_k(e_k))). The factored
/// form groups the two x_1 coordinates: S = sum_{u'} T(u')^2.
CharsumReport count_epo_charsum(const Hypergraph& y, CharsumMethod method = CharsumMethod::factored,
                                const CountOptions& options = {});

/// Injective maps of pattern vertices into F_q that preserve edges and non-edges;
/// predicted q^s / 2^{C(s,k)}.
CountReport count_labeled_induced(const Hypergraph& y, const Pattern& pattern, const CountOptions& options = {});

/// m-subsets all of whose k-subsets are edges; predicted q^m/(m! 2^{C(m,k)}) with
/// the error envelope attached. Throws InvalidArgument for m < k.
CountReport count_m_subsets(const Hypergraph& y, std::size_t m, const CountOptions& options = {});

struct CliqueResult {
  std::size_t size = 0;
  bool exact = true;
  std::vector<Elem> clique;
  std::uint64_t nodes = 0;
};

/// Branch and bound maximum clique (every k-subset an edge). Stops after
/// budget_nodes search nodes, returning the best clique found with exact = false.
CliqueResult omega_clique(const Hypergraph& y, std::uint64_t budget_nodes = std::uint64_t{1} << 26);

}  // namespace ffhyper
