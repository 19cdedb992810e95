#!/usr/bin/env python3
"""Brute-force reference values for the C++ test fixtures.

Everything here is deliberately naive and shares no code with the library:
finite fields are modelled as F_p[t]/(m(t)) with schoolbook arithmetic,
squares are found by squaring every element, and all counts are plain
nested loops (networkx is used for graph clique numbers).

Run:  python3 tests/oracles/oracle.py > tests/fixtures/oracle_fixtures.hpp
"""

import itertools
import math
import sys

import networkx as nx


class GF:
    def __init__(self, p, n=1):
        self.p, self.n, self.q = p, n, p**n
        self.mod = self._find_modulus() if n > 1 else None
        self.els = list(range(self.q))
        self._mul = {}
        sq = {self.mul(a, a) for a in self.els}
        self.squares = sq
        self.nonzero_squares = sq - {0}

    def digits(self, a):
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def code(self, ds):
        return sum(c * self.p**i for i, c in enumerate(ds))

    def _irreducible(self, coeffs):
        # a monic poly of degree <= 3 is irreducible iff it has no root
        p = self.p
        for x in range(p):
            if sum(c * x**i for i, c in enumerate(coeffs)) % p == 0:
                return False
        return True

    def _find_modulus(self):
        assert self.n in (2, 3)
        for tail in itertools.product(range(self.p), repeat=self.n):
            coeffs = list(reversed(tail)) + [1]
            if self._irreducible(coeffs):
                return coeffs
        raise RuntimeError

    def add(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        return self.code([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        if self.n == 1:
            return (-a) % self.p
        return self.code([(-x) % self.p for x in self.digits(a)])

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        key = (a, b)
        if key in self._mul:
            return self._mul[key]
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.n - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % self.p
        for d in range(len(prod) - 1, self.n - 1, -1):
            c = prod[d]
            if c:
                for i, m in enumerate(self.mod):
                    prod[d - self.n + i] = (prod[d - self.n + i] - c * m) % self.p
        r = self.code(prod[: self.n])
        self._mul[key] = r
        return r

    def chi(self, a):
        if a == 0:
            return 0
        return 1 if a in self.squares else -1

    def is_square(self, a):
        return a in self.squares


def field_for(q):
    for p in range(3, q + 1, 2):
        n = round(math.log(q, p))
        if p**n == q and all(p % d for d in range(2, p)):
            return GF(p, n)
    raise ValueError(q)


def f_prod_plus_one(F):
    def f(*xs):
        r = 1
        for x in xs:
            r = F.mul(r, x)
        return F.add(r, 1)
    return f


def f_sum(F):
    def f(*xs):
        r = 0
        for x in xs:
            r = F.add(r, x)
        return r
    return f


def edge_fn(F, f):
    return lambda *xs: F.is_square(f(*xs))


def epo_direct(F, f, k):
    is_edge = edge_fn(F, f)
    cache = {}

    def e(vs):
        key = tuple(sorted(vs))
        if key not in cache:
            cache[key] = is_edge(*vs)
        return cache[key]

    count = 0
    for tup in itertools.permutations(F.els, 2 * k):
        edges = 0
        for eps in itertools.product((0, 1), repeat=k):
            if e([tup[2 * i + eps[i]] for i in range(k)]):
                edges += 1
        if edges % 2 == 0:
            count += 1
    return count


def charsum_naive(F, f, k):
    total = 0
    for tup in itertools.product(F.els, repeat=2 * k):
        prod = 1
        for eps in itertools.product((0, 1), repeat=k):
            prod *= F.chi(f(*[tup[2 * i + eps[i]] for i in range(k)]))
            if prod == 0:
                break
        total += prod
    return total


def clique_number_graph(F, f):
    G = nx.Graph()
    G.add_nodes_from(F.els)
    for a, b in itertools.combinations(F.els, 2):
        if F.is_square(f(a, b)):
            G.add_edge(a, b)
    return max(len(c) for c in nx.find_cliques(G))


def clique_number_3(F, f):
    edge = {}
    for t in itertools.combinations(F.els, 3):
        edge[t] = F.is_square(f(*t))
    best = 2 if any(edge.values()) else 2  # any pair is a 3-uniform clique
    # grow all maximal cliques by brute force over subsets in increasing size
    level = [c for c in itertools.combinations(F.els, 3) if edge[c]]
    size = 3
    while level:
        best = size
        nxt = set()
        for c in level:
            for v in F.els:
                if v <= c[-1]:
                    continue
                if all(edge[tuple(sorted(pair + (v,)))] for pair in itertools.combinations(c, 2)):
                    nxt.add(c + (v,))
        level = list(nxt)
        size += 1
    return best


def m_subsets_common_neighbours(F, f):
    # k = 2, m = 3: for each edge {a,b} with a<b, count common neighbours c > b
    adj = {a: set() for a in F.els}
    for a, b in itertools.combinations(F.els, 2):
        if F.is_square(f(a, b)):
            adj[a].add(b)
            adj[b].add(a)
    total = 0
    for a in F.els:
        for b in adj[a]:
            if b > a:
                total += sum(1 for c in adj[a] & adj[b] if c > b)
    return total


def m_subsets_brute(F, f, k, m):
    edge = {t: F.is_square(f(*t)) for t in itertools.combinations(F.els, k)}
    total = 0
    for A in itertools.combinations(F.els, m):
        if all(edge[t] for t in itertools.combinations(A, k)):
            total += 1
    return total


def labeled_path3(F, f):
    # pattern: vertices 0-1-2, edges {0,1},{1,2}, non-edge {0,2}
    e = lambda a, b: F.is_square(f(a, b))
    return sum(
        1
        for a, b, c in itertools.permutations(F.els, 3)
        if e(a, b) and e(b, c) and not e(a, c)
    )


def const_square_set(F, max_deg):
    """All polynomials c*h^2 (c in F, h monic) of degree <= max_deg, as coefficient tuples."""
    out = set()
    for r in range(0, max_deg // 2 + 1):
        for tail in itertools.product(F.els, repeat=r):
            h = list(tail) + [1]
            sq = [0] * (2 * r + 1)
            for i, u in enumerate(h):
                for j, v in enumerate(h):
                    sq[i + j] = F.add(sq[i + j], F.mul(u, v))
            for c in F.els:
                poly = [F.mul(c, s) for s in sq]
                while poly and poly[-1] == 0:
                    poly.pop()
                out.add(tuple(poly))
    return out


def poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(u, v))
    while out and out[-1] == 0:
        out.pop()
    return out


def trim(poly):
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def x_set_diagonal(F):
    cs = const_square_set(F, 2)
    count = 0
    for u2, u3 in itertools.product(F.els, repeat=2):
        c0 = F.add(F.mul(u2, u2), F.mul(u3, u3))
        if tuple(trim([c0, 0, 1])) in cs:
            count += 1
    return count


def x_set_xy1(F):
    cs = const_square_set(F, 1)
    return [u for u in F.els if tuple(trim([1, u])) in cs]


def b_set_xy1(F):
    cs = const_square_set(F, 2)
    out = []
    for u, v in itertools.product(F.els, repeat=2):
        prod = poly_mul(F, trim([1, u]), trim([1, v]))
        if tuple(prod) in cs:
            out.append((u, v))
    return out


def slavov_x_xplus1(F):
    return sum(1 for x in F.els if x in F.nonzero_squares and F.add(x, 1) in F.nonzero_squares)


def quad_charsum(F, c):
    return sum(F.chi(F.add(F.mul(x, x), c)) for x in F.els)


def crosscheck(F, f, k, m):
    n_sets = m_subsets_brute(F, f, k, m)
    s = 0
    for tup in itertools.product(F.els, repeat=m):
        if all(
            f(*[tup[i] for i in I]) in F.nonzero_squares
            for I in itertools.combinations(range(m), k)
        ):
            s += 1
    return n_sets, s


def lex_least_irreducible(p, n):
    return GF(p, n).mod


def main():
    out = []
    w = out.append
    w("// Generated by tests/oracles/oracle.py -- brute-force reference values.")
    w("// Do not edit by hand; regenerate and commit.")
    w("#pragma once")
    w("")
    w("#include <cstdint>")
    w("")
    w("namespace ffhyper::fixtures {")
    w("")
    w("struct QCount {")
    w("  std::uint32_t q;")
    w("  std::int64_t value;")
    w("};")
    w("")

    m = lex_least_irreducible(3, 2)
    w(f"// lex-least monic irreducible quadratic over F_3, coefficients low to high")
    w(f"inline constexpr std::uint32_t kF9Modulus[] = {{{', '.join(map(str, m))}}};")
    w("")

    def table(name, rows):
        w(f"inline constexpr QCount {name}[] = {{")
        for q, v in rows:
            w(f"    {{{q}, {v}}},")
        w("};")
        w("")

    sys.stderr.write("epo k=2\n")
    table("kEpoXyPlus1K2", [(q, epo_direct(field_for(q), f_prod_plus_one(field_for(q)), 2)) for q in (5, 13, 17, 25, 29)])
    table("kEpoPaleyK2", [(q, epo_direct(field_for(q), f_sum(field_for(q)), 2)) for q in (5, 13, 17, 25, 29)])
    sys.stderr.write("epo k=3\n")
    table("kEpoXyzPlus1K3", [(q, epo_direct(field_for(q), f_prod_plus_one(field_for(q)), 3)) for q in (7, 9, 11)])
    table("kEpoPaleyK3", [(q, epo_direct(field_for(q), f_sum(field_for(q)), 3)) for q in (7, 9, 11)])

    sys.stderr.write("charsum\n")
    F5 = GF(5)
    w(f"inline constexpr std::int64_t kCharsumXyPlus1F5 = {charsum_naive(F5, f_prod_plus_one(F5), 2)};")
    F7 = GF(7)
    w(f"inline constexpr std::int64_t kCharsumPaleyK3F7 = {charsum_naive(F7, f_sum(F7), 3)};")
    w("")

    w(f"inline constexpr std::int64_t kPaleyF5Path3 = {labeled_path3(F5, f_sum(F5))};")
    w("")

    sys.stderr.write("tuples\n")
    table("kTriplesXyPlus1", [(q, m_subsets_common_neighbours(field_for(q), f_prod_plus_one(field_for(q)))) for q in (101, 151)])
    table("kQuadruplesXyzPlus1", [(q, m_subsets_brute(field_for(q), f_prod_plus_one(field_for(q)), 3, 4)) for q in (13, 17, 31)])

    sys.stderr.write("cliques\n")
    qs2 = [q for q in range(3, 32, 2) if q not in (15, 21)]
    table("kOmegaXyPlus1K2", [(q, clique_number_graph(field_for(q), f_prod_plus_one(field_for(q)))) for q in qs2])
    table("kOmegaPaleyK2", [(q, clique_number_graph(field_for(q), f_sum(field_for(q)))) for q in qs2])
    qs3 = [3, 5, 7, 9, 11, 13]
    table("kOmegaXyzPlus1K3", [(q, clique_number_3(field_for(q), f_prod_plus_one(field_for(q)))) for q in qs3])
    table("kOmegaPaleyK3", [(q, clique_number_3(field_for(q), f_sum(field_for(q)))) for q in qs3])

    sys.stderr.write("bounds\n")
    for q in (13, 17):
        F = GF(q)
        vals = sorted({quad_charsum(F, c) for c in range(1, q)})
        assert len(vals) == 1
        w(f"inline constexpr std::int64_t kQuadCharsumF{q} = {vals[0]};")
    F13 = GF(13)
    w(f"inline constexpr std::int64_t kWeilX2Plus1F13 = {quad_charsum(F13, 1)};")
    w(f"inline constexpr std::int64_t kXDiagonalF7 = {x_set_diagonal(GF(7))};")
    w(f"inline constexpr std::int64_t kXDiagonalF13 = {x_set_diagonal(GF(13))};")
    w(f"inline constexpr std::int64_t kXDiagonalF5 = {x_set_diagonal(GF(5))};")
    xs = x_set_xy1(F5)
    w(f"inline constexpr std::int64_t kXXyPlus1F5 = {len(xs)};  // members: {xs}")
    bs = b_set_xy1(F5)
    w(f"inline constexpr std::int64_t kBXyPlus1F5 = {len(bs)};  // members: {bs}")
    table("kSlavovXXPlus1", [(q, slavov_x_xplus1(field_for(q))) for q in (13, 29, 53)])

    n, s = crosscheck(F7, f_prod_plus_one(F7), 2, 2)
    w(f"inline constexpr std::int64_t kCrossN_XyPlus1F7M2 = {n};")
    w(f"inline constexpr std::int64_t kCrossS_XyPlus1F7M2 = {s};")
    w("")

    # zero count of x1^2 + x2^2 over F_7
    zc = sum(1 for a, b in itertools.product(F7.els, repeat=2) if F7.add(F7.mul(a, a), F7.mul(b, b)) == 0)
    w(f"inline constexpr std::int64_t kZerosX2PlusY2F7 = {zc};")
    # edge checks
    w(f"inline constexpr bool kXyPlus1F5Edge24 = {str(F5.is_square(f_prod_plus_one(F5)(2, 4))).lower()};")
    w(f"inline constexpr bool kXyPlus1F7Edge14 = {str(F7.is_square(f_prod_plus_one(F7)(1, 4))).lower()};")
    w("")
    w("}  // namespace ffhyper::fixtures")
    print("\n".join(out))


if __name__ == "__main__":
    main()
