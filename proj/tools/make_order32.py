#!/usr/bin/env python3
"""Writes permutation-generator files for non-abelian groups of order 32.

Each group is built from a multiplication rule and emitted as its right
regular representation. Groups whose isomorphism invariants collide with an
earlier entry are dropped, so the output is a set of pairwise
non-isomorphic groups (a subset of the 44 non-abelian ones).

Usage: make_order32.py OUTPUT_DIR
"""

import itertools
import json
import sys
from collections import Counter
from pathlib import Path


class Group:
    def __init__(self, name, elements, mul, identity):
        self.name = name
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.mul = mul
        self.identity = identity

    def table(self):
        n = len(self.elements)
        return [[self.index[self.mul(self.elements[i], self.elements[j])] for j in range(n)] for i in range(n)]


def cyclic(n):
    return Group(f"Z{n}", range(n), lambda a, b: (a + b) % n, 0)


def semidirect(n, m, t, name):
    """<a, b | a^n = b^m = 1, b^-1 a b = a^t> on pairs a^i b^j."""
    u = pow(t, -1, n)

    def mul(x, y):
        (i, j), (k, l) = x, y
        return ((i + k * pow(u, j, n)) % n, (j + l) % m)

    return Group(name, itertools.product(range(n), range(m)), mul, (0, 0))


def dicyclic(n, name):
    """<a, b | a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1> on pairs a^i b^j, j in {0, 1}."""
    N = 2 * n

    def mul(x, y):
        (i, j), (k, l) = x, y
        # b^j a^k = a^(k * (-1)^j) b^j
        k2 = k if j == 0 else -k
        e = i + k2
        if j + l == 2:
            return ((e + n) % N, 0)
        return (e % N, j + l)

    return Group(name, itertools.product(range(N), range(2)), mul, (0, 0))


def product(g, h, name):
    return Group(name, itertools.product(g.elements, h.elements),
                 lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])), (g.identity, h.identity))


def central_product_d8(h, name):
    """D8 o H, identifying the central involution of D8 with h.z."""
    d8 = semidirect(4, 2, 3, "D8")
    z_d8 = (2, 0)
    full = product(d8, h, "tmp")
    zh = h.z
    quotient = {}
    reps = []
    for e in full.elements:
        partner = (d8.mul(e[0], z_d8), h.mul(e[1], zh))
        key = min(e, partner)
        if key not in quotient:
            reps.append(key)
        quotient[e] = key
    return Group(name, reps, lambda x, y: quotient[full.mul(x, y)], quotient[full.identity])


def wreath(n, name):
    """Z_n wr Z_2 = (Z_n x Z_n) : Z_2 with the swap."""

    def mul(x, y):
        (a, b, s), (c, d, t) = x, y
        if s:
            c, d = d, c
        return ((a + c) % n, (b + d) % n, s ^ t)

    return Group(name, itertools.product(range(n), range(n), range(2)), mul, (0, 0, 0))


def klein_wreath(name):
    """(Z2^2 x Z2^2) : Z2 with the swap."""
    v = list(itertools.product(range(2), range(2)))

    def mul(x, y):
        (a, b, s), (c, d, t) = x, y
        if s:
            c, d = d, c
        return (((a[0] + c[0]) % 2, (a[1] + c[1]) % 2), ((b[0] + d[0]) % 2, (b[1] + d[1]) % 2), s ^ t)

    return Group(name, itertools.product(v, v, range(2)), mul, ((0, 0), (0, 0), 0))


def invariants(tab):
    n = len(tab)
    inv = [row.index(0) for row in tab]
    orders = []
    for x in range(n):
        k, p = 1, x
        while p != 0:
            p = tab[p][x]
            k += 1
        orders.append(k)
    centre = [z for z in range(n) if all(tab[z][y] == tab[y][z] for y in range(n))]
    cent_sizes = Counter(sum(1 for y in range(n) if tab[x][y] == tab[y][x]) for x in range(n))
    commutators = {tab[tab[inv[x]][inv[y]]][tab[x][y]] for x in range(n) for y in range(n)}
    squares = {tab[x][x] for x in range(n)}
    return (tuple(sorted(Counter(orders).items())), len(centre), tuple(sorted(cent_sizes.items())),
            len(commutators), len(squares),
            tuple(sorted(Counter((orders[x], sum(1 for y in range(n) if tab[x][y] == tab[y][x]))
                                 for x in range(n)).items())))


def regular_generators(tab):
    """Right-regular permutations of a generating set found greedily."""
    n = len(tab)
    gens = []
    span = {0}

    def closure(gs):
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in gs:
                y = tab[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    for x in range(1, n):
        if x not in span:
            gens.append(x)
            span = closure(gens)
        if len(span) == n:
            break
    return [[tab[p][g] for p in range(n)] for g in gens]


def main():
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)

    d8, q8 = semidirect(4, 2, 3, "D8"), dicyclic(2, "Q8")
    z2, z4 = cyclic(2), cyclic(4)
    z2z2 = product(z2, z2, "Z2xZ2")
    q8.z = (2, 0)
    d8.z = (2, 0)
    z4_as_h = cyclic(4)
    z4_as_h.z = 2

    candidates = [
        semidirect(16, 2, 15, "D32"),
        dicyclic(8, "Q32"),
        semidirect(16, 2, 7, "QD32"),
        semidirect(16, 2, 9, "M32"),
        semidirect(8, 4, 3, "Z8:Z4-3"),
        semidirect(8, 4, 5, "Z8:Z4-5"),
        semidirect(8, 4, 7, "Z8:Z4-7"),
        semidirect(4, 8, 3, "Z4:Z8"),
        product(d8, z4, "D8xZ4"),
        product(q8, z4, "Q8xZ4"),
        product(d8, z2z2, "D8xZ2xZ2"),
        product(q8, z2z2, "Q8xZ2xZ2"),
        product(semidirect(8, 2, 7, "D16"), z2, "D16xZ2"),
        product(dicyclic(4, "Q16"), z2, "Q16xZ2"),
        product(semidirect(8, 2, 3, "QD16"), z2, "QD16xZ2"),
        product(semidirect(8, 2, 5, "M16"), z2, "M16xZ2"),
        product(semidirect(4, 4, 3, "Z4:Z4"), z2, "(Z4:Z4)xZ2"),
        product(central_product_d8(z4_as_h, "D8oZ4"), z2, "(D8oZ4)xZ2"),
        central_product_d8(d8, "D8oD8"),
        central_product_d8(q8, "D8oQ8"),
        wreath(4, "Z4wrZ2"),
        klein_wreath("Z2^2wrZ2"),
    ]

    seen = {}
    kept = 0
    for g in candidates:
        tab = g.table()
        assert len(tab) == 32, g.name
        if all(tab[x][y] == tab[y][x] for x in range(32) for y in range(32)):
            continue
        key = invariants(tab)
        if key in seen:
            print(f"skip {g.name}: invariants match {seen[key]}", file=sys.stderr)
            continue
        seen[key] = g.name
        gens = regular_generators(tab)
        doc = {"name": g.name, "degree": 32, "generators": gens}
        fname = g.name.replace(":", "_").replace("^", "").replace("(", "").replace(")", "")
        (out / f"{fname}.json").write_text(json.dumps(doc) + "\n")
        kept += 1
    print(f"wrote {kept} groups", file=sys.stderr)


if __name__ == "__main__":
    main()
