"""Finite groups generated by involutions: PSL2(F_11), dihedral groups, A5.

Elements are hashable values and each :class:`FiniteGroup` carries its own
multiplication.  Element lists are in a deterministic canonical order, and
everything downstream (involution order, Gram matrices) inherits it.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Hashable, Sequence

__all__ = [
    "FiniteGroup",
    "UnknownGroup",
    "psl2_element",
    "psl2_11",
    "dihedral",
    "cyclic2",
    "matrix_group",
    "a5_matrices",
    "a5",
    "enumerate_group",
    "element_order",
    "involutions",
    "pair_order_histogram",
    "conjugacy_class",
    "linear_characters",
    "check_group_axioms",
]


class UnknownGroup(KeyError):
    pass


@dataclass
class FiniteGroup:
    name: str
    elements: list
    mul: Callable[[Hashable, Hashable], Hashable]
    identity: Hashable
    generators: dict = field(default_factory=dict)

    def __post_init__(self):
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._inverse: dict = {}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._index

    def index(self, g) -> int:
        return self._index[g]

    def inverse(self, g):
        if g not in self._inverse:
            h = g
            prev = self.identity
            while h != self.identity:
                prev = h
                h = self.mul(h, g)
            self._inverse[g] = prev if g != self.identity else g
        return self._inverse[g]

    def power(self, g, k: int):
        if k < 0:
            g, k = self.inverse(g), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out


# PSL2(F_11) ---------------------------------------------------------------

P = 11


def psl2_element(a: int, b: int, c: int, d: int, p: int = P) -> tuple[int, int, int, int]:
    """Canonical representative of +-[[a, b], [c, d]]: first nonzero entry in 1..(p-1)/2."""
    v = tuple(x % p for x in (a, b, c, d))
    if (v[0] * v[3] - v[1] * v[2]) % p != 1:
        raise ValueError(f"{v} does not have determinant 1 mod {p}")
    first = next(x for x in v if x)
    if first > (p - 1) // 2:
        v = tuple((-x) % p for x in v)
    return v


def _psl2_mul(g, h, p=P):
    a, b, c, d = g
    e, f, u, v = h
    return psl2_element(a * e + b * u, a * f + b * v, c * e + d * u, c * f + d * v, p)


def psl2_11() -> FiniteGroup:
    elems = set()
    for a, b, c, d in product(range(P), repeat=4):
        if (a * d - b * c) % P == 1:
            elems.add(psl2_element(a, b, c, d))
    return FiniteGroup("psl2_11", sorted(elems), _psl2_mul, (1, 0, 0, 1))


# dihedral -----------------------------------------------------------------


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n; (k, s) stands for a^k b^s with a^n = b^2 = 1, b a b = a^-1."""
    if n < 2:
        raise ValueError("dihedral groups need n >= 2")

    def mul(g, h):
        k1, s1 = g
        k2, s2 = h
        return ((k1 + (-k2 if s1 else k2)) % n, s1 ^ s2)

    elems = [(k, s) for s in (0, 1) for k in range(n)]
    return FiniteGroup(f"d{n}", elems, mul, (0, 0), {"a": (1 % n, 0), "b": (0, 1)})


def cyclic2() -> FiniteGroup:
    return FiniteGroup("z2", [0, 1], lambda g, h: g ^ h, 0, {"b": 1})


# matrix groups --------------------------------------------------------------


def _mat_mul(A, B):
    n = len(A)
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(n) if A[i][k] and B[k][j]), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def _freeze(M):
    return tuple(tuple(x for x in row) for row in M)


def matrix_group(name: str, generators: dict, limit: int = 10_000) -> FiniteGroup:
    """Close a set of invertible matrices under multiplication (breadth-first, generator order)."""
    gens = {k: _freeze(v) for k, v in generators.items()}
    first = next(iter(gens.values()))
    n = len(first)
    zero = first[0][0] - first[0][0]
    one = zero + 1
    ident = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens.values():
                x = _mat_mul(g, h)
                if x not in seen:
                    seen.add(x)
                    elems.append(x)
                    nxt.append(x)
                    if len(elems) > limit:
                        raise ValueError("matrix group is too large or infinite")
        frontier = nxt
    return FiniteGroup(name, elems, _mat_mul, ident, gens)


def a5_matrices() -> dict:
    """The generators a (order 2) and b (order 3) of A5 acting on C^5."""
    h = Fraction(1, 2)
    F = Fraction
    a = [[F(-1 if i == j and i < 2 else int(i == j)) for j in range(5)] for i in range(5)]
    b = [
        [-h, -h, h, -h, F(0)],
        [h, F(0), h, F(0), -h],
        [-h, h, h, h, F(0)],
        [h, F(0), h, F(0), h],
        [F(0), F(0), F(-2), F(-2), F(-1)],
    ]
    return {"a": a, "b": b}


def a5() -> FiniteGroup:
    return matrix_group("a5", a5_matrices())


def enumerate_group(name: str, n: int | None = None) -> FiniteGroup:
    """Look up a group by label: psl2_11, a5, z2, dN (or d with n)."""
    name = name.lower()
    if name == "psl2_11":
        return psl2_11()
    if name == "a5":
        return a5()
    if name in ("z2", "c2"):
        return cyclic2()
    if name == "d" and n is not None:
        return dihedral(n)
    if name.startswith("d") and name[1:].isdigit():
        return dihedral(int(name[1:]))
    raise UnknownGroup(name)


# structure ------------------------------------------------------------------


def element_order(G: FiniteGroup, g) -> int:
    k, h = 1, g
    while h != G.identity:
        h = G.mul(h, g)
        k += 1
    return k


def involutions(G: FiniteGroup) -> list:
    """Elements of order exactly 2, in the group's canonical order."""
    return [g for g in G.elements if g != G.identity and G.mul(g, g) == G.identity]


def pair_order_histogram(G: FiniteGroup, invs: Sequence | None = None) -> dict[int, int]:
    """Count unordered pairs {g, h} of distinct involutions by the order of gh."""
    if invs is None:
        invs = involutions(G)
    hist: Counter = Counter()
    for g, h in combinations(invs, 2):
        hist[element_order(G, G.mul(g, h))] += 1
    return dict(sorted(hist.items()))


def conjugacy_class(G: FiniteGroup, g, by: Sequence | None = None) -> list:
    """Orbit of g under conjugation by ``by`` (default: all of G), in canonical order."""
    conj = by if by is not None else G.elements
    orbit = {G.mul(G.mul(x, g), G.inverse(x)) for x in conj}
    return [h for h in G.elements if h in orbit]


def check_group_axioms(G: FiniteGroup, samples: int = 1000, seed: int = 0) -> None:
    """Closure and inverses exhaustively, associativity on random triples; AssertionError on failure."""
    elems = G.elements
    for g in elems:
        if G.mul(g, G.identity) != g or G.mul(G.identity, g) != g:
            raise AssertionError(f"identity law fails at {g}")
        if G.mul(g, G.inverse(g)) != G.identity:
            raise AssertionError(f"no inverse for {g}")
        for h in elems:
            if G.mul(g, h) not in G:
                raise AssertionError("not closed under multiplication")
    rng = random.Random(seed)
    for _ in range(samples):
        x, y, z = (rng.choice(elems) for _ in range(3))
        if G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z)):
            raise AssertionError("associativity fails")


def linear_characters(G: FiniteGroup) -> dict[str, dict]:
    """One-dimensional characters of a dihedral group (or Z/2), as generator -> +-1."""
    if G.name == "z2":
        return {"T": {"b": 1}, "L": {"b": -1}}
    if not (G.name.startswith("d") and G.name[1:].isdigit()):
        raise UnknownGroup(f"linear characters are only tabulated for dihedral groups, not {G.name}")
    n = int(G.name[1:])
    chars = {"T": {"a": 1, "b": 1}, "L": {"a": 1, "b": -1}}
    if n % 2 == 0:
        chars["L1"] = {"a": -1, "b": 1}
        chars["L2"] = {"a": -1, "b": -1}
    return chars
