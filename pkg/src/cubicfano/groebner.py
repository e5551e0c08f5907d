"""Buchberger's algorithm and the Jacobian-criterion smoothness test.

Pairs are processed smallest-lcm first (the normal strategy) and discarded
by the coprime-leading-monomial criterion and the chain criterion.
Coefficients stay exact throughout.
"""

from __future__ import annotations

import heapq
from typing import Sequence

from .mpoly import MPoly, order_key, partials

__all__ = [
    "groebner",
    "normal_form",
    "s_polynomial",
    "is_groebner",
    "projective_empty",
    "smooth_cubic",
    "NotACubic",
]


class NotACubic(ValueError):
    pass


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _Ring:
    def __init__(self, nvars: int, order: str):
        self.nvars = nvars
        self.order = order
        self.key = order_key(order)
        if order == "degrevlex":
            self.heap_key = lambda e: (-sum(e), e[::-1])
        else:
            self.heap_key = lambda e: tuple(-x for x in e)

    def lead(self, f: dict):
        return max(f, key=self.key)


def _reduce(f: dict, basis: list, ring: _Ring, full: bool = True) -> dict:
    """Normal form of f modulo basis entries (lm, monic dict)."""
    h = dict(f)
    heap = [(ring.heap_key(e), e) for e in h]
    heapq.heapify(heap)
    queued = set(h)
    rem: dict = {}
    while heap:
        _, e = heapq.heappop(heap)
        queued.discard(e)
        c = h.pop(e, None)
        if c is None or not c:
            continue
        for lm, g in basis:
            if _divides(lm, e):
                shift = tuple(x - y for x, y in zip(e, lm))
                for ge, gc in g.items():
                    if ge == lm:
                        continue
                    t = tuple(x + y for x, y in zip(ge, shift))
                    v = h.get(t, 0) - c * gc
                    if v:
                        h[t] = v
                        if t not in queued:
                            queued.add(t)
                            heapq.heappush(heap, (ring.heap_key(t), t))
                    else:
                        h.pop(t, None)
                break
        else:
            rem[e] = c
            if not full:
                rem.update((k, v) for k, v in h.items() if v)
                return rem
    return rem


def _monic(f: dict, ring: _Ring):
    lm = ring.lead(f)
    inv = 1 / f[lm]
    return lm, {e: c * inv for e, c in f.items()}


def _spoly(f, g, ring: _Ring) -> dict:
    (lf, pf), (lg, pg) = f, g
    L = _lcm(lf, lg)
    sf = tuple(x - y for x, y in zip(L, lf))
    sg = tuple(x - y for x, y in zip(L, lg))
    out: dict = {}
    for e, c in pf.items():
        t = tuple(x + y for x, y in zip(e, sf))
        out[t] = out.get(t, 0) + c
    for e, c in pg.items():
        t = tuple(x + y for x, y in zip(e, sg))
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return {e: c for e, c in out.items() if c}


def _check_ring(generators: Sequence[MPoly]) -> int:
    nv = {g.nvars for g in generators}
    if len(nv) > 1:
        raise ValueError("generators live in different polynomial rings")
    return nv.pop()


def groebner(generators: Sequence[MPoly], order: str = "degrevlex") -> list[MPoly]:
    """Reduced Groebner basis with monic elements, sorted by increasing leading monomial."""
    gens = [g for g in generators if g]
    if not gens:
        return []
    nvars = _check_ring(gens)
    ring = _Ring(nvars, order)
    basis: list = []
    pairs: list = []
    counter = 0

    def add(f: dict):
        nonlocal counter
        new = _monic(f, ring)
        lm = new[0]
        k = len(basis)
        for i, (lmi, _) in enumerate(basis):
            if lmi is None:
                continue
            L = _lcm(lmi, lm)
            heapq.heappush(pairs, (ring.key(L), counter, i, k))
            counter += 1
        basis.append(new)

    for g in sorted(gens, key=lambda p: ring.key(ring.lead(p.terms))):
        r = _reduce(g.terms, [b for b in basis if b[0] is not None], ring)
        if r:
            add(r)

    done: set = set()
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        lmi, lmj = basis[i][0], basis[j][0]
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        L = _lcm(lmi, lmj)
        chain = False
        for k, (lmk, _) in enumerate(basis):
            if k in (i, j) or not _divides(lmk, L):
                continue
            if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
                chain = True
                break
        if chain:
            continue
        r = _reduce(_spoly(basis[i], basis[j], ring), basis, ring)
        if r:
            add(r)

    # minimalize then interreduce
    lms = [b[0] for b in basis]
    keep = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, other in enumerate(lms):
            if j != i and _divides(other, lm) and (other != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(basis[i])
    reduced = []
    for i, (lm, f) in enumerate(keep):
        others = [b for k, b in enumerate(keep) if k != i]
        tail = {e: c for e, c in f.items() if e != lm}
        r = _reduce(tail, others, ring)
        r[lm] = f[lm]
        reduced.append((lm, r))
    reduced.sort(key=lambda b: ring.key(b[0]))
    return [MPoly(nvars, f) for _, f in reduced]


def normal_form(f: MPoly, basis: Sequence[MPoly], order: str = "degrevlex") -> MPoly:
    """Full remainder of f on division by basis (any generating set)."""
    if not f:
        return f
    ring = _Ring(f.nvars, order)
    prepared = [_monic(g.terms, ring) for g in basis if g]
    return MPoly(f.nvars, _reduce(f.terms, prepared, ring))


def s_polynomial(f: MPoly, g: MPoly, order: str = "degrevlex") -> MPoly:
    ring = _Ring(f.nvars, order)
    return MPoly(f.nvars, _spoly(_monic(f.terms, ring), _monic(g.terms, ring), ring))


def is_groebner(basis: Sequence[MPoly], order: str = "degrevlex") -> bool:
    """Every pairwise S-polynomial reduces to zero."""
    basis = [b for b in basis if b]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if normal_form(s_polynomial(basis[a], basis[b], order), basis, order):
                return False
    return True


def projective_empty(generators: Sequence[MPoly]) -> bool:
    """True iff the homogeneous generators have no common zero in projective space.

    Decided on the degrevlex basis: the staircase is finite exactly when
    every variable has a pure power among the leading monomials.
    """
    gens = [g for g in generators if g]
    if not gens:
        return False
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("projective_empty needs homogeneous generators")
    nvars = _check_ring(gens)
    gb = groebner(gens, "degrevlex")
    ring = _Ring(nvars, "degrevlex")
    lms = [ring.lead(g.terms) for g in gb]
    for i in range(nvars):
        if not any(all(x == 0 for k, x in enumerate(lm) if k != i) for lm in lms):
            return False
    return True


def smooth_cubic(F: MPoly) -> str:
    """'smooth' or 'singular' by the Jacobian criterion."""
    if not F or not F.is_homogeneous(3):
        raise NotACubic("expected a nonzero homogeneous cubic form")
    if F.is_rational():
        F = F.rationalize()
    return "smooth" if projective_empty(partials(F)) else "singular"
