"""Five-dimensional representations and their action on cubic forms.

Dihedral representations are sums of the two-dimensional rotation blocks
``V{k}/{n}`` and the characters T, L, L1, L2, written over Q(zeta_m) with
m = lcm(4, n) so that cos(2 pi k / n), sin(2 pi k / n) and i are all exact.

The action on forms is F -> F o g, so ``sym3_action(h) @ sym3_action(g)``
equals ``sym3_action(g h)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping

from . import linalg
from .exactmath import CycloElem, zeta
from .groups import FiniteGroup, a5, cyclic2, dihedral, element_order, matrix_group
from .mpoly import MPoly, from_vector, monomials

__all__ = [
    "Representation",
    "CharacterTableRow",
    "InconsistentTrace",
    "InconsistentCharacter",
    "RepresentationError",
    "parse_decomposition",
    "build_representation",
    "klein_symmetry_rep",
    "klein_generators",
    "rep_trace_table",
    "sym_action",
    "sym3_action",
    "eigenspace_cubics",
]


class RepresentationError(ValueError):
    pass


class InconsistentTrace(RepresentationError):
    pass


class InconsistentCharacter(RepresentationError):
    pass


@dataclass
class CharacterTableRow:
    order: int
    trace: CycloElem


@dataclass
class Representation:
    group: FiniteGroup
    dim: int
    matrices: dict
    conductor: int = 1
    label: str = ""
    _images: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._images:
            self._build_images()

    def _build_images(self):
        G = self.group
        ident = linalg.identity(self.dim, self.one, self.zero)
        images = {G.identity: ident}
        frontier = [G.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for name, g in G.generators.items():
                    y = G.mul(x, g)
                    My = linalg.matmul(images[x], self.matrices[name])
                    if y in images:
                        if images[y] != My:
                            raise RepresentationError(f"matrices do not satisfy the relations of {G.name}")
                    else:
                        images[y] = My
                        nxt.append(y)
            frontier = nxt
        if len(images) != len(G):
            raise RepresentationError("generators do not reach every group element")
        self._images = images

    @property
    def zero(self):
        return CycloElem.from_rational(self.conductor, 0) if self.conductor > 2 else Fraction(0)

    @property
    def one(self):
        return CycloElem.from_rational(self.conductor, 1) if self.conductor > 2 else Fraction(1)

    def matrix(self, g) -> list[list]:
        return self._images[g]

    def trace(self, g):
        return linalg.trace(self._images[g])


# building ---------------------------------------------------------------------

_SUMMAND = re.compile(r"^(\d*)(V(\d+)/(\d+)|T|L1|L2|L)$")


def parse_decomposition(text: str) -> list[tuple]:
    """'2V1/3+T' -> [('V', 1, 3), ('V', 1, 3), ('T',)]."""
    out = []
    for part in text.replace(" ", "").split("+"):
        m = _SUMMAND.match(part)
        if not m:
            raise RepresentationError(f"unknown summand {part!r}")
        mult = int(m.group(1) or 1)
        if m.group(3):
            item = ("V", int(m.group(3)), int(m.group(4)))
        else:
            item = (m.group(2),)
        out.extend([item] * mult)
    return out


def _dihedral_matrices(n: int, summands: list[tuple]) -> tuple[dict, int]:
    m = lcm(4, n)
    one = CycloElem.from_rational(m, 1)
    zero = CycloElem.from_rational(m, 0)
    i_unit = zeta(m, m // 4)
    dim = sum(2 if s[0] == "V" else 1 for s in summands)
    A = [[zero] * dim for _ in range(dim)]
    B = [[zero] * dim for _ in range(dim)]
    char_values = {"T": (1, 1), "L": (1, -1), "L1": (-1, 1), "L2": (-1, -1)}
    pos = 0
    for s in summands:
        if s[0] == "V":
            _, k, den = s
            if den != n or not 0 < k < n:
                raise RepresentationError(f"V{k}/{den} is not a representation of D{n}")
            z = zeta(m, k * (m // n))
            zi = z.inverse()
            c = (z + zi) / 2
            si = (z - zi) / (2 * i_unit)
            A[pos][pos], A[pos][pos + 1] = c, -si
            A[pos + 1][pos], A[pos + 1][pos + 1] = si, c
            B[pos][pos], B[pos + 1][pos + 1] = one, -one
            pos += 2
        else:
            if s[0] in ("L1", "L2") and n % 2:
                raise RepresentationError(f"{s[0]} exists only for even n")
            va, vb = char_values[s[0]]
            A[pos][pos] = one * va
            B[pos][pos] = one * vb
            pos += 1
    return {"a": A, "b": B}, m


def klein_generators() -> dict:
    """Diagonal order-11 and 5-cycle symmetries of the Klein cubic over Q(zeta_11)."""
    m = 11
    zero = CycloElem.from_rational(m, 0)
    one = CycloElem.from_rational(m, 1)
    diag = [1, 9, 3, 4, 5]
    D = [[zeta(m, diag[i]) if i == j else zero for j in range(5)] for i in range(5)]
    # x_i -> x_tau(i) with tau = (1 5 3 4 2) cycles the five monomials x_i x_tau(i)^2
    tau = {1: 5, 5: 3, 3: 4, 4: 2, 2: 1}
    P = [[one if j + 1 == tau[i + 1] else zero for j in range(5)] for i in range(5)]
    return {"s": D, "t": P}


def klein_symmetry_rep() -> Representation:
    gens = klein_generators()
    G = matrix_group("klein55", gens)
    return Representation(G, 5, {k: [list(r) for r in v] for k, v in gens.items()}, 11, "klein55")


def build_representation(name: str, decomposition: str = "standard", dim: int = 5) -> Representation:
    """Representation from a group label and a summand list, e.g. ('d6', 'V1/6+V2/6+T')."""
    name = name.lower()
    if name == "a5":
        if decomposition not in ("standard", ""):
            raise RepresentationError("a5 is only available with the 'standard' matrices")
        G = a5()
        mats = {k: [list(r) for r in v] for k, v in G.generators.items()}
        return Representation(G, 5, mats, 1, "a5:standard")
    if name == "klein":
        return klein_symmetry_rep()
    if name == "z2":
        summands = parse_decomposition(decomposition)
        if any(s[0] not in ("T", "L") for s in summands):
            raise RepresentationError("Z/2 only has the characters T and L")
        if len(summands) != dim:
            raise RepresentationError(f"decomposition has dimension {len(summands)}, expected {dim}")
        B = [[Fraction(0)] * dim for _ in range(dim)]
        for i, s in enumerate(summands):
            B[i][i] = Fraction(1 if s[0] == "T" else -1)
        return Representation(cyclic2(), dim, {"b": B}, 1, f"z2:{decomposition}")
    if name.startswith("d") and name[1:].isdigit():
        n = int(name[1:])
        summands = parse_decomposition(decomposition)
        d = sum(2 if s[0] == "V" else 1 for s in summands)
        if d != dim:
            raise RepresentationError(f"decomposition has dimension {d}, expected {dim}")
        mats, m = _dihedral_matrices(n, summands)
        return Representation(dihedral(n), dim, mats, m, f"{name}:{decomposition}")
    raise RepresentationError(f"unknown group label {name!r}")


# traces ---------------------------------------------------------------------


def _as_cyclo(x, m: int) -> CycloElem:
    if isinstance(x, CycloElem):
        return x
    return CycloElem.from_rational(max(m, 1), x)


def rep_trace_table(rep: Representation, strict: bool = True) -> list[CharacterTableRow]:
    """Trace of each element order class; InconsistentTrace if an order carries two traces."""
    seen: dict[int, list] = {}
    for g in rep.group.elements:
        o = element_order(rep.group, g)
        t = _as_cyclo(rep.trace(g), rep.conductor)
        bucket = seen.setdefault(o, [])
        if t not in bucket:
            bucket.append(t)
    rows = []
    for o in sorted(seen):
        if strict and len(seen[o]) > 1:
            raise InconsistentTrace(f"elements of order {o} have {len(seen[o])} different traces")
        rows.extend(CharacterTableRow(o, t) for t in seen[o])
    return rows


# action on forms ---------------------------------------------------------------


def sym_action(M, degree: int = 3) -> list[list]:
    """Matrix of F -> F(M x) on degree-d forms, in the degrevlex monomial basis."""
    n = len(M)
    basis = monomials(n, degree)
    index = {e: i for i, e in enumerate(basis)}
    gens = MPoly.gens(n)
    forms = []
    for row in M:
        f = MPoly.zero(n)
        for c, g in zip(row, gens):
            if c:
                f = f + g * c
        forms.append(f)
    sample = next(x for row in M for x in row if x)
    zero = sample - sample
    N = len(basis)
    out = [[zero] * N for _ in range(N)]
    for j, e in enumerate(basis):
        img = MPoly.constant(n, zero + 1)
        for i, k in enumerate(e):
            for _ in range(k):
                img = img * forms[i]
        for f, c in img.terms.items():
            out[index[f]][j] = out[index[f]][j] + c
    return out


def sym3_action(rep: Representation, g) -> list[list]:
    return sym_action(rep.matrix(g), 3)


def _extend_character(rep: Representation, chi: Mapping[str, object]) -> dict:
    G = rep.group
    if set(chi) != set(G.generators):
        raise InconsistentCharacter(f"character must be given on generators {sorted(G.generators)}")
    values = {G.identity: 1}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for name, g in G.generators.items():
                y = G.mul(x, g)
                v = values[x] * chi[name]
                if y in values:
                    if values[y] != v:
                        raise InconsistentCharacter("character values violate the group relations")
                else:
                    values[y] = v
                    nxt.append(y)
        frontier = nxt
    return values


def eigenspace_cubics(rep: Representation, chi: Mapping[str, object] | None = None) -> list[MPoly]:
    """Basis of the cubic forms F with F o g = chi(g) F for every generator g."""
    if chi is None:
        chi = {k: 1 for k in rep.group.generators}
    _extend_character(rep, chi)
    rows = []
    for name in rep.group.generators:
        A = sym_action(rep.matrices[name], 3)
        c = chi[name]
        for i, row in enumerate(A):
            r = list(row)
            r[i] = r[i] - c
            if any(r):
                rows.append(r)
    ncols = len(monomials(rep.dim, 3))
    if not rows:
        vecs = linalg.nullspace([[Fraction(0)] * ncols], ncols)
    else:
        vecs = linalg.nullspace(rows, ncols)
    out = []
    for v in vecs:
        p = from_vector(v, rep.dim, 3)
        out.append(p.rationalize() if p.is_rational() else p)
    return out
