"""Gram matrices of genus-2 curve classes indexed by involutions, and their invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .. import linalg
from ..groups import (
    FiniteGroup,
    conjugacy_class,
    element_order,
    enumerate_group,
    involutions,
)
from ..lattice import (
    LatticeError,
    adjoin_class,
    evaluate_form,
    factor_integer,
    half_scale,
    lattice_invariants,
    radical_quotient,
    sublattice_index,
)


@dataclass(frozen=True)
class IntersectionRule:
    """Self-intersection on the diagonal, otherwise a value keyed by the order of gh."""

    diag: int = -4
    by_order: dict = field(default_factory=lambda: {2: 0, 3: 2, 5: 1, 6: 0})

    @classmethod
    def from_xyzw(cls, x: int, y: int, z: int, w: int, diag: int = -4) -> "IntersectionRule":
        return cls(diag, {2: x, 3: y, 5: z, 6: w})

    def __hash__(self):
        return hash((self.diag, tuple(sorted(self.by_order.items()))))


GENUS2_RULE = IntersectionRule()

# self-intersection and pairing of the incidence divisor with a genus-2 curve
INCIDENCE_SQUARE = 5
INCIDENCE_PAIRING = 2


class MissingOrder(LatticeError):
    pass


@lru_cache(maxsize=None)
def _group(name: str) -> FiniteGroup:
    return enumerate_group(name)


@lru_cache(maxsize=None)
def _order_table(name: str) -> tuple[tuple[int, ...], ...]:
    G = _group(name)
    invs = involutions(G)
    return tuple(tuple(element_order(G, G.mul(g, h)) if g != h else 1 for h in invs) for g in invs)


def _orders_for(G: FiniteGroup):
    try:
        if _group(G.name).elements == G.elements:
            return _order_table(G.name)
    except KeyError:
        pass
    invs = involutions(G)
    return tuple(tuple(element_order(G, G.mul(g, h)) if g != h else 1 for h in invs) for g in invs)


def gram_from_group(G: FiniteGroup, rule: IntersectionRule = GENUS2_RULE) -> list[list[int]]:
    """Gram matrix on the involutions of G, in the group's canonical involution order."""
    orders = _orders_for(G)
    out = []
    for i, row in enumerate(orders):
        line = []
        for j, o in enumerate(row):
            if i == j:
                line.append(rule.diag)
            elif o in rule.by_order:
                line.append(rule.by_order[o])
            else:
                raise MissingOrder(f"no intersection value for products of order {o}")
        out.append(line)
    return out


def lambda_survey() -> list[dict]:
    """Rank of the 55x55 Gram matrix for each (x, y, z, w) in {0,1,2}^4."""
    G = _group("psl2_11")
    records = []
    for xyzw in product(range(3), repeat=4):
        M = gram_from_group(G, IntersectionRule.from_xyzw(*xyzw))
        records.append({"xyzw": list(xyzw), "rank": linalg.bareiss_rank(M)})
    return records


def survey_low_rank(records: list[dict], bound: int = 25) -> list[tuple[int, ...]]:
    return [tuple(r["xyzw"]) for r in records if r["rank"] <= bound]


def _factored(n: int) -> dict[int, int]:
    return factor_integer(abs(n))


def klein_report() -> dict:
    """Invariants of the 55 genus-2 classes on the Klein Fano surface and of their saturation."""
    G = _group("psl2_11")
    M = gram_from_group(G, GENUS2_RULE)
    inv = lattice_invariants(M)
    ext = adjoin_class(M, [INCIDENCE_PAIRING] * len(M), INCIDENCE_SQUARE)
    inv_ext = lattice_invariants(ext)
    index = sublattice_index(M, ext)

    # coordinates of the incidence class in a basis of the 55-curve lattice (over Q)
    B, Gq = radical_quotient(M)
    rhs = [sum(b) * INCIDENCE_PAIRING for b in B]
    coords = linalg.solve(Gq, rhs)
    self_int = sum(coords[i] * Gq[i][j] * coords[j] for i in range(len(coords)) for j in range(len(coords)))
    if self_int != INCIDENCE_SQUARE:
        raise LatticeError("incidence class is not in the rational span of the genus-2 classes")
    denominators = sorted({Fraction(c).denominator for c in coords})
    return {
        "rank": inv.rank,
        "signature": list(inv.signature),
        "disc_lambda": inv.discriminant,
        "disc_lambda_factored": _factored(inv.discriminant),
        "rank_ns": inv_ext.rank,
        "signature_ns": list(inv_ext.signature),
        "disc_ns": inv_ext.discriminant,
        "disc_ns_factored": _factored(inv_ext.discriminant),
        "index": index,
        "incidence_in_lambda": denominators == [1],
        "incidence_coordinate_denominators": denominators,
    }


def _reflection_classes(G: FiniteGroup) -> tuple[list, list]:
    """Involutions split into classes under conjugation by rotations, and the central ones."""
    rotations = [g for g in G.elements if g[1] == 0]
    invs = involutions(G)
    central = [g for g in invs if all(G.mul(g, h) == G.mul(h, g) for h in G.elements)]
    classes: list[list] = []
    for g in invs:
        if g in central or any(g in c for c in classes):
            continue
        classes.append(conjugacy_class(G, g, by=rotations))
    return classes, central


def group_lattice_report(name: str) -> dict:
    """Lattice invariants under the intersection rule, plus fibre isotropy checks."""
    if name not in ("z2", "d2", "d3", "d5", "d6", "a5"):
        raise KeyError(f"unsupported group {name!r}")
    G = _group(name)
    invs = involutions(G)
    M = gram_from_group(G, GENUS2_RULE)
    inv = lattice_invariants(M)
    out = {
        "group": name,
        "involutions": len(invs),
        "rank": inv.rank,
        "signature": list(inv.signature),
        "discriminant": inv.discriminant,
        "discriminant_factored": _factored(inv.discriminant),
    }
    if name in ("d3", "d5"):
        out["all_ones_square"] = evaluate_form(M, [1] * len(invs))
    if name == "d6":
        classes, central = _reflection_classes(G)
        vecs = [[int(g in c) for g in invs] for c in classes]
        F1, F2 = vecs
        c = [int(g in central) for g in invs]

        def pair(u, v):
            return sum(u[i] * M[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))

        out.update(
            {
                "fibre_classes": [[invs.index(g) for g in cl] for cl in classes],
                "central": [invs.index(g) for g in central],
                "F1_square": evaluate_form(M, F1),
                "F2_square": evaluate_form(M, F2),
                "F1_F2": pair(F1, F2),
                "central_F1": pair(c, F1),
                "central_F2": pair(c, F2),
                "central_square": evaluate_form(M, c),
            }
        )
    return out


def scaled_lattice_report() -> dict:
    """Invariants of both half-scaled candidates for the 55 (-2)-curve lattice."""
    G = _group("psl2_11")
    out = {}
    for label, xyzw in (("half_0002", (0, 0, 0, 2)), ("half_0020", (0, 0, 2, 0))):
        M = gram_from_group(G, IntersectionRule.from_xyzw(*xyzw))
        inv_full = lattice_invariants(M)
        inv = lattice_invariants(half_scale(M))
        out[label] = {
            "full": {
                "rank": inv_full.rank,
                "signature": list(inv_full.signature),
                "discriminant": inv_full.discriminant,
                "discriminant_factored": _factored(inv_full.discriminant),
            },
            "half": {
                "rank": inv.rank,
                "signature": list(inv.signature),
                "discriminant": inv.discriminant,
                "discriminant_factored": _factored(inv.discriminant),
            },
        }
    return out


@dataclass
class NumericIdentityReport:
    CD: int
    D2: int
    R2: int
    CR: int
    genusR: int


def numeric_identities() -> NumericIdentityReport:
    """Solve for the intersection numbers of C_t = D + R with D a smooth genus-2 curve.

    Inputs: C^2 = 5, K = 3C numerically, D.R = 6, genus(D) = 2.
    Unknowns in order: C.D, D^2, R^2, C.R.
    """
    C2, K_mult, DR, gD = 5, 3, 6, 2
    F = Fraction
    A = [
        [F(0), F(1), F(1), F(0)],  # D^2 + R^2 = C^2 - 2 DR
        [F(2), F(-1), F(1), F(0)],  # R^2 = D^2 - 2 CD + C^2
        [F(K_mult), F(1), F(0), F(0)],  # adjunction on D: D^2 + K.D = 2g - 2
        [F(1), F(0), F(0), F(1)],  # C.D + C.R = C^2
        [F(1), F(-1), F(0), F(0)],  # C.D = D^2 + D.R
    ]
    b = [F(C2 - 2 * DR), F(C2), F(2 * gD - 2), F(C2), F(DR)]
    if linalg.rank(A) != 4:
        raise ArithmeticError("intersection system is underdetermined")
    CD, D2, R2, CR = linalg.solve(A, b)
    if any(v.denominator != 1 for v in (CD, D2, R2, CR)):
        raise ArithmeticError("intersection numbers are not integers")
    # adjunction on R: 2 g(R) - 2 = R^2 + K.R
    twice_g_minus_2 = R2 + K_mult * CR
    if twice_g_minus_2 % 2:
        raise ArithmeticError("odd canonical degree on R")
    genusR = int(twice_g_minus_2 / 2 + 1)
    return NumericIdentityReport(int(CD), int(D2), int(R2), int(CR), genusR)
