"""Invariant cubic families for the dihedral and A5 types, smoothness scans, and the D4 scan.

Each family is a representation (group label and decomposition) together
with the coefficient polynomials of its displayed equation.  The parameter
letters are kept so that scan witnesses can be read back against the
displayed family.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, combinations_with_replacement

from .. import linalg
from ..groebner import projective_empty, smooth_cubic
from ..groups import dihedral, element_order, linear_characters
from ..mpoly import MPoly, parse_poly, partials, to_vector
from ..reps import build_representation, eigenspace_cubics

__all__ = [
    "FAMILIES",
    "KLEIN_CUBIC",
    "family_polynomials",
    "family_representation",
    "family_membership_check",
    "smoothness_scan",
    "d4_decompositions",
    "d4_nonexistence_scan",
    "dihedral_contains_d4",
    "subspace_certificate",
]

KLEIN_CUBIC = "x1^2*x2 + x2^2*x4 + x3*x4^2 + x3^2*x5 + x1*x5^2"

# name -> (group, decomposition, [(parameter, polynomial text)])
FAMILIES: dict[str, tuple[str, str, list[tuple[str, str]]]] = {
    "d2": (
        "d2",
        "L+L1+L2+2T",
        [
            ("a", "x1^2*x4"),
            ("b", "x2^2*x4"),
            ("c", "x3^2*x4"),
            ("d", "x1^2*x5"),
            ("e", "x2^2*x5"),
            ("f", "x3^2*x5"),
            ("g", "x4^3"),
            ("h", "x5^3"),
            ("k", "x1*x2*x3"),
        ],
    ),
    "d3": (
        "d3",
        "2V1/3+T",
        [
            ("fixed_1", "x5^3"),
            ("fixed_2", "x1^2*x5 + x2^2*x5"),
            ("fixed_3", "x3^2*x5 + x4^2*x5"),
            ("a", "x1^3 - 3*x1*x2^2"),
            ("b", "x3^3 - 3*x3*x4^2"),
            ("c", "x1*x3*x5 + x2*x4*x5"),
            ("d", "x1*x3^2 - x1*x4^2 - 2*x2*x3*x4"),
            ("e", "x1^2*x3 - x2^2*x3 - 2*x1*x2*x4"),
        ],
    ),
    "d5": (
        "d5",
        "V1/5+V2/5+T",
        [
            ("fixed_1", "x5^3"),
            ("c", "x1^2*x5 + x2^2*x5"),
            ("d", "x3^2*x5 + x4^2*x5"),
            ("a", "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4"),
            ("b", "-x1*x3^2 + x1*x4^2 + 2*x2*x3*x4"),
        ],
    ),
    "d6": (
        "d6",
        "V1/6+V2/6+T",
        [
            ("a", "x5^3"),
            ("b", "x1^2*x5 + x2^2*x5"),
            ("c", "x3^2*x5 + x4^2*x5"),
            ("d", "x3^3 - 3*x3*x4^2"),
            ("e", "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4"),
        ],
    ),
    "a5": (
        "a5",
        "standard",
        [
            (
                "a",
                "x4^3 + x1^2*x4 - x2^2*x4 + x3^2*x4 - x2^2*x3 + 3*x3*x4^2 + x3*x5^2 + 2*x3^2*x5"
                " + 2*x1*x2*x3 + 2*x1*x2*x4 + 2*x1*x2*x5 + 2*x3*x4*x5",
            ),
            (
                "b",
                "-x3^3 + x1^2*x3 - x2^2*x3 - x3*x4^2 + x1^2*x4 - 3*x3^2*x4 - x4*x5^2 - 2*x4^2*x5"
                " + 2*x1*x2*x3 + 2*x1*x2*x4 + 2*x1*x2*x5 - 2*x3*x4*x5",
            ),
        ],
    ),
    # the harmonic inversion (x1:x2:x3:-x4:-x5); no displayed basis, the full eigenspace is used
    "z2": ("z2", "3T+2L", []),
    "klein": ("klein", "", [("fixed_1", KLEIN_CUBIC)]),
}


def family_polynomials(name: str) -> list[MPoly]:
    if name not in FAMILIES:
        raise KeyError(f"unknown family {name!r}")
    return [parse_poly(text) for _, text in FAMILIES[name][2]]


def family_representation(name: str):
    if name not in FAMILIES:
        raise KeyError(f"unknown family {name!r}")
    group, decomposition, _ = FAMILIES[name]
    if group == "klein":
        return build_representation("klein")
    return build_representation(group, decomposition)


def _in_span(basis: list[MPoly], p: MPoly) -> bool:
    rows = [to_vector(b, 3) for b in basis]
    return linalg.rank(rows + [to_vector(p, 3)]) == linalg.rank(rows)


def family_membership_check(name: str) -> dict:
    """Dimension of the invariant cubics and whether each displayed polynomial is one of them."""
    if name not in ("d2", "d3", "d5", "d6", "a5"):
        raise KeyError(f"unsupported family {name!r}")
    rep = family_representation(name)
    basis = eigenspace_cubics(rep)
    polys = family_polynomials(name)
    members = [_in_span(basis, p) for p in polys]
    return {
        "family": name,
        "representation": rep.label,
        "dimension": len(basis),
        "members": members,
        "all_listed_polynomials_member": all(members),
    }


def _sample_member(rng: random.Random, basis: list[MPoly], spread: int = 3) -> tuple[list[int], MPoly]:
    while True:
        params = [rng.choice([k for k in range(-spread, spread + 1) if k]) for _ in basis]
        F = MPoly.zero(5)
        for c, b in zip(params, basis):
            F = F + b.scale(c)
        if F:
            return params, F


def smoothness_scan(name: str, seed: int = 0, tries: int = 10) -> dict:
    """First smooth member among seeded small-integer combinations of the family polynomials."""
    if name not in FAMILIES:
        raise KeyError(f"unknown family {name!r}")
    if name == "klein":
        F = parse_poly(KLEIN_CUBIC)
        smooth = smooth_cubic(F) == "smooth"
        return {
            "family": name,
            "seed": seed,
            "generic_member_smooth": smooth,
            "witness_parameters": [["fixed_1", 1]] if smooth else None,
            "witness": str(F) if smooth else None,
            "attempts": 1,
        }
    basis = family_polynomials(name) or eigenspace_cubics(family_representation(name))
    labels = [label for label, _ in FAMILIES[name][2]] or [f"v{i}" for i in range(len(basis))]
    rng = random.Random(seed)
    for attempt in range(1, tries + 1):
        params, F = _sample_member(rng, basis)
        if smooth_cubic(F) == "smooth":
            return {
                "family": name,
                "seed": seed,
                "generic_member_smooth": True,
                "witness_parameters": [[lab, c] for lab, c in zip(labels, params)],
                "witness": str(F),
                "attempts": attempt,
            }
    return {
        "family": name,
        "seed": seed,
        "generic_member_smooth": False,
        "witness_parameters": None,
        "witness": None,
        "attempts": tries,
    }


# order-8 dihedral group ----------------------------------------------------------

_D4_SUMMANDS = [("V1/4", 2), ("T", 1), ("L", 1), ("L1", 1), ("L2", 1)]


def _decomposition_text(combo) -> str:
    counts = Counter(combo)
    parts = []
    for name, _ in _D4_SUMMANDS:
        k = counts.get(name, 0)
        if k:
            parts.append(f"{k if k > 1 else ''}{name}")
    return "+".join(parts)


def d4_decompositions() -> list[dict]:
    """Faithful 5-dimensional representations of D4 with every reflection of trace 1.

    Built from the irreducibles V1/4, T, L, L1, L2 (V2/4 is L1 + L2 and V3/4 is V1/4).
    """
    dims = dict(_D4_SUMMANDS)
    out = []
    for size in range(1, 6):
        for combo in combinations_with_replacement([s for s, _ in _D4_SUMMANDS], size):
            if sum(dims[s] for s in combo) != 5:
                continue
            text = _decomposition_text(combo)
            rep = build_representation("d4", text)
            G = rep.group
            reflections = [g for g in G.elements if g[1] == 1]
            if any(rep.trace(g) != 1 for g in reflections):
                continue
            ident = rep.matrix(G.identity)
            faithful = all(rep.matrix(g) != ident for g in G.elements if g != G.identity)
            if not faithful:
                continue
            a = G.generators["a"]
            # traces over Q(i) of a rational representation are rational
            tr_a = rep.trace(a).to_rational()
            tr_a2 = rep.trace(G.mul(a, a)).to_rational()
            out.append({"decomposition": text, "trace_a": int(tr_a), "trace_a2": int(tr_a2)})
    out.sort(key=lambda r: (r["trace_a"], r["trace_a2"], r["decomposition"]))
    return out


def _restrict(p: MPoly, keep: tuple[int, ...]) -> MPoly:
    """p with every coordinate outside ``keep`` set to zero."""
    return MPoly(p.nvars, {e: c for e, c in p.terms.items() if all(e[i] == 0 for i in range(p.nvars) if i not in keep)})


def subspace_certificate(basis: list[MPoly]) -> list[int] | None:
    """Coordinates spanning W such that every member of span(basis) is singular somewhere on P(W).

    If at most dim P(W) of the partials are not identically zero on W, for
    every member, then those partials are at most dim P(W) forms of positive
    degree on P(W) and have a common zero there.
    """
    nvars = basis[0].nvars
    for size in range(2, nvars + 1):
        for keep in combinations(range(nvars), size):
            live = sum(1 for i in range(nvars) if any(_restrict(partials(b)[i], keep) for b in basis))
            if live <= size - 1:
                return [i + 1 for i in keep]
    return None


def _scan_space(basis: list[MPoly], rng: random.Random, samples: int) -> dict:
    """Check that no member of span(basis) is smooth.

    Exact certificates first (a common singular point of all members, then a
    subspace carrying a singular point of each member); seeded sampling only
    when both fail, reported as evidence.
    """
    record = {
        "dimension": len(basis),
        "base_singular_point_found": False,
        "subspace_certificate": None,
        "certificate": None,
        "certified": False,
        "sampled": 0,
        "sampled_members_all_singular": None,
        "smooth_found": False,
    }
    if not basis:
        record.update(certificate="no_cubics", certified=True)
        return record
    gens = [d for b in basis for d in partials(b)]
    if not projective_empty(gens):
        record.update(base_singular_point_found=True, certificate="common_singular_point", certified=True)
        return record
    W = subspace_certificate(basis)
    if W is not None:
        record.update(subspace_certificate=W, certificate="singular_point_on_subspace", certified=True)
        return record
    smooth = 0
    for _ in range(samples):
        _, F = _sample_member(rng, basis)
        if smooth_cubic(F) == "smooth":
            smooth += 1
    record["sampled"] = samples
    record["sampled_members_all_singular"] = smooth == 0
    record["smooth_found"] = smooth > 0
    return record


def dihedral_contains_d4(order: int) -> bool:
    """Whether the dihedral group of the given order has a subgroup isomorphic to D4."""
    if order % 2:
        raise ValueError("dihedral groups have even order")
    n = order // 2
    G = dihedral(n)
    for r in G.elements:
        if element_order(G, r) != 4 or r[1]:
            continue
        for s in G.elements:
            if s[1] != 1:
                continue
            sub = {G.identity}
            frontier = [G.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in (r, s):
                        y = G.mul(x, g)
                        if y not in sub:
                            sub.add(y)
                            nxt.append(y)
                frontier = nxt
            if len(sub) == 8:
                return True
    return False


def d4_nonexistence_scan(seed: int = 0, samples: int = 24) -> dict:
    """Every D4 trace case and linear character, a D5 control, and the containment corollary."""
    rng = random.Random(seed)
    cases = []
    G4 = dihedral(4)
    for dec in d4_decompositions():
        rep = build_representation("d4", dec["decomposition"])
        per_char = {}
        for label, chi in linear_characters(G4).items():
            basis = eigenspace_cubics(rep, chi)
            per_char[label] = _scan_space(basis, rng, samples)
        cases.append(
            {
                **dec,
                "characters_tried": sorted(per_char),
                "characters": per_char,
                "no_smooth_cubic": all(not r["smooth_found"] for r in per_char.values()),
                "certified": all(r["certified"] for r in per_char.values()),
            }
        )
    control_rep = family_representation("d5")
    control = _scan_space(eigenspace_cubics(control_rep), random.Random(seed), samples)
    containment = {str(order): dihedral_contains_d4(order) for order in (16, 24, 32, 40, 48)}
    return {
        "seed": seed,
        "cases": cases,
        "trace_cases": sorted({(c["trace_a"], c["trace_a2"]) for c in cases}),
        "no_smooth_cubic": all(c["no_smooth_cubic"] for c in cases),
        "control_d5": control,
        "containment": containment,
    }
