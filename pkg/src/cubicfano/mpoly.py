"""Sparse multivariate polynomials over Q or Q(zeta_m).

Text form (used by the CLI and golden files)::

    poly   := term (('+'|'-') term)*
    term   := [coeff '*'] factor ('*' factor)* | coeff
    factor := var ['^' posint]
    coeff  := ['-'] int ['/' posint]

A leading sign before the first term is also accepted.  The printer emits
terms in descending degrevlex order, so ``parse_poly(str(p)) == p``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .exactmath import CycloElem

__all__ = [
    "MPoly",
    "PolySyntaxError",
    "parse_poly",
    "format_poly",
    "substitute_linear",
    "partials",
    "monomials",
    "degrevlex_key",
    "lex_key",
    "order_key",
]


def degrevlex_key(e: tuple[int, ...]):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e: tuple[int, ...]):
    return e


def order_key(order: str):
    if order == "degrevlex":
        return degrevlex_key
    if order == "lex":
        return lex_key
    raise ValueError(f"unknown monomial order {order!r}")


def _is_zero(c) -> bool:
    return not c


class MPoly:
    """Polynomial in ``nvars`` variables stored as {exponent tuple: nonzero coefficient}.

    Treat instances as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            if isinstance(c, int):
                c = Fraction(c)
            if not _is_zero(c):
                clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._from_clean(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def gens(cls, nvars: int) -> list["MPoly"]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls._from_clean(nvars, {tuple(e): Fraction(1)}))
        return out

    # arithmetic -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials have different variable counts")
            return other
        if isinstance(other, (int, Fraction, CycloElem)):
            return MPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if _is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly._from_clean(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._from_clean(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "MPoly":
        if _is_zero(c):
            return MPoly.zero(self.nvars)
        return MPoly._from_clean(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycloElem)):
            return self == MPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection -----------------------------------------------------------

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def coeff(self, e: Sequence[int]):
        return self.terms.get(tuple(e), Fraction(0))

    def sorted_terms(self, order: str = "degrevlex") -> list[tuple[tuple[int, ...], object]]:
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: str = "degrevlex"):
        key = order_key(order)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def evaluate(self, point: Sequence):
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            acc = acc + t
        return acc

    def map_coeffs(self, f) -> "MPoly":
        return MPoly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def is_rational(self) -> bool:
        return all(not isinstance(c, CycloElem) or c.is_rational() for c in self.terms.values())

    def rationalize(self) -> "MPoly":
        """Same polynomial with Fraction coefficients; ValueError if some coefficient is irrational."""
        return self.map_coeffs(lambda c: c.to_rational() if isinstance(c, CycloElem) else Fraction(c))

    def embed(self, nvars: int, positions: Sequence[int] | None = None) -> "MPoly":
        """Relabel variable i as variable positions[i] in a ring with ``nvars`` variables."""
        if positions is None:
            positions = range(self.nvars)
        out = {}
        for e, c in self.terms.items():
            f = [0] * nvars
            for i, k in zip(positions, e):
                f[i] += k
            out[tuple(f)] = c
        return MPoly._from_clean(nvars, out)

    def __repr__(self):
        return f"MPoly({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# printing -----------------------------------------------------------------


def _coeff_text(c) -> str:
    if isinstance(c, CycloElem):
        if c.is_rational():
            c = c.to_rational()
        else:
            return f"({c})"
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _mono_text(e, names) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: MPoly, variables: Sequence[str] | None = None) -> str:
    names = list(variables) if variables else [f"x{i + 1}" for i in range(p.nvars)]
    if not p.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.sorted_terms("degrevlex")):
        mono = _mono_text(e, names)
        negative = not isinstance(c, CycloElem) and c < 0
        if isinstance(c, CycloElem) and c.is_rational() and c.to_rational() < 0:
            negative = True
        mag = -c if negative else c
        ctext = _coeff_text(mag)
        if not mono:
            body = ctext
        elif ctext == "1":
            body = mono
        else:
            body = f"{ctext}*{mono}"
        if i == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


# parsing ------------------------------------------------------------------


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos] == "." and len(tokens) >= 2 and tokens[-2][1] == "^":
                raise PolySyntaxError("exponent must be a non-negative integer", tokens[-1][2])
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str, variables: Sequence[str] | None = None) -> MPoly:
    """Parse polynomial text; ``variables`` defaults to x1..x5."""
    names = list(variables) if variables else [f"x{i + 1}" for i in range(5)]
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        t = toks[i]
        if (kind and t[0] != kind) or (value and t[1] != value):
            want = value or kind
            raise PolySyntaxError(f"expected {want!r}, found {t[1] or 'end of input'!r}", t[2])
        i += 1
        return t

    def parse_coeff():
        t = take("int")
        num = int(t[1])
        if peek()[1] == "/":
            take("op", "/")
            d = take("int")
            if int(d[1]) == 0:
                raise PolySyntaxError("zero denominator", d[2])
            return Fraction(num, int(d[1]))
        return Fraction(num)

    def parse_factor(exps):
        t = take("name")
        if t[1] not in index:
            raise PolySyntaxError(f"unknown variable {t[1]!r}", t[2])
        k = 1
        if peek()[1] == "^":
            take("op", "^")
            nt = peek()
            if nt[0] != "int":
                raise PolySyntaxError("exponent must be a non-negative integer", nt[2])
            k = int(take("int")[1])
            if peek()[1] == "/":
                raise PolySyntaxError("exponent must be a non-negative integer", peek()[2])
        exps[index[t[1]]] += k

    def parse_term(sign):
        exps = [0] * n
        coeff = Fraction(sign)
        t = peek()
        if t[1] == "-":
            take("op", "-")
            coeff = -coeff
            t = peek()
        if t[0] == "int":
            coeff *= parse_coeff()
            if peek()[1] != "*":
                return tuple(exps), coeff
            take("op", "*")
        parse_factor(exps)
        while peek()[1] == "*":
            take("op", "*")
            parse_factor(exps)
        return tuple(exps), coeff

    terms: dict = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take("op")[1] == "-" else 1
    while True:
        e, c = parse_term(sign)
        terms[e] = terms.get(e, 0) + c
        t = peek()
        if t[0] == "end":
            break
        if t[1] not in ("+", "-"):
            raise PolySyntaxError(f"unexpected token {t[1]!r}", t[2])
        take("op")
        sign = 1 if t[1] == "+" else -1
    return MPoly(n, terms)


# operations ---------------------------------------------------------------


def substitute_linear(p: MPoly, M: Sequence[Sequence]) -> MPoly:
    """Return p(M x); substitute_linear(substitute_linear(p, A), B) == substitute_linear(p, A B)."""
    n = p.nvars
    if len(M) != n or any(len(row) != n for row in M):
        raise ValueError(f"expected a {n}x{n} matrix")
    gens = MPoly.gens(n)
    forms = []
    for row in M:
        f = MPoly.zero(n)
        for c, g in zip(row, gens):
            if not _is_zero(c):
                f = f + g * c
        forms.append(f)
    powers: dict = {}

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = forms[i] ** k
        return powers[(i, k)]

    out = MPoly.zero(n)
    for e, c in p.terms.items():
        t = MPoly.constant(n, c)
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        out = out + t
    return out


def partials(p: MPoly) -> list[MPoly]:
    out = []
    for i in range(p.nvars):
        d = {}
        for e, c in p.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                d[tuple(f)] = c * e[i]
        out.append(MPoly(p.nvars, d))
    return out


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the given degree, descending in degrevlex."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(sorted(out, key=degrevlex_key, reverse=True))


def from_vector(vec: Iterable, nvars: int, degree: int) -> MPoly:
    return MPoly(nvars, dict(zip(monomials(nvars, degree), vec)))


def to_vector(p: MPoly, degree: int) -> list:
    if not p.is_homogeneous(degree):
        raise ValueError(f"polynomial is not homogeneous of degree {degree}")
    return [p.terms.get(e, Fraction(0)) for e in monomials(p.nvars, degree)]
