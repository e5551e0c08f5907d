"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_m).

Rationals are :class:`fractions.Fraction`.  A :class:`CycloElem` is stored
as an integer numerator vector over a positive common denominator, fully
reduced modulo the m-th cyclotomic polynomial, so two elements are equal iff
their stored data are equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "CycloElem",
    "ConductorMismatch",
    "cyclotomic_coeffs",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta",
    "cyclo_arith",
]


class ConductorMismatch(ValueError):
    """Raised when two cyclotomic elements live in different fields."""


def euler_phi(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic with integer coefficients, so the quotient stays integral
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("division is not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        num = _poly_exact_div(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


def cyclotomic_polynomial(m: int):
    """Phi_m as a one-variable :class:`~cubicfano.mpoly.MPoly` in ``x1``."""
    from .mpoly import MPoly

    return MPoly(1, {(i,): Fraction(c) for i, c in enumerate(cyclotomic_coeffs(m)) if c})


def _reduce(m: int, vec: list[int]) -> list[int]:
    phi_coeffs = cyclotomic_coeffs(m)
    phi = len(phi_coeffs) - 1
    if len(vec) <= phi:
        return vec + [0] * (phi - len(vec))
    vec = list(vec)
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c:
            base = i - phi
            for j in range(phi):
                p = phi_coeffs[j]
                if p:
                    vec[base + j] -= c * p
    return vec[:phi]


def _qpoly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_qpoly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for j, y in enumerate(b):
            a[shift + j] -= c * y
    return _qpoly_trim(q), a


def _qpoly_sub_mul(a, q, b):
    # a - q*b
    prod = [Fraction(0)] * (len(q) + len(b) - 1) if q and b else []
    for i, x in enumerate(q):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    n = max(len(a), len(prod))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, x in enumerate(prod):
        a[i] -= x
    return _qpoly_trim(a)


class CycloElem:
    """Element of Q(zeta_m), written in the power basis 1, zeta, ..., zeta^(phi-1)."""

    __slots__ = ("m", "_nums", "_den")

    def __init__(self, m: int, coeffs=None):
        if m < 1:
            raise ValueError("conductor must be a positive integer")
        phi = euler_phi(m)
        coeffs = [Fraction(c) for c in (coeffs or [])]
        if len(coeffs) > phi:
            raise ValueError(f"expected at most {phi} coefficients for conductor {m}")
        coeffs += [Fraction(0)] * (phi - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        self.m = m
        self._set(m, [int(c * den) for c in coeffs], den)

    def _set(self, m, nums, den):
        g = den
        for x in nums:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        self.m = m
        self._nums = tuple(nums)
        self._den = den

    @classmethod
    def _raw(cls, m: int, nums: list[int], den: int) -> "CycloElem":
        obj = cls.__new__(cls)
        if den < 0:
            nums, den = [-x for x in nums], -den
        obj._set(m, nums, den)
        return obj

    @classmethod
    def from_rational(cls, m: int, q) -> "CycloElem":
        q = Fraction(q)
        nums = [0] * euler_phi(m)
        nums[0] = q.numerator
        return cls._raw(m, nums, q.denominator)

    @property
    def conductor(self) -> int:
        return self.m

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._nums[0], self._den)

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.m != self.m:
                raise ConductorMismatch(f"conductors {self.m} and {other.m} differ")
            return other
        if isinstance(other, (int, _RationalABC)):
            return CycloElem.from_rational(self.m, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._den, o._den
        nums = [a * d2 + b * d1 for a, b in zip(self._nums, o._nums)]
        return CycloElem._raw(self.m, nums, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem._raw(self.m, [-a for a in self._nums], self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return CycloElem._raw(self.m, [a * other for a in self._nums], self._den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            c = o._nums[0]
            return CycloElem._raw(self.m, [a * c for a in self._nums], self._den * o._den)
        if self.is_rational():
            return o * self
        prod = _poly_mul(list(self._nums), list(o._nums))
        return CycloElem._raw(self.m, _reduce(self.m, prod), self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloElem.from_rational(self.m, 1 / self.to_rational())
        # extended Euclid in Q[x]: s*a + t*Phi = 1
        a = _qpoly_trim(list(self.coeffs))
        b = [Fraction(c) for c in cyclotomic_coeffs(self.m)]
        s0, s1 = [Fraction(1)], []
        r0, r1 = a, b
        while r1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub_mul(s0, q, s1)
        # r0 is a nonzero constant since Phi_m is irreducible
        c = r0[0]
        return CycloElem(self.m, [x / c for x in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElem.from_rational(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self._nums)

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.m == other.m and self._nums == other._nums and self._den == other._den
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and Fraction(self._nums[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._nums[0], self._den))
        return hash((self.m, self._nums, self._den))

    def conjugate(self) -> "CycloElem":
        """Complex conjugation zeta -> zeta^-1."""
        out = CycloElem.from_rational(self.m, 0)
        zinv = zeta(self.m, -1)
        power = CycloElem.from_rational(self.m, 1)
        for c in self.coeffs:
            if c:
                out = out + power * c
            power = power * zinv
        return out

    def __repr__(self):
        return f"CycloElem({self.m}, {self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def zeta(m: int, k: int = 1) -> CycloElem:
    """The power zeta_m^k of the standard primitive m-th root of unity."""
    k %= m
    nums = [0] * (k + 1)
    nums[k] = 1
    return CycloElem._raw(m, _reduce(m, nums), 1)


def cyclo_arith(a: CycloElem, b: CycloElem | None, op: str):
    """Dispatch ``add``, ``mul``, ``inv`` or ``eq`` on cyclotomic elements."""
    if b is not None and a.m != b.m:
        raise ConductorMismatch(f"conductors {a.m} and {b.m} differ")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")
