"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is stored as a vector of rationals over the power basis
1, z, ..., z^(phi(N)-1) of Q(zeta_N), i.e. reduced modulo the N-th
cyclotomic polynomial.  Conductors are always minimized (2 mod 4 is
never used, rationals live at conductor 1), so two equal values always
have identical (conductor, coefficient) data and ==/hash are cheap.

Values are immutable after construction; everything here is safe to
share between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cache
from math import gcd


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials, low-to-high coefficients."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q[k] = c // lead
        for i, d in enumerate(den):
            num[k + i] -= q[k] * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


@cache
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low-to-high, monic."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(num)


@cache
def _phi_deg(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@cache
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for 0 <= k < n, as integer vectors of length deg."""
    d = _phi_deg(n)
    phi = cyclotomic_poly(n)
    rows = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[d - 1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(d):
                cur[i] -= top * phi[i]
        cur = cur[:d]
    return tuple(rows)


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@cache
def _subfield_basis(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Images of the Q(zeta_m) power basis inside Q(zeta_n), n = m*k."""
    step = n // m
    tab = _power_table(n)
    return tuple(tab[(step * j) % n] for j in range(_phi_deg(m)))


def _solve_subfield(n: int, m: int, vec: list[Fraction]) -> list[Fraction] | None:
    """Write vec (over the Q(zeta_n) basis) over the Q(zeta_m) basis, if possible."""
    cols = _subfield_basis(n, m)
    rows, ncols = _phi_deg(n), len(cols)
    # Gaussian elimination on the augmented system [B | vec].
    aug = [[Fraction(cols[j][i]) for j in range(ncols)] + [vec[i]] for i in range(rows)]
    piv_of_col = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if aug[i][c]), None)
        if piv is None:
            piv_of_col.append(None)
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_of_col.append(r)
        r += 1
    if any(aug[i][ncols] for i in range(r, rows)):
        return None
    sol = [Fraction(0)] * ncols
    for c, piv in enumerate(piv_of_col):
        if piv is not None:
            sol[c] = aug[piv][ncols]
    # columns without pivots must not be needed; check consistency
    chk = [Fraction(0)] * rows
    for c in range(ncols):
        if sol[c]:
            for i in range(rows):
                chk[i] += sol[c] * cols[c][i]
    return sol if chk == vec else None


class CycNum:
    """An element of some Q(zeta_N), in canonical minimal-conductor form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: dict[int, Fraction], _raw: bool = False):
        if _raw:
            self.conductor = conductor
            self.coeffs = coeffs
        else:
            c = canonicalize(conductor, coeffs)
            self.conductor = c.conductor
            self.coeffs = c.coeffs
        self._hash = None

    # -- construction -------------------------------------------------

    @staticmethod
    def rational(x) -> "CycNum":
        x = Fraction(x)
        return CycNum(1, {0: x} if x else {}, _raw=True)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def try_rational(self) -> Fraction | None:
        """The value as a rational, or None if it is irrational."""
        if self.conductor == 1:
            return self.coeffs.get(0, Fraction(0))
        return None

    def as_rational(self) -> Fraction:
        r = self.try_rational()
        if r is None:
            raise ValueError(f"not a rational value: {self}")
        return r

    def as_int(self) -> int:
        r = self.as_rational()
        if r.denominator != 1:
            raise ValueError(f"not an integer value: {self}")
        return r.numerator

    # -- arithmetic ----------------------------------------------------

    def _lift(self, big: int) -> dict[int, Fraction]:
        step = big // self.conductor
        return {(k * step) % big: v for k, v in self.coeffs.items()}

    def __add__(self, other) -> "CycNum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycNum.rational(self.coeffs.get(0, 0) + other.coeffs.get(0, 0))
        big = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        a = self._lift(big)
        for k, v in other._lift(big).items():
            a[k] = a.get(k, Fraction(0)) + v
        return CycNum(big, a)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.conductor, {k: -v for k, v in self.coeffs.items()}, _raw=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "CycNum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycNum.rational(self.coeffs.get(0, 0) * other.coeffs.get(0, 0))
        if self.conductor == 1:
            c = self.coeffs.get(0, Fraction(0))
            if not c:
                return ZERO
            return CycNum(other.conductor, {k: c * v for k, v in other.coeffs.items()}, _raw=True)
        if other.conductor == 1:
            return other * self
        big = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        a, b = self._lift(big), other._lift(big)
        prod: dict[int, Fraction] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = (ka + kb) % big
                prod[k] = prod.get(k, Fraction(0)) + va * vb
        return CycNum(big, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycNum":
        if e < 0:
            return self.inverse() ** (-e)
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other) -> "CycNum":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "CycNum":
        """Inverse of any value whose squared modulus is rational; this covers
        rationals and rational multiples of roots of unity.  General
        cyclotomic inversion is intentionally not provided.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            return CycNum.rational(1 / self.coeffs[0])
        conj = self.conjugate()
        norm = (self * conj).try_rational()
        if norm:
            return conj * (1 / norm)
        raise ValueError("inverse implemented only for values with rational modulus")

    def conjugate(self) -> "CycNum":
        """Complex conjugation, zeta_N -> zeta_N^(N-1)."""
        n = self.conductor
        if n == 1:
            return self
        return CycNum(n, {(n - k) % n: v for k, v in self.coeffs.items()})

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.conductor, tuple(sorted(self.coeffs.items()))))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- text form -------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                zk = f"z({self.conductor})" if k == 1 else f"z({self.conductor})^{k}"
                body = zk if mag == 1 else f"{mag}*{zk}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CycNum({self})"


def _coerce(x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.rational(x)
    return NotImplemented


def canonicalize(conductor: int, raw: dict[int, Fraction]) -> CycNum:
    """Reduce an exponent->rational map modulo Phi_N and minimize the conductor."""
    if conductor < 1:
        raise ValueError(f"conductor must be >= 1, got {conductor}")
    n = conductor
    merged: dict[int, Fraction] = {}
    for k, v in raw.items():
        v = Fraction(v)
        if v:
            k %= n
            merged[k] = merged.get(k, Fraction(0)) + v
    d = _phi_deg(n)
    vec = [Fraction(0)] * d
    tab = _power_table(n)
    for k, v in merged.items():
        if v:
            row = tab[k]
            for i in range(d):
                if row[i]:
                    vec[i] += v * row[i]
    # conductor descent
    while n > 1:
        if not any(vec[1:]):
            n, vec = 1, [vec[0]]
            break
        for p in _prime_factors(n):
            sol = _solve_subfield(n, n // p, vec)
            if sol is not None:
                n, vec = n // p, sol
                break
        else:
            break
    coeffs = {i: v for i, v in enumerate(vec) if v}
    return CycNum(n, coeffs, _raw=True)


def cyc(conductor: int, raw: dict[int, int | Fraction]) -> CycNum:
    """Build Sum_k raw[k] * zeta_conductor^k in canonical form."""
    return canonicalize(conductor, {k: Fraction(v) for k, v in raw.items()})


def zeta(n: int, k: int = 1) -> CycNum:
    return cyc(n, {k: 1})


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def sum_products(items) -> CycNum:
    """Sum of a * b * w over (a, b, w) triples, canonicalized once at the end.

    Much faster than repeated `+`/`*` for long accumulations, since each
    CycNum operation normally re-minimizes the conductor.
    """
    items = list(items)
    big = 1
    for a, b, _ in items:
        big = big * a.conductor // gcd(big, a.conductor)
        big = big * b.conductor // gcd(big, b.conductor)
    acc: dict[int, Fraction] = {}
    for a, b, w in items:
        w = Fraction(w)
        if not w:
            continue
        sa = big // a.conductor
        sb = big // b.conductor
        for ka, va in a.coeffs.items():
            for kb, vb in b.coeffs.items():
                k = (ka * sa + kb * sb) % big
                acc[k] = acc.get(k, Fraction(0)) + va * vb * w
    return canonicalize(big, acc)

_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\*?"
    r"(?:z\((?P<n>\d+)\)(?:\^(?P<k>\d+))?)?$"
)


def parse_cyc(text: str) -> CycNum:
    """Parse the text form produced by str(): e.g. '1/2 + 3*z(8)^3 - z(4)'."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    s = s.replace("-", "+-")
    chunks = [c for c in s.split("+") if c]
    total = ZERO
    for chunk in chunks:
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("n") is None):
            raise ValueError(f"bad cyclotomic term {chunk!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("n") is None:
            term = CycNum.rational(sign * coef)
        else:
            term = cyc(int(m.group("n")), {int(m.group("k") or 1): sign * coef})
        total = total + term
    return total
