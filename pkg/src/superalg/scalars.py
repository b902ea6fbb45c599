"""Exact arithmetic in Q(p, q), the field of rational functions in the two
central deformation scalars p and q with integer polynomial data.

Values are kept in a canonical reduced form (numerator and denominator
coprime, denominator with positive leading coefficient under graded-lex
order with q ranked above p), so two equal scalars always have identical
representations and equality is a plain structural check.
"""

from __future__ import annotations

import math
from fractions import Fraction

Monomial = tuple[int, int]  # (exponent of p, exponent of q)


def _grlex_key(m: Monomial) -> tuple[int, int, int]:
    return (m[0] + m[1], m[1], m[0])


# ---------------------------------------------------------------------------
# univariate helpers: dense int tuples, index = exponent
# ---------------------------------------------------------------------------

def _u_strip(a: list[int]) -> tuple[int, ...]:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def _u_add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _u_strip(out)


def _u_neg(a):
    return tuple(-c for c in a)


def _u_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _u_strip(out)


def _u_scale(a, k: int):
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def _u_content(a) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _u_prim(a):
    g = _u_content(a)
    if g <= 1:
        return a
    return tuple(c // g for c in a)


def _u_divexact_int(a, k: int):
    return tuple(c // k for c in a)


def _u_divexact(a, b):
    """Exact division in Z[p]; raises ArithmeticError when not exact."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    if not a:
        return ()
    rem = list(a)
    nb = len(b)
    out = [0] * (len(a) - nb + 1) if len(a) >= nb else []
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            return _u_strip(out)
        shift = len(rem) - nb
        if shift < 0:
            raise ArithmeticError("inexact univariate division")
        qc, r = divmod(rem[-1], b[-1])
        if r:
            raise ArithmeticError("inexact univariate division")
        out[shift] += qc
        for i, c in enumerate(b):
            rem[shift + i] -= qc * c


def _u_gcd(a, b):
    """Primitive PRS gcd in Z[p]; result has positive leading coefficient."""
    a, b = _u_strip(list(a)), _u_strip(list(b))
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = _u_content(a), _u_content(b)
        a, b = _u_prim(a), _u_prim(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _u_prem(a, b)
            a, b = b, _u_prim(r)
        g = _u_scale(a, math.gcd(ca, cb))
    if g and g[-1] < 0:
        g = _u_neg(g)
    return g


def _u_prem(a, b):
    """Pseudo-remainder of a by b in Z[p] (deg a >= deg b, b nonzero)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db or not r:
            return _u_strip(r)
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= lr * c


# ---------------------------------------------------------------------------
# bivariate helpers: tuples of univariate p-polys, index = exponent of q
# ---------------------------------------------------------------------------

def _b_strip(a: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def _b_from_terms(terms: dict[Monomial, int]):
    if not terms:
        return ()
    dq = max(m[1] for m in terms)
    rows: list[list[int]] = [[] for _ in range(dq + 1)]
    for (i, j), c in terms.items():
        row = rows[j]
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] += c
    return _b_strip([_u_strip(row) for row in rows])


def _b_to_terms(b) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for j, row in enumerate(b):
        for i, c in enumerate(row):
            if c:
                out[(i, j)] = c
    return out


def _b_content(b):
    g: tuple[int, ...] = ()
    for row in b:
        g = _u_gcd(g, row)
    return g


def _b_prim(b):
    g = _b_content(b)
    if not g or (len(g) == 1 and g[0] == 1):
        return b
    return tuple(_u_divexact(row, g) for row in b)


def _b_prem(a, b):
    """Pseudo-remainder in (Z[p])[q]."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while True:
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < db or not r:
            return _b_strip(r)
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [_u_mul(lb, row) for row in r]
        for i, row in enumerate(b):
            r[shift + i] = _u_add(r[shift + i], _u_neg(_u_mul(lr, row)))


def _b_gcd(a, b):
    a, b = _b_strip(list(a)), _b_strip(list(b))
    if not a:
        return b
    if not b:
        return a
    ca, cb = _b_content(a), _b_content(b)
    a, b = _b_prim(a), _b_prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _b_prem(a, b)
        a, b = b, _b_prim(r)
    c = _u_gcd(ca, cb)
    return tuple(_u_mul(row, c) for row in a)


# ---------------------------------------------------------------------------
# Poly: canonical sparse polynomial in Z[p, q]
# ---------------------------------------------------------------------------

class Poly:
    """Polynomial in Z[p, q] as a sparse monomial -> coefficient map."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[Monomial, int]):
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash: int | None = None

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(0, 0): c}) if c else cls({})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def const_value(self) -> int:
        if not self.terms:
            return 0
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return self.terms[(0, 0)]

    def leading(self) -> tuple[Monomial, int]:
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return P_ZERO
        out: dict[Monomial, int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly(out)

    def scale(self, k: int) -> "Poly":
        if k == 0:
            return P_ZERO
        return Poly({m: c * k for m, c in self.terms.items()})

    def eval(self, p_val: Fraction, q_val: Fraction) -> Fraction:
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * p_val**i * q_val**j
        return total

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({poly_str(self)})"


P_ZERO = Poly({})
P_ONE = Poly({(0, 0): 1})
P_P = Poly({(1, 0): 1})
P_Q = Poly({(0, 1): 1})


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Gcd in Z[p, q] including integer content, positive leading coeff."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    elif a.is_const() or b.is_const():
        g = Poly.const(math.gcd(a.content(), b.content()))
    else:
        g = Poly(_b_to_terms(_b_gcd(_b_from_terms(a.terms), _b_from_terms(b.terms))))
    if g.is_zero():
        return g
    if g.leading()[1] < 0:
        g = -g
    return g


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Exact division in Z[p, q]; raises ArithmeticError when not exact."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return P_ZERO
    rem = dict(a.terms)
    out: dict[Monomial, int] = {}
    (bm, bc) = b.leading()
    while rem:
        am = max(rem, key=_grlex_key)
        ac = rem[am]
        mono = (am[0] - bm[0], am[1] - bm[1])
        if mono[0] < 0 or mono[1] < 0 or ac % bc:
            raise ArithmeticError("inexact polynomial division")
        k = ac // bc
        out[mono] = out.get(mono, 0) + k
        for (i, j), c in b.terms.items():
            m = (i + mono[0], j + mono[1])
            v = rem.get(m, 0) - k * c
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return Poly(out)


def poly_str(poly: Poly) -> str:
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for m in sorted(poly.terms, key=_grlex_key, reverse=True):
        c = poly.terms[m]
        factors = []
        for name, e in (("p", m[0]), ("q", m[1])):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(c))] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Scalar: canonical fraction of two Polys
# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(p, q) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly = P_ONE):
        if den.is_zero():
            raise ZeroDivisionError("scalar with zero denominator")
        if num.is_zero():
            num, den = P_ZERO, P_ONE
        elif not den.is_one():
            g = poly_gcd(num, den)
            if not g.is_one():
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
            if den.leading()[1] < 0:
                num, den = -num, -den
        self.num = num
        self.den = den
        self._hash: int | None = None

    @classmethod
    def from_int(cls, n: int) -> "Scalar":
        return cls(Poly.const(n))

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Scalar":
        return cls(Poly.const(f.numerator), Poly.const(f.denominator))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def as_fraction(self) -> Fraction:
        return Fraction(self.num.const_value(), self.den.const_value())

    def __add__(self, other):
        if isinstance(other, int):
            other = sc_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num + other.num)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = sc_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return sc_int(other) + (-self)
        return NotImplemented

    def __neg__(self) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num, s.den, s._hash = -self.num, self.den, None
        return s

    def __mul__(self, other):
        if isinstance(other, int):
            other = sc_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = sc_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return sc_int(other) / self
        return NotImplemented

    def inverse(self) -> "Scalar":
        return SC_ONE / self

    def eval_at(self, p_val: Fraction, q_val: Fraction) -> Fraction:
        d = self.den.eval(p_val, q_val)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at p={p_val}, q={q_val}")
        return self.num.eval(p_val, q_val) / d

    def regular_at(self, p_val: Fraction, q_val: Fraction) -> bool:
        return self.den.eval(p_val, q_val) != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Scalar)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den.is_one():
            return poly_str(self.num)
        num_s = poly_str(self.num)
        if len(self.num.terms) > 1:
            num_s = f"({num_s})"
        den_s = poly_str(self.den)
        # a bare integer or a single pure power binds correctly after "/";
        # anything with several factors needs parentheses
        if len(self.den.terms) > 1:
            den_s = f"({den_s})"
        else:
            ((ep, eq),) = self.den.terms
            coeff = self.den.terms[(ep, eq)]
            factors = (1 if ep else 0) + (1 if eq else 0) + (0 if coeff == 1 else 1)
            if factors > 1:
                den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


SC_ZERO = Scalar(P_ZERO)
SC_ONE = Scalar(P_ONE)
SC_MINUS_ONE = Scalar(Poly.const(-1))
SC_P = Scalar(P_P)
SC_Q = Scalar(P_Q)


def sc_int(n: int) -> Scalar:
    if n == 0:
        return SC_ZERO
    if n == 1:
        return SC_ONE
    if n == -1:
        return SC_MINUS_ONE
    return Scalar.from_int(n)


def sc_frac(a: int, b: int) -> Scalar:
    return Scalar(Poly.const(a), Poly.const(b))
