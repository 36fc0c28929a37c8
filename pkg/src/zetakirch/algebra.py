"""Exact scalar, polynomial and polynomial-matrix arithmetic.

Scalars are :class:`fractions.Fraction`.  ``BiPoly`` is a sparse polynomial in
the two variables ``u`` and ``t``; ``LaurentPoly`` is a sparse Laurent
polynomial in ``t`` and holds values restricted to the curve ``u = 1 - 1/t``.

Internally a ``BiPoly`` monomial ``u**a * t**b`` is stored under the packed
integer key ``a << 32 | b`` so that multiplying monomials is integer addition
and sorting the keys gives (deg_u major, deg_t minor) order.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

from .errors import ArithmeticConsistencyError, DivisibilityError

Rational = Fraction

_SHIFT = 32
_MASK = (1 << _SHIFT) - 1

U = "u"
T = "t"


def _pack(du: int, dt: int) -> int:
    if du < 0 or dt < 0:
        raise ValueError("BiPoly exponents must be nonnegative")
    return (du << _SHIFT) | dt


def _unpack(key: int) -> tuple[int, int]:
    return key >> _SHIFT, key & _MASK


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    return Fraction(x)


def _mul_dicts(p: dict, q: dict) -> dict:
    if len(p) > len(q):
        p, q = q, p
    out: dict = {}
    get = out.get
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _add_dicts(p: dict, q: dict, sign: int = 1) -> dict:
    out = dict(p)
    for k, c in q.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _divexact_dicts(p: dict, q: dict, integral: bool = False) -> dict:
    """Exact division p / q of packed-key polynomials.

    Raises ArithmeticConsistencyError if q does not divide p.  With
    ``integral`` the coefficients are ints and must divide exactly too.
    """
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return {}
    lk = max(q)
    lc = q[lk]
    ldu, ldt = _unpack(lk)
    rem = dict(p)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        k = -heapq.heappop(heap)
        c = rem.get(k)
        if c is None:
            continue
        du, dt = _unpack(k)
        if du < ldu or dt < ldt:
            raise ArithmeticConsistencyError("inexact polynomial division (monomial)")
        if integral:
            qc, r = divmod(c, lc)
            if r:
                raise ArithmeticConsistencyError("inexact polynomial division (coefficient)")
        else:
            qc = c / lc
        qk = k - lk
        quot[qk] = qc
        for k2, c2 in q.items():
            kk = qk + k2
            v = rem.get(kk)
            if v is None:
                rem[kk] = -qc * c2
                heapq.heappush(heap, -kk)
            else:
                v -= qc * c2
                if v:
                    rem[kk] = v
                else:
                    del rem[kk]
    return quot


class BiPoly:
    """Sparse polynomial in (u, t) with Fraction coefficients.  Immutable."""

    __slots__ = ("_c",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        c = {}
        if terms:
            for (du, dt), v in terms.items():
                v = as_rational(v)
                if v:
                    k = _pack(du, dt)
                    c[k] = c.get(k, 0) + v
                    if not c[k]:
                        del c[k]
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "BiPoly":
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def const(cls, value) -> "BiPoly":
        value = as_rational(value)
        return cls._raw({0: value} if value else {})

    @classmethod
    def monomial(cls, du: int, dt: int, coeff=1) -> "BiPoly":
        coeff = as_rational(coeff)
        return cls._raw({_pack(du, dt): coeff} if coeff else {})

    @classmethod
    def u(cls) -> "BiPoly":
        return cls.monomial(1, 0)

    @classmethod
    def t(cls) -> "BiPoly":
        return cls.monomial(0, 1)

    @staticmethod
    def _coerce(other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return NotImplemented

    def terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms sorted by (deg_u, deg_t) ascending."""
        return [(_unpack(k), Fraction(self._c[k])) for k in sorted(self._c)]

    def coeff(self, du: int, dt: int) -> Fraction:
        return Fraction(self._c.get(_pack(du, dt), 0))

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        if not self._c:
            return -1
        idx = 0 if var == U else 1
        return max(_unpack(k)[idx] for k in self._c)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._c.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BiPoly._raw(_add_dicts(self._c, other._c))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BiPoly._raw(_add_dicts(self._c, other._c, -1))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly()
            return BiPoly._raw({k: c * other for k, c in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BiPoly._raw(_mul_dicts(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        """Quotient of an exact division; DivisibilityError if a remainder is left."""
        other = self._coerce(other)
        try:
            return BiPoly._raw(_divexact_dicts(self._c, other._c))
        except ArithmeticConsistencyError as exc:
            raise DivisibilityError(f"{other} does not divide {self}") from exc

    def __call__(self, u, t):
        return self.evaluate(u, t)

    def evaluate(self, u, t):
        """Value at (u, t).  Exact for Fraction/int arguments, also accepts complex."""
        total = 0
        for k, c in self._c.items():
            du, dt = _unpack(k)
            total += c * (u**du) * (t**dt)
        return total

    def derivative(self, var: str) -> "BiPoly":
        return poly_derivative(self, var)

    def restrict_u(self, u0) -> "LaurentPoly":
        """The univariate polynomial t -> p(u0, t)."""
        u0 = as_rational(u0)
        out: dict[int, Fraction] = {}
        for k, c in self._c.items():
            du, dt = _unpack(k)
            out[dt] = out.get(dt, 0) + c * u0**du
        return LaurentPoly(out)

    def map_coeffs(self, fn) -> "BiPoly":
        return BiPoly({_unpack(k): fn(c) for k, c in self._c.items()})

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for (du, dt), c in self.terms():
            mono = "*".join(
                s for s in (
                    "" if du == 0 else ("u" if du == 1 else f"u^{du}"),
                    "" if dt == 0 else ("t" if dt == 1 else f"t^{dt}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class LaurentPoly:
    """Sparse Laurent polynomial in t with Fraction coefficients.  Immutable."""

    __slots__ = ("_c",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        c = {}
        if terms:
            for d, v in terms.items():
                v = as_rational(v)
                if v:
                    c[d] = c.get(d, 0) + v
                    if not c[d]:
                        del c[d]
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = c
        return p

    @classmethod
    def const(cls, value) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, d: int, coeff=1) -> "LaurentPoly":
        return cls({d: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, low: int = 0) -> "LaurentPoly":
        """Dense coefficient list starting at t**low."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def terms(self) -> list[tuple[int, Fraction]]:
        return [(d, Fraction(self._c[d])) for d in sorted(self._c)]

    def coeff(self, d: int) -> Fraction:
        return Fraction(self._c.get(d, 0))

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero Laurent polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero Laurent polynomial has no degree")
        return max(self._c)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return LaurentPoly._raw({d: -c for d, c in self._c.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(_add_dicts(self._c, other._c))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(_add_dicts(self._c, other._c, -1))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({d: c * other for d, c in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(_mul_dicts(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have negative powers")
            (d, c), = self._c.items()
            return LaurentPoly._raw({d * e: Fraction(c) ** e})
        result = LaurentPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly._raw({d + k: c for d, c in self._c.items()})

    def divide_by_monomial(self, other: "LaurentPoly") -> "LaurentPoly":
        if len(other._c) != 1:
            raise DivisibilityError(f"{other} is not a monomial")
        (d, c), = other._c.items()
        return LaurentPoly._raw({k - d: Fraction(v) / c for k, v in self._c.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({d - 1: c * d for d, c in self._c.items() if d})

    def __call__(self, t):
        return self.evaluate(t)

    def evaluate(self, t):
        if isinstance(t, int):
            t = Fraction(t)
        return sum((c * t**d for d, c in self._c.items()), Fraction(0))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d, c in self.terms():
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_derivative(p: BiPoly, var: str) -> BiPoly:
    """Partial derivative of ``p`` with respect to ``var`` (``"u"`` or ``"t"``)."""
    if var not in (U, T):
        raise ValueError(f"unknown variable {var!r}")
    out = {}
    for k, c in p._c.items():
        du, dt = _unpack(k)
        if var == U and du:
            out[_pack(du - 1, dt)] = c * du
        elif var == T and dt:
            out[_pack(du, dt - 1)] = c * dt
    return BiPoly._raw(out)


def substitute_curve(p: BiPoly) -> LaurentPoly:
    """p(1 - 1/t, t), expanded exactly."""
    out: dict[int, Fraction] = {}
    for k, c in p._c.items():
        du, dt = _unpack(k)
        # (1 - t^-1)^du * t^dt
        for j in range(du + 1):
            d = dt - j
            v = out.get(d, 0) + (-1) ** j * comb(du, j) * c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
    return LaurentPoly._raw(out)


def one_minus_u() -> BiPoly:
    return BiPoly({(0, 0): 1, (1, 0): -1})


# --- determinants -----------------------------------------------------------


def cofactor_det(M: Sequence[Sequence]):
    """Laplace expansion along the first row.  Works over any commutative ring."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(n):
        if isinstance(M[0][j], (BiPoly, LaurentPoly)) and not M[0][j]:
            continue
        if not isinstance(M[0][j], (BiPoly, LaurentPoly)) and M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return M[0][0] * 0
    return total


def _bareiss_raw(rows: list[list[dict]], integral: bool) -> tuple[dict, int]:
    """Fraction-free elimination on packed-key polynomial dicts, in place.

    Returns (determinant dict, 1).  Pivots are chosen with the fewest terms.
    """
    n = len(rows)
    sign = 1
    prev: dict = {0: 1}
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            if rows[i][k] and (best is None or len(rows[i][k]) < len(rows[best][k])):
                best = i
        if best is None:
            return {}, 1
        if best != k:
            rows[k], rows[best] = rows[best], rows[k]
            sign = -sign
        piv = rows[k][k]
        rowk = rows[k]
        for i in range(k + 1, n):
            rowi = rows[i]
            a = rowi[k]
            for j in range(k + 1, n):
                x = _mul_dicts(rowi[j], piv) if rowi[j] else {}
                if a and rowk[j]:
                    x = _add_dicts(x, _mul_dicts(a, rowk[j]), -1)
                if x and prev != {0: 1}:
                    x = _divexact_dicts(x, prev, integral)
                rowi[j] = x
            rowi[k] = {}
        prev = piv
    det = rows[n - 1][n - 1]
    if sign < 0:
        det = {key: -c for key, c in det.items()}
    return det, 1


def bareiss_det(M: Sequence[Sequence[BiPoly]]) -> BiPoly:
    """Fraction-free (Bareiss) determinant of a BiPoly matrix.

    Each row is first scaled to integer coefficients, so the elimination runs
    over Z[u, t] and every pivot division must be exact in the integers.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return BiPoly.const(1)
    scale = Fraction(1)
    rows = []
    for row in M:
        entries = [BiPoly._coerce(e) for e in row]
        den = 1
        for e in entries:
            for c in e._c.values():
                den = lcm(den, Fraction(c).denominator)
        scale *= den
        rows.append([{k: int(c * den) for k, c in e._c.items()} for e in entries])
    if n == 1:
        det = rows[0][0]
    else:
        det, _ = _bareiss_raw(rows, integral=True)
    return BiPoly._raw({k: Fraction(c) / scale for k, c in det.items()})


def polymatrix_det(M: Sequence[Sequence]) -> BiPoly:
    """Exact determinant of a square matrix over BiPoly (ints/Fractions allowed)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n <= 3:
        det = cofactor_det([[BiPoly._coerce(e) for e in row] for row in M])
        return BiPoly._coerce(det)
    return bareiss_det(M)


def rational_det(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix (Bareiss over the integers)."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in M:
        row = [as_rational(x) for x in row]
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        scale *= den
        rows.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        p = next((i for i in range(k, n) if rows[i][k]), None)
        if p is None:
            return Fraction(0)
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        piv = rows[k][k]
        rowk = rows[k]
        for i in range(k + 1, n):
            rowi = rows[i]
            a = rowi[k]
            for j in range(k + 1, n):
                num = rowi[j] * piv - a * rowk[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticConsistencyError("inexact Bareiss step over Z")
                rowi[j] = q
        prev = piv
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def charpoly(M: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients [c_0, ..., c_n] of det(x I - M) = sum c_k x**(n-k), so c_0 = 1.

    Reduction to upper Hessenberg form by exact similarity transforms, then
    the standard Hessenberg recurrence.
    """
    n = len(M)
    H = [[as_rational(x) for x in row] for row in M]
    for k in range(n - 2):
        p = next((i for i in range(k + 1, n) if H[i][k]), None)
        if p is None:
            continue
        if p != k + 1:
            H[p], H[k + 1] = H[k + 1], H[p]
            for row in H:
                row[p], row[k + 1] = row[k + 1], row[p]
        piv = H[k + 1][k]
        for i in range(k + 2, n):
            f = H[i][k] / piv
            if not f:
                continue
            Hi, Hk = H[i], H[k + 1]
            for j in range(n):
                Hi[j] -= f * Hk[j]
            for row in H:
                row[k + 1] += f * row[i]
    # polys[m] = charpoly of the leading m x m block, as high-to-low coefficient list
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for m in range(1, n + 1):
        h = H[m - 1][m - 1]
        prevp = polys[m - 1]
        cur = prevp + [Fraction(0)]
        for i, c in enumerate(prevp):
            cur[i + 1] -= h * c
        prod = Fraction(1)
        for i in range(m - 1, 0, -1):
            prod *= H[i][i - 1]
            if not prod:
                break
            coef = H[i - 1][m - 1] * prod
            if coef:
                pp = polys[i - 1]
                off = len(cur) - len(pp)
                for j, c in enumerate(pp):
                    cur[off + j] -= coef * c
        polys.append(cur)
    return polys[n]


def interpolate(xs: Sequence, ys: Sequence) -> list[Fraction]:
    """Exact polynomial through the points, as ascending coefficients (Newton form)."""
    xs = [as_rational(x) for x in xs]
    coef = [as_rational(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    poly[0] = coef[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        deg += 1
        for d in range(deg, 0, -1):
            poly[d] = poly[d - 1] - xs[i] * poly[d]
        poly[0] = coef[i] - xs[i] * poly[0]
    return poly


def laurent_quotient_at_one(p, k: int) -> Fraction:
    """q(1) where p = (1 - t)**k * q, by k rounds of synthetic division at t = 1.

    ``p`` may be a LaurentPoly (negative powers are factored out first, which
    changes neither divisibility by (1 - t) nor the value at 1) or a sequence
    of ascending coefficients.
    """
    if k < 0:
        raise ValueError("multiplicity must be nonnegative")
    if not isinstance(p, LaurentPoly):
        p = LaurentPoly.from_coeffs(list(p))
    if p.is_zero():
        return Fraction(0)
    low = p.min_degree()
    high = p.max_degree()
    # descending coefficients of t**-low * p
    coeffs = [p.coeff(d) for d in range(high, low - 1, -1)]
    for _ in range(k):
        out = []
        acc = Fraction(0)
        for c in coeffs:
            acc = acc + c
            out.append(acc)
        if out[-1]:
            raise DivisibilityError("(1 - t) does not divide the polynomial the required number of times")
        # quotient by (t - 1); (1 - t) flips the sign
        coeffs = [-c for c in out[:-1]]
        if not coeffs:
            return Fraction(0)
    return sum(coeffs, Fraction(0))


def univariate_poly(coeffs: Iterable) -> LaurentPoly:
    return LaurentPoly.from_coeffs(list(coeffs))
