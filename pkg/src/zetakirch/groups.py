"""Finite groups given by multiplication tables, with complete sets of irreducible representations.

Built-ins: cyclic groups Z_r, elementary abelian Z2^k (k <= 3) and S3.  Z_2,
Z2^k and S3 have rational irreducible representations and take the exact
path; Z_r for r >= 3 uses roots of unity and takes the numeric path.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .errors import UnsupportedGroupError, ValidationError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    def __post_init__(self):
        r = len(self.table)
        if r == 0 or any(len(row) != r for row in self.table):
            raise ValidationError("multiplication table must be square and nonempty")
        if len(self.names) != r or len(set(self.names)) != r:
            raise ValidationError("need one distinct name per element")
        elems = range(r)
        if any(sorted(row) != list(elems) for row in self.table):
            raise ValidationError("multiplication table rows must be permutations")
        e = self.identity
        if any(self.table[e][g] != g or self.table[g][e] != g for g in elems):
            raise ValidationError("no two-sided identity")
        for a, b, c in product(elems, repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValidationError("multiplication is not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        for g, row in enumerate(self.table):
            if list(row) == list(range(len(row))):
                return g
        raise ValidationError("no identity element")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        e = self.identity
        return next(b for b in range(self.order) if self.table[a][b] == e)

    def index(self, token: str) -> int:
        try:
            return self.names.index(token)
        except ValueError:
            raise ValidationError(f"{token!r} is not an element of {self.name}") from None


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0)) for j in range(m)) for i in range(n))


@dataclass(frozen=True)
class Representation:
    """rho: group element index -> f x f matrix.  Exact matrices hold Fractions, numeric ones numpy complex."""

    degree: int
    matrices: tuple
    exact: bool

    def matrix(self, g: int):
        return self.matrices[g]

    def character(self, g: int):
        m = self.matrices[g]
        if self.exact:
            return sum((m[i][i] for i in range(self.degree)), Fraction(0))
        return complex(np.trace(m))

    def as_numeric(self) -> "Representation":
        if not self.exact:
            return self
        mats = tuple(np.array([[complex(x) for x in row] for row in m], dtype=complex) for m in self.matrices)
        return Representation(self.degree, mats, False)

    def validate(self, group: FiniteGroup, tol: float = DEFAULT_TOL):
        if len(self.matrices) != group.order:
            raise ValidationError("representation must give one matrix per group element")
        f = self.degree
        ident = group.identity
        if self.exact:
            eye = tuple(tuple(Fraction(int(i == j)) for j in range(f)) for i in range(f))
            if tuple(map(tuple, self.matrices[ident])) != eye:
                raise ValidationError("rho(identity) is not the identity matrix")
            for a in range(group.order):
                for b in range(group.order):
                    if _matmul(self.matrices[a], self.matrices[b]) != tuple(map(tuple, self.matrices[group.mul(a, b)])):
                        raise ValidationError("representation is not a homomorphism")
        else:
            if not np.allclose(self.matrices[ident], np.eye(f), atol=tol, rtol=0):
                raise ValidationError("rho(identity) is not the identity matrix")
            for a in range(group.order):
                for b in range(group.order):
                    if not np.allclose(self.matrices[a] @ self.matrices[b], self.matrices[group.mul(a, b)], atol=tol, rtol=0):
                        raise ValidationError("representation is not a homomorphism")


@dataclass(frozen=True)
class IrrepSet:
    group: FiniteGroup
    irreps: tuple[Representation, ...]

    @property
    def exact(self) -> bool:
        return all(r.exact for r in self.irreps)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.degree for r in self.irreps)

    def as_numeric(self) -> "IrrepSet":
        return IrrepSet(self.group, tuple(r.as_numeric() for r in self.irreps))

    def validate(self, tol: float = DEFAULT_TOL):
        G = self.group
        if not self.irreps:
            raise ValidationError("empty representation list")
        if len({r.exact for r in self.irreps}) != 1:
            raise ValidationError("exact and numeric representations must not be mixed")
        triv = self.irreps[0]
        if triv.degree != 1 or any(triv.character(g) != 1 for g in range(G.order)):
            raise ValidationError("the first representation must be the trivial one")
        for rep in self.irreps:
            rep.validate(G, tol)
        if sum(f * f for f in self.degrees) != G.order:
            raise ValidationError("sum of squared degrees differs from the group order")
        chars = [[r.character(g) for g in range(G.order)] for r in self.irreps]
        for i, ci in enumerate(chars):
            for j, cj in enumerate(chars):
                inner = sum(a * complex(b).conjugate() if not self.exact else a * b for a, b in zip(ci, cj)) / G.order
                target = 1 if i == j else 0
                if self.exact:
                    # rational characters are real, so conjugation is the identity
                    if inner != target:
                        raise ValidationError(f"characters {i} and {j} are not orthonormal")
                elif abs(complex(inner) - target) > tol:
                    raise ValidationError(f"characters {i} and {j} are not orthonormal")
        return self


def _cyclic(r: int) -> FiniteGroup:
    table = tuple(tuple((a + b) % r for b in range(r)) for a in range(r))
    return FiniteGroup(f"Z{r}", table, tuple(str(i) for i in range(r)))


def _cyclic_irreps(G: FiniteGroup) -> IrrepSet:
    r = G.order
    if r == 2:
        reps = tuple(
            Representation(1, tuple(((Fraction((-1) ** (j * g)),),) for g in range(2)), True) for j in range(2)
        )
    else:
        reps = tuple(
            Representation(1, tuple(np.array([[cmath.exp(2j * cmath.pi * j * g / r)]]) for g in range(r)), False)
            for j in range(r)
        )
    return IrrepSet(G, reps)


def _elementary_abelian(k: int) -> tuple[FiniteGroup, IrrepSet]:
    r = 2**k
    table = tuple(tuple(a ^ b for b in range(r)) for a in range(r))
    G = FiniteGroup(f"Z2^{k}", table, tuple(format(i, f"0{k}b") for i in range(r)))
    reps = tuple(
        Representation(1, tuple(((Fraction((-1) ** bin(j & g).count("1")),),) for g in range(r)), True)
        for j in range(r)
    )
    return G, IrrepSet(G, reps)


S3_NAMES = ("e", "(12)", "(13)", "(23)", "(123)", "(132)")


def _cycle_perm(cycle: str) -> tuple[int, ...]:
    """Permutation of {0,1,2} as an image tuple; '(123)' sends 1->2, 2->3, 3->1."""
    img = [0, 1, 2]
    if cycle != "e":
        pts = [int(c) - 1 for c in cycle.strip("()")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def _s3() -> tuple[FiniteGroup, IrrepSet]:
    perms = [_cycle_perm(n) for n in S3_NAMES]
    assert sorted(perms) == sorted(permutations(range(3)))
    # (g h)(x) = g(h(x))
    table = tuple(tuple(perms.index(tuple(g[h[x]] for x in range(3))) for h in perms) for g in perms)
    G = FiniteGroup("S3", table, S3_NAMES)
    one = tuple(((Fraction(1),),) for _ in range(6))
    sign = tuple(((Fraction(1 if n in ("e", "(123)", "(132)") else -1),),) for n in S3_NAMES)
    # integer 2-dimensional irrep generated by (123) and (12)
    gens = {
        G.index("(123)"): ((Fraction(0), Fraction(-1)), (Fraction(1), Fraction(-1))),
        G.index("(12)"): ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))),
    }
    e = G.identity
    mats = {e: ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s, ms in gens.items():
                h = G.mul(g, s)
                if h not in mats:
                    mats[h] = _matmul(mats[g], ms)
                    nxt.append(h)
        frontier = nxt
    two = tuple(mats[g] for g in range(6))
    reps = (Representation(1, one, True), Representation(1, sign, True), Representation(2, two, True))
    return G, IrrepSet(G, reps)


_TOKEN_RE = re.compile(r"^(?:Z(\d+)|Z2\^(\d+)|S3)$")


def builtin_group(token: str) -> tuple[FiniteGroup, IrrepSet]:
    """``Z<r>`` (r >= 2), ``Z2^<k>`` (1 <= k <= 3) or ``S3``, with validated irreducible representations."""
    mt = _TOKEN_RE.match(token.strip())
    if not mt:
        raise UnsupportedGroupError(f"unsupported group {token!r}; use Z<r>, Z2^<k> or S3")
    if mt.group(1):
        r = int(mt.group(1))
        if r < 2:
            raise UnsupportedGroupError("Z_r needs r >= 2")
        G = _cyclic(r)
        irreps = _cyclic_irreps(G)
    elif mt.group(2):
        k = int(mt.group(2))
        if not 1 <= k <= 3:
            raise UnsupportedGroupError("Z2^k is supported for 1 <= k <= 3")
        G, irreps = _elementary_abelian(k)
    else:
        G, irreps = _s3()
    return G, irreps.validate()


def group_from_table(name: str, table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroup:
    names = tuple(names) if names is not None else tuple(str(i) for i in range(len(table)))
    return FiniteGroup(name, tuple(tuple(row) for row in table), names)


def irreps_from_matrices(group: FiniteGroup, reps: Sequence[Sequence], tol: float = DEFAULT_TOL) -> IrrepSet:
    """User-supplied representations (one matrix per element, in element order), validated.

    Matrices of Fractions/ints take the exact path, anything else the numeric path.
    """
    built = []
    for mats in reps:
        f = len(mats[0])
        exact = all(isinstance(x, (int, Fraction)) for m in mats for row in m for x in row)
        if exact:
            ms = tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in mats)
        else:
            ms = tuple(np.array(m, dtype=complex) for m in mats)
        built.append(Representation(f, ms, exact))
    return IrrepSet(group, tuple(built)).validate(tol)
