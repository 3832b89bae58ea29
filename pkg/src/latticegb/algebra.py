"""Exponent vectors, gradings, term orders and oriented binomials.

A binomial ``x^a - x^b`` with ``a`` and ``b`` of disjoint support is stored
as the single integer vector ``v = a - b``; its monomials are recovered as
``v+ = max(v, 0)`` and ``v- = max(-v, 0)``.

Term orders compare, in sequence, the grading degree, each weight row, and
finally a reverse-lexicographic tie-break: scanning the variables from the
least significant upward, the first variable where the exponents differ
decides, and the monomial with the *smaller* exponent there is the larger
one.  With variables ``x, y, z`` and significance ``z > y > x`` this gives
``y^2 > xz`` under the grading ``(3, 4, 5)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    DimensionMismatchError,
    ExponentOverflowError,
    NotHomogeneousError,
    ZeroVectorError,
)

# exponents are kept within signed 64-bit range
EXPONENT_LIMIT = 2**63 - 1


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class Grading:
    """Positive integer degrees of the variables."""

    weights: tuple

    def __post_init__(self):
        weights = tuple(int(a) for a in self.weights)
        if not weights:
            raise ValueError("grading needs at least one variable")
        if any(a < 1 for a in weights):
            raise ValueError(f"grading weights must be positive, got {weights}")
        object.__setattr__(self, "weights", weights)

    @property
    def n(self):
        return len(self.weights)

    def __call__(self, m):
        """Degree of the monomial with exponent vector ``m``."""
        return sum(a * e for a, e in zip(self.weights, m))

    @classmethod
    def standard(cls, n):
        return cls((1,) * n)


@dataclass(frozen=True)
class TermOrder:
    """Weight rows followed by a reverse-lexicographic tie-break.

    ``significance`` lists 0-based variable indices, most significant first.
    The grading is always used as an implicit first row (see `compare`).
    """

    weight_rows: tuple = ()
    significance: tuple = ()
    _scan: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(w) for w in row) for row in self.weight_rows)
        sig = tuple(int(i) for i in self.significance)
        n = len(sig)
        if sorted(sig) != list(range(n)):
            raise ValueError(f"significance must be a permutation of 0..{n - 1}, got {sig}")
        for row in rows:
            if len(row) != n:
                raise DimensionMismatchError(
                    f"weight row has length {len(row)}, expected {n}")
        object.__setattr__(self, "weight_rows", rows)
        object.__setattr__(self, "significance", sig)
        object.__setattr__(self, "_scan", tuple(reversed(sig)))

    @property
    def n(self):
        return len(self.significance)

    @classmethod
    def revlex(cls, n, weight_rows=()):
        """Reverse lexicographic order with the last variable most significant."""
        return cls(weight_rows, tuple(range(n - 1, -1, -1)))


@dataclass(frozen=True, slots=True)
class OrientedBinomial:
    """``bin(vector) = x^plus - x^minus`` with ``x^plus`` the leading monomial."""

    vector: tuple
    degree: int
    plus: tuple
    minus: tuple
    lead_mask: int
    trail_mask: int


def _check_dim(n, *vectors):
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatchError(f"vector of length {len(v)}, expected {n}")


def decompose(v):
    """Split ``v`` into nonnegative parts ``(v+, v-)`` with ``v = v+ - v-``."""
    plus = tuple(e if e > 0 else 0 for e in v)
    minus = tuple(-e if e < 0 else 0 for e in v)
    return plus, minus


def support_mask(m):
    """Bitmask of the indices where ``m`` is positive."""
    mask = 0
    for i, e in enumerate(m):
        if e > 0:
            mask |= 1 << i
    return mask


def leq(a, b):
    """Componentwise ``a <= b``."""
    return all(x <= y for x, y in zip(a, b))


def join(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomial_key(m, grading, order):
    """Sort key realising the term order: larger key means larger monomial."""
    key = [grading(m)]
    for row in order.weight_rows:
        key.append(sum(w * e for w, e in zip(row, m)))
    key.extend(-m[i] for i in order._scan)
    return tuple(key)


def compare(a, b, grading, order):
    """Compare the monomials ``x^a`` and ``x^b``."""
    n = grading.n
    if order.n != n:
        raise DimensionMismatchError(f"term order has {order.n} variables, grading has {n}")
    _check_dim(n, a, b)
    da, db = grading(a), grading(b)
    if da != db:
        return Cmp.GT if da > db else Cmp.LT
    for row in order.weight_rows:
        wa = sum(w * e for w, e in zip(row, a))
        wb = sum(w * e for w, e in zip(row, b))
        if wa != wb:
            return Cmp.GT if wa > wb else Cmp.LT
    for i in order._scan:
        if a[i] != b[i]:
            return Cmp.GT if a[i] < b[i] else Cmp.LT
    return Cmp.EQ


def lead_sign(v, grading, order):
    """+1 if ``x^{v+}`` leads ``bin(v)``, -1 if ``x^{v-}`` does, 0 for ``v = 0``.

    Multiplicativity of the order lets us compare on ``v`` directly.
    """
    s = sum(a * e for a, e in zip(grading.weights, v))
    if s:
        return 1 if s > 0 else -1
    for row in order.weight_rows:
        s = sum(w * e for w, e in zip(row, v))
        if s:
            return 1 if s > 0 else -1
    for i in order._scan:
        e = v[i]
        if e:
            return 1 if e < 0 else -1
    return 0


def orient(v, grading, order):
    """Return the oriented binomial for ``v`` or ``-v``, whichever leads with its plus part."""
    v = tuple(v)
    _check_dim(grading.n, v)
    sign = lead_sign(v, grading, order)
    if sign == 0:
        raise ZeroVectorError("cannot orient the zero vector")
    if sign < 0:
        v = tuple(-e for e in v)
    for e in v:
        if e > EXPONENT_LIMIT or -e > EXPONENT_LIMIT:
            raise ExponentOverflowError(f"exponent {e} exceeds the 64-bit limit")
    plus, minus = decompose(v)
    return OrientedBinomial(
        vector=v,
        degree=grading(plus),
        plus=plus,
        minus=minus,
        lead_mask=support_mask(plus),
        trail_mask=support_mask(minus),
    )


def degree_of(v, grading, require_homogeneous=False):
    """Grading degree of ``x^{v+}``.

    With ``require_homogeneous`` the two monomials of ``bin(v)`` must have
    equal degree, otherwise `NotHomogeneousError` is raised.
    """
    _check_dim(grading.n, v)
    if require_homogeneous and grading(v) != 0:
        raise NotHomogeneousError([v])
    return sum(a * e for a, e in zip(grading.weights, v) if e > 0)


def check_homogeneous(vectors, grading):
    """Return every vector whose binomial is not homogeneous for ``grading``."""
    bad = []
    for v in vectors:
        _check_dim(grading.n, v)
        if grading(v) != 0:
            bad.append(tuple(v))
    return bad
