"""Division of binomials with sat-reduction.

Each elementary step subtracts (or, for a trailing-monomial reduction, adds)
a reducer vector and immediately re-orients the result.  Because a vector
always describes the binomial with the common factor of its two monomials
divided out, every step is at the same time a sat step; a step whose result
has lower degree than its input is a *degree drop*.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import leq, orient, support_mask
from .errors import NotHomogeneousError


@dataclass(frozen=True)
class DropTrace:
    vector: tuple
    degree_before: int
    degree_after: int


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of `normal_form_sat`.

    ``normal_form`` is None when the input reduced to zero.  ``cofactor`` is
    the product of all common monomial factors divided out during the
    reduction, so ``x^cofactor * bin(normal_form)`` agrees with the input
    binomial, up to sign, modulo the reducers.
    """

    normal_form: object
    dropped: bool
    drop_trace: DropTrace = None
    cofactor: tuple = ()
    steps: int = 0

    @property
    def is_zero(self):
        return self.normal_form is None


def find_reducer(m, basis, mask=None):
    """Index of the first element of ``basis`` whose leading monomial divides ``x^m``."""
    if mask is None:
        mask = support_mask(m)
    for i, g in enumerate(basis):
        if g.lead_mask & ~mask:
            continue
        if leq(g.plus, m):
            return i
    return None


def _step(u, g):
    """Fused reduce-and-saturate step; returns the new vector and the divided-out factor."""
    if leq(g.plus, u.plus):
        # x^{u+} replaced by x^{u+ - g+ + g-}
        high = tuple(a - b + c for a, b, c in zip(u.plus, g.plus, g.minus))
        low = u.minus
    elif leq(g.plus, u.minus):
        high = u.plus
        low = tuple(a - b + c for a, b, c in zip(u.minus, g.plus, g.minus))
    else:
        raise ValueError("leading monomial of the reducer divides neither monomial")
    common = tuple(a if a < b else b for a, b in zip(high, low))
    w = tuple(a - b for a, b in zip(high, low))
    return w, common


def sat_reduce_step(u, g, grading, order):
    """One sat-reduction of ``bin(u)`` by ``bin(g)``.

    Returns ``(w, dropped)`` where ``w`` is ``u - g`` for a reduction of the
    leading monomial and ``u + g`` for a reduction of the trailing one.
    """
    w, _ = _step(u, g)
    if not any(w):
        return w, False
    return w, orient(w, grading, order).degree < u.degree


def normal_form_sat(v, basis, grading, order, degree=None, stop_on_drop=False):
    """Fully reduce ``bin(v)`` modulo ``basis`` using sat-reduction.

    ``degree`` is the degree of the unsaturated binomial the vector came
    from (the lcm degree of an S-pair); if it exceeds the degree of
    ``bin(v)`` the reduction starts out dropped.  With ``stop_on_drop`` the
    reduction returns as soon as a drop is seen.
    """
    v = tuple(v)
    if grading(v) != 0:
        raise NotHomogeneousError([v])
    n = len(v)
    zero = (0,) * n
    if not any(v):
        return ReductionResult(None, False, None, zero, 0)
    u = orient(v, grading, order)
    cofactor = zero
    trace = None
    if degree is not None and u.degree < degree:
        trace = DropTrace(v, degree, u.degree)
        if stop_on_drop:
            return ReductionResult(u, True, trace, cofactor, 0)
    steps = 0
    while True:
        i = find_reducer(u.plus, basis, u.lead_mask)
        if i is None:
            i = find_reducer(u.minus, basis, u.trail_mask)
            if i is None:
                break
        w, common = _step(u, basis[i])
        steps += 1
        cofactor = tuple(a + b for a, b in zip(cofactor, common))
        if not any(w):
            return ReductionResult(None, trace is not None, trace, cofactor, steps)
        nu = orient(w, grading, order)
        if nu.degree < u.degree and trace is None:
            trace = DropTrace(u.vector, u.degree, nu.degree)
            if stop_on_drop:
                return ReductionResult(nu, True, trace, cofactor, steps)
        u = nu
    return ReductionResult(u, trace is not None, trace, cofactor, steps)


def monomial_normal_form(m, basis):
    """Plain (non-sat) normal form of the monomial ``x^m`` modulo ``basis``.

    Reducing a monomial by a binomial gives a monomial again, so the result
    is an exponent vector.
    """
    m = tuple(m)
    while True:
        i = find_reducer(m, basis)
        if i is None:
            return m
        g = basis[i]
        m = tuple(a - b + c for a, b, c in zip(m, g.plus, g.minus))
