"""Homogeneous Buchberger algorithm for binomial ideals given by integer vectors.

The driver keeps one priority queue holding both the unprocessed input
generators (keyed by their degree) and the S-pairs (keyed by the degree of
the lcm of the two leading monomials).  Items are extracted in order of
nondecreasing key, ties broken first-in first-out, so whenever an item of
key ``d`` is extracted the basis elements of degree ``< d`` form a
``d``-truncated Gröbner basis.

Two modes are supported:

``"saturated"``
    The caller promises the input generates a lattice ideal.  An item whose
    sat-reduction drops in degree is discarded: its saturated remainder
    lives in lower degree and already reduces to zero there.

``"check"``
    Items are reduced to a full normal form.  A nonzero remainder of lower
    degree than the extraction key proves the ideal is not saturated; the
    run halts and reports it as a witness.
"""

from __future__ import annotations

import heapq
import logging
import time
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .algebra import check_homogeneous, degree_of, join, leq, orient
from .errors import DegreeOutOfRangeError, NotHomogeneousError, ZeroVectorError
from .reduction import monomial_normal_form, normal_form_sat

log = logging.getLogger(__name__)

MODES = ("check", "saturated")


@dataclass(frozen=True)
class SPair:
    """Critical pair of basis elements ``parents = (i, m)``.

    ``diff`` is ``v_i - v_m``, the saturated S-polynomial, and ``cofactor``
    is the common factor of the two monomials of the unsaturated one, whose
    degree is ``sdegree``.
    """

    diff: tuple
    sdegree: int
    parents: tuple
    cofactor: tuple


@dataclass
class DegreeStats:
    added: int = 0
    generated: int = 0
    spairs: int = 0
    pruned_coprime: int = 0
    pruned_gm: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    drops: int = 0

    def __iadd__(self, other):
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))
        return self


@dataclass
class RunStats:
    """Counters keyed by the extraction degree during which they occurred."""

    per_degree: dict = field(default_factory=dict)
    wall_time: float = 0.0
    duplicates: int = 0

    def at(self, d):
        if d not in self.per_degree:
            self.per_degree[d] = DegreeStats()
        return self.per_degree[d]

    def totals(self):
        total = DegreeStats()
        for s in self.per_degree.values():
            total += s
        return total


def format_stats_line(d, stats, basis_size):
    return (f"deg={d} basis={basis_size} added={stats.added} spairs={stats.spairs} "
            f"pruned_coprime={stats.pruned_coprime} pruned_gm={stats.pruned_gm} "
            f"zero_reductions={stats.zero_reductions}")


@dataclass(frozen=True)
class CompletedGB:
    basis: tuple


@dataclass(frozen=True)
class TruncatedGB:
    basis: tuple
    bound: int


@dataclass(frozen=True)
class NotSaturated:
    """Proof that the input ideal is not saturated.

    ``witness`` is the reduced remainder, of degree below
    ``extracted_degree``; ``x^cofactor * bin(witness)`` lies in the ideal.
    ``pre_reduction`` is the vector of the extracted item and ``source`` the
    S-pair it came from (None for an input generator).  ``basis`` is the
    basis at the time of the halt; its elements of degree below
    ``extracted_degree`` form a truncated Gröbner basis.
    """

    witness: object
    extracted_degree: int
    pre_reduction: tuple
    basis: tuple
    cofactor: tuple
    source: Optional[SPair] = None


class UpdateResult(NamedTuple):
    pairs: list
    generated: int
    pruned_coprime: int
    pruned_gm: int


def update_spairs(basis, grading, m=None, prune=True):
    """S-pairs between the element ``basis[m]`` and all earlier elements.

    With ``prune`` (the default) pairs with coprime leading monomials are
    skipped and of the remaining ones only those whose lcm quotient
    ``a = v_i+ v v_m+ - v_m+`` is minimal under componentwise order are
    kept; on ties the earliest element wins.
    """
    if m is None:
        m = len(basis) - 1
    g = basis[m]
    gplus = g.plus
    coprime = gm = 0
    kept = []
    for i in range(m):
        h = basis[i]
        if prune and not (h.lead_mask & g.lead_mask):
            coprime += 1
            continue
        lcm = join(h.plus, gplus)
        a = tuple(x - y for x, y in zip(lcm, gplus))
        if prune:
            if any(leq(w, a) for w, _, _ in kept):
                gm += 1
                continue
            before = len(kept)
            kept = [entry for entry in kept if not leq(a, entry[0])]
            gm += before - len(kept)
        kept.append((a, i, lcm))
    pairs = []
    for a, i, lcm in kept:
        h = basis[i]
        diff = tuple(x - y for x, y in zip(h.vector, g.vector))
        # monomials of the S-polynomial: lcm - h+ + h- and lcm - g+ + g-
        mono_h = tuple(l - p + q for l, p, q in zip(lcm, h.plus, h.minus))
        mono_g = tuple(l - p + q for l, p, q in zip(lcm, gplus, g.minus))
        cofactor = tuple(x if x < y else y for x, y in zip(mono_h, mono_g))
        pairs.append(SPair(diff, grading(lcm), (i, m), cofactor))
    return UpdateResult(pairs, m, coprime, gm)


def prepare_generators(vectors, grading, order):
    """Validate, orient and deduplicate input vectors.

    Returns the oriented generators in input order and the number of
    duplicates dropped.
    """
    vectors = [tuple(int(e) for e in v) for v in vectors]
    bad = check_homogeneous(vectors, grading)
    if bad:
        raise NotHomogeneousError(bad)
    seen = set()
    out = []
    for k, v in enumerate(vectors):
        if not any(v):
            raise ZeroVectorError(f"generator {k + 1} is the zero vector")
        b = orient(v, grading, order)
        if b.vector in seen:
            continue
        seen.add(b.vector)
        out.append(b)
    dups = len(vectors) - len(out)
    if dups:
        log.warning("dropped %d duplicate generator(s)", dups)
    return out, dups


def buchberger(vectors, grading, order, mode="check", max_degree=None, prune=True,
               on_degree=None):
    """Minimal Gröbner basis of the ideal generated by ``bin(v)`` for ``v`` in ``vectors``.

    Returns ``(outcome, stats)`` where ``outcome`` is a `CompletedGB`,
    `TruncatedGB` (when ``max_degree`` stopped the run: every item of key
    below it was processed, none at or above) or `NotSaturated` (check mode
    only).  ``on_degree(d, degree_stats, basis_size)`` is called each time
    all items of key ``d`` have been processed.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    start = time.perf_counter()
    stats = RunStats()
    gens, stats.duplicates = prepare_generators(vectors, grading, order)
    n = grading.n

    queue = []
    seq = 0
    for b in gens:
        heapq.heappush(queue, (b.degree, seq, b.vector, None))
        seq += 1

    basis = []
    current = None
    saturated = mode == "saturated"

    def finish():
        stats.wall_time = time.perf_counter() - start

    def flush(d):
        if d is not None and on_degree is not None:
            on_degree(d, stats.at(d), len(basis))

    while queue:
        key = queue[0][0]
        if max_degree is not None and key >= max_degree:
            flush(current)
            finish()
            return TruncatedGB(tuple(basis), max_degree), stats
        _, _, vector, pair = heapq.heappop(queue)
        if key != current:
            flush(current)
            current = key
        ds = stats.at(key)
        if pair is not None:
            ds.reductions += 1
        res = normal_form_sat(vector, basis, grading, order, degree=key,
                              stop_on_drop=saturated)
        if res.is_zero:
            ds.zero_reductions += 1
            continue
        if res.dropped:
            ds.drops += 1
            if saturated:
                continue
            cofactor = res.cofactor
            if pair is not None:
                cofactor = tuple(a + b for a, b in zip(cofactor, pair.cofactor))
            finish()
            return NotSaturated(res.normal_form, key, vector, tuple(basis), cofactor, pair), stats
        basis.append(res.normal_form)
        ds.added += 1
        upd = update_spairs(basis, grading, prune=prune)
        ds.generated += upd.generated
        ds.pruned_coprime += upd.pruned_coprime
        ds.pruned_gm += upd.pruned_gm
        ds.spairs += len(upd.pairs)
        for p in upd.pairs:
            heapq.heappush(queue, (p.sdegree, seq, p.diff, p))
            seq += 1
    flush(current)
    finish()
    return CompletedGB(tuple(basis)), stats


class SaturationResult(NamedTuple):
    basis: tuple
    witnesses: list
    outcome: object


def saturate(vectors, grading, order, max_degree=None, prune=True, on_witness=None,
             on_degree=None):
    """Run check mode repeatedly, adding each witness to the generators.

    Stops at the first run that does not find a witness.  Every witness is
    in the saturation of the ideal, so the final basis generates an ideal
    between the input ideal and its saturation; check mode cannot detect
    every non-saturated ideal, so equality with the saturation holds when
    the final run certifies it, not unconditionally.
    """
    gens = [tuple(v) for v in vectors]
    witnesses = []
    while True:
        outcome, _ = buchberger(gens, grading, order, mode="check", max_degree=max_degree,
                                prune=prune, on_degree=on_degree)
        if not isinstance(outcome, NotSaturated):
            return SaturationResult(outcome.basis, witnesses, outcome)
        witnesses.append(outcome.witness)
        if on_witness is not None:
            on_witness(outcome)
        gens.append(outcome.witness.vector)


def interreduce(basis, grading, order):
    """Replace every trailing monomial by its normal form modulo the basis.

    ``basis`` must be a minimal (possibly truncated) Gröbner basis; leading
    monomials are unchanged, and since monomial normal forms modulo a
    Gröbner basis are unique the result does not depend on the order of
    the elements.
    """
    out = []
    for g in basis:
        tail = monomial_normal_form(g.minus, basis)
        v = tuple(a - b for a, b in zip(g.plus, tail))
        if any(a > 0 and b > 0 for a, b in zip(g.plus, tail)):
            raise ValueError(f"reduced tail of {g.vector} shares a factor with its "
                             "leading monomial; the ideal is not saturated")
        r = orient(v, grading, order)
        if r.plus != g.plus:
            raise ValueError(f"leading monomial of {g.vector} changed; input is not minimal")
        out.append(r)
    return out


def plain_normal_form(v, basis):
    """Normal forms ``(a, b)`` of the two monomials of ``bin(v)``, no sat steps."""
    plus = tuple(e if e > 0 else 0 for e in v)
    minus = tuple(-e if e < 0 else 0 for e in v)
    return monomial_normal_form(plus, basis), monomial_normal_form(minus, basis)


def membership(v, basis, grading, bound=None):
    """Whether ``bin(v)`` lies in the ideal of which ``basis`` is a Gröbner basis.

    If ``basis`` is only a ``bound``-truncated Gröbner basis the answer is
    valid for binomials of degree below ``bound`` only, and larger degrees
    raise `DegreeOutOfRangeError`.
    """
    d = degree_of(v, grading, require_homogeneous=True)
    if bound is not None and d >= bound:
        raise DegreeOutOfRangeError(f"degree {d} is not below the truncation bound {bound}")
    a, b = plain_normal_form(v, basis)
    return a == b
