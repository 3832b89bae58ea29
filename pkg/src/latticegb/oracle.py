"""Brute-force verifiers, independent of the Buchberger engine.

Everything here is plain exact integer linear algebra:

* degree slices of an ideal's initial ideal by row reduction of the
  matrix of all monomial multiples of the generators;
* integer lattice membership by Hermite-style row echelon forms;
* the three-way table toric map ``x_ijk -> u_ij v_ik w_jk`` and its
  kernel, including initial ideal slices of the toric ideal computed from
  the fibres of the map.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra import check_homogeneous, decompose, monomial_key
from .errors import DimensionMismatchError, EnumerationLimitError, NotHomogeneousError

DEFAULT_LIMIT = 100_000


@dataclass(frozen=True)
class InitialIdealSlice:
    degree: int
    monomials: frozenset


@dataclass(frozen=True)
class ToricMap:
    """Integer matrix whose column ``j`` is the exponent vector of the image of ``x_j``."""

    matrix: tuple
    row_labels: tuple = ()
    col_labels: tuple = ()

    @property
    def shape(self):
        return len(self.matrix), len(self.matrix[0]) if self.matrix else 0

    def __call__(self, v):
        m, n = self.shape
        if len(v) != n:
            raise DimensionMismatchError(f"vector of length {len(v)}, map has {n} columns")
        return tuple(sum(a * e for a, e in zip(row, v)) for row in self.matrix)


def enumerate_monomials(s, grading, order=None, limit=DEFAULT_LIMIT):
    """All exponent vectors of grading degree ``s``.

    Sorted from largest to smallest when ``order`` is given.  Raises
    `EnumerationLimitError` rather than returning a partial list when there
    are more than ``limit`` of them.
    """
    weights = grading.weights
    n = len(weights)
    out = []
    current = [0] * n

    def rec(i, rest):
        if i == n - 1:
            if rest % weights[i] == 0:
                current[i] = rest // weights[i]
                out.append(tuple(current))
                if len(out) > limit:
                    raise EnumerationLimitError(
                        f"more than {limit} monomials of degree {s}")
            return
        for e in range(rest // weights[i], -1, -1):
            current[i] = e
            rec(i + 1, rest - e * weights[i])
        current[i] = 0

    if s >= 0:
        rec(0, s)
    if order is not None:
        out.sort(key=lambda m: monomial_key(m, grading, order), reverse=True)
    return out


class _Echelon:
    """Fraction-free sparse row echelon form over the integers.

    Rows are dicts ``column -> coefficient``; the leading entry of a row is
    its smallest column index.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        row = {c: a for c, a in row.items() if a}
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                return row
            a, b = row[c], p[c]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            new = {k: fa * x for k, x in row.items()}
            for k, x in p.items():
                y = new.get(k, 0) - fb * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            content = 0
            for x in new.values():
                content = gcd(content, x)
            if content > 1:
                new = {k: x // content for k, x in new.items()}
            row = new
        return row

    def add(self, row):
        row = self.reduce(row)
        if row:
            self.pivots[min(row)] = row
            return True
        return False


def _slice_rows(vectors, grading, s, index, cache):
    for v in vectors:
        plus, minus = decompose(v)
        d = grading(plus)
        if d > s:
            continue
        if s - d not in cache:
            cache[s - d] = enumerate_monomials(s - d, grading)
        for m in cache[s - d]:
            a = tuple(x + y for x, y in zip(m, plus))
            b = tuple(x + y for x, y in zip(m, minus))
            yield {index[a]: 1, index[b]: -1}


def _check_input(vectors, grading):
    bad = check_homogeneous(vectors, grading)
    if bad:
        raise NotHomogeneousError(bad)


def initial_slice(vectors, grading, order, s, limit=DEFAULT_LIMIT):
    """Degree-``s`` part of the initial ideal of the ideal generated by ``bin(vectors)``."""
    vectors = [tuple(v) for v in vectors if any(v)]
    _check_input(vectors, grading)
    cols = enumerate_monomials(s, grading, order, limit)
    index = {m: i for i, m in enumerate(cols)}
    ech = _Echelon()
    for row in _slice_rows(vectors, grading, s, index, {}):
        ech.add(row)
    return InitialIdealSlice(s, frozenset(cols[c] for c in ech.pivots))


def truncated_initial_oracle(vectors, grading, order, d, limit=DEFAULT_LIMIT):
    """Initial ideal slices for every degree ``s < d``."""
    return [initial_slice(vectors, grading, order, s, limit) for s in range(d)]


def ideal_slice_contains(vectors, grading, order, poly, limit=DEFAULT_LIMIT):
    """Whether the homogeneous polynomial ``poly`` lies in the ideal of ``bin(vectors)``.

    ``poly`` maps exponent tuples to integer coefficients.
    """
    poly = {tuple(m): c for m, c in poly.items() if c}
    if not poly:
        return True
    degrees = {grading(m) for m in poly}
    if len(degrees) != 1:
        raise NotHomogeneousError([tuple(m) for m in poly], "polynomial is not homogeneous")
    (s,) = degrees
    vectors = [tuple(v) for v in vectors if any(v)]
    _check_input(vectors, grading)
    cols = enumerate_monomials(s, grading, order, limit)
    index = {m: i for i, m in enumerate(cols)}
    ech = _Echelon()
    for row in _slice_rows(vectors, grading, s, index, {}):
        ech.add(row)
    return not ech.reduce({index[m]: c for m, c in poly.items()})


def binomial_multiple(v, cofactor):
    """``x^cofactor * bin(v)`` as a coefficient dict."""
    plus, minus = decompose(v)
    a = tuple(x + y for x, y in zip(cofactor, plus))
    b = tuple(x + y for x, y in zip(cofactor, minus))
    return {a: 1, b: -1}


def basis_initial_slice(leads, grading, s, limit=DEFAULT_LIMIT):
    """Monomials of degree ``s`` divisible by one of the monomials ``leads``."""
    mons = enumerate_monomials(s, grading, limit=limit)
    leads = [tuple(m) for m in leads]
    return InitialIdealSlice(
        s, frozenset(m for m in mons if any(all(x <= y for x, y in zip(l, m)) for l in leads)))


def compare_truncated(basis, vectors, grading, order, d, limit=DEFAULT_LIMIT):
    """Per-degree agreement of a truncated basis with the oracle, ``{s: bool}`` for ``s < d``."""
    leads = [b.plus for b in basis if b.degree < d]
    result = {}
    for s in range(d):
        mine = basis_initial_slice([m for m in leads if grading(m) <= s], grading, s, limit)
        result[s] = mine.monomials == initial_slice(vectors, grading, order, s, limit).monomials
    return result


def _echelon_rows(rows, ncols):
    """Integer row echelon form in the first ``ncols`` columns.

    Returns the rows (in place order) and the list of ``(column, row index)``
    pivots; rows after the last pivot row are zero in the first ``ncols``
    columns.
    """
    rows = [list(r) for r in rows]
    pivots = []
    top = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(top, len(rows)) if rows[i][c]]
            if not nz:
                break
            i = min(nz, key=lambda k: abs(rows[k][c]))
            rows[top], rows[i] = rows[i], rows[top]
            p = rows[top]
            clean = True
            for j in range(top + 1, len(rows)):
                if rows[j][c]:
                    q = rows[j][c] // p[c]
                    rows[j] = [a - q * b for a, b in zip(rows[j], p)]
                    if rows[j][c]:
                        clean = False
            if clean:
                break
        if top < len(rows) and rows[top][c]:
            pivots.append((c, top))
            top += 1
    return rows, pivots


def lattice_contains(lattice_basis, v):
    """Whether ``v`` is an integer combination of the vectors ``lattice_basis``."""
    v = list(v)
    n = len(v)
    rows = [tuple(b) for b in lattice_basis]
    for b in rows:
        if len(b) != n:
            raise DimensionMismatchError(f"lattice vector of length {len(b)}, expected {n}")
    rows, pivots = _echelon_rows([b for b in rows if any(b)], n)
    for c, i in pivots:
        p = rows[i]
        q, r = divmod(v[c], p[c])
        if r:
            return False
        if q:
            v = [a - q * b for a, b in zip(v, p)]
    return not any(v)


def kernel_lattice_basis(matrix):
    """A basis of the integer lattice ``{v : A v = 0}``."""
    matrix = [tuple(r) for r in matrix]
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = []
    for j in range(n):
        unit = [0] * n
        unit[j] = 1
        aug.append([matrix[i][j] for i in range(m)] + unit)
    rows, pivots = _echelon_rows(aug, m)
    return [tuple(r[m:]) for r in rows[len(pivots):]]


def build_toric_matrix(I, J, K):
    """Matrix of ``x_ijk -> u_ij v_ik w_jk``.

    Columns are the ``x_ijk`` in lexicographic ``(i, j, k)`` order; rows
    are all ``u_ij``, then all ``v_ik``, then all ``w_jk``, each block
    lexicographic.
    """
    if min(I, J, K) < 1:
        raise ValueError("dimensions must be positive")
    cols = [(i, j, k) for i in range(1, I + 1) for j in range(1, J + 1) for k in range(1, K + 1)]
    rows = ([("u", i, j) for i in range(1, I + 1) for j in range(1, J + 1)]
            + [("v", i, k) for i in range(1, I + 1) for k in range(1, K + 1)]
            + [("w", j, k) for j in range(1, J + 1) for k in range(1, K + 1)])
    index = {r: t for t, r in enumerate(rows)}
    A = [[0] * len(cols) for _ in rows]
    for c, (i, j, k) in enumerate(cols):
        A[index["u", i, j]][c] = 1
        A[index["v", i, k]][c] = 1
        A[index["w", j, k]][c] = 1
    return ToricMap(
        tuple(tuple(r) for r in A),
        tuple(f"{a}{p}{q}" for a, p, q in rows),
        tuple(table_variable_names(I, J, K)),
    )


def table_variable_names(I, J, K):
    return [f"x{i}{j}{k}" for i in range(1, I + 1) for j in range(1, J + 1)
            for k in range(1, K + 1)]


def toric_kernel_contains(A, v):
    """Whether ``A v = 0``, i.e. ``bin(v)`` lies in the toric ideal of ``A``."""
    return not any(A(v))


def toric_initial_oracle(A, grading, order, d, limit=DEFAULT_LIMIT):
    """Initial ideal slices of the toric ideal of ``A`` for ``s < d``.

    The degree-``s`` part of a toric ideal is spanned by ``x^a - x^b`` with
    ``A a = A b``, so within each fibre of ``A`` every monomial except the
    smallest one is an initial monomial.
    """
    out = []
    for s in range(d):
        fibres = {}
        for m in enumerate_monomials(s, grading, order, limit):
            fibres.setdefault(A(m), []).append(m)
        # enumeration is descending, so the last monomial of a fibre is its smallest
        out.append(InitialIdealSlice(
            s, frozenset(m for ms in fibres.values() for m in ms[:-1])))
    return out
