"""Vector problem files and symbolic binomials.

Vector file format::

    # comment lines start with '#'
    n m
    grading: a1 ... an
    weight: w1 ... wn          (optional, repeatable, in order)
    significance: p1 ... pn    (optional, 1-based, most significant first)
    v11 ... v1n
    ...                        (m lines of n signed integers)

The default significance is ``n, n-1, ..., 1``: the last declared
variable is the most significant one in the reverse lexicographic
tie-break, so declaring ``x, y, z`` gives ``x < y < z``.

Symbolic binomials are written ``term - term`` where a term is ``1`` or a
``*``-separated product of ``name`` or ``name^k`` factors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import Grading, TermOrder, check_homogeneous
from .errors import ParseError, ZeroVectorError


@dataclass
class ProblemFile:
    n: int
    grading: Grading
    weight_rows: list = field(default_factory=list)
    significance: tuple = None
    generators: list = field(default_factory=list)

    def __post_init__(self):
        if self.significance is None:
            self.significance = tuple(range(self.n - 1, -1, -1))

    @property
    def order(self):
        return TermOrder(tuple(self.weight_rows), self.significance)

    def default_names(self):
        return default_names(self.n)


def default_names(n):
    return [f"x{i}" for i in range(1, n + 1)]


def _ints(fields, lineno, what):
    out = []
    for f in fields:
        try:
            out.append(int(f))
        except ValueError:
            raise ParseError(f"malformed integer {f!r} in {what}", lineno) from None
    return out


def parse_vector_file(text):
    """Parse a vector problem file; see the module docstring for the format."""
    lines = [(k, raw.split()) for k, raw in enumerate(text.splitlines(), 1)
             if raw.strip() and not raw.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty problem file")
    it = iter(lines)

    lineno, fields = next(it)
    if len(fields) != 2:
        raise ParseError(f"expected header 'n m', got {len(fields)} field(s)", lineno)
    n, m = _ints(fields, lineno, "header")
    if n < 1 or m < 0:
        raise ParseError(f"bad header n={n} m={m}", lineno)

    try:
        lineno, fields = next(it)
    except StopIteration:
        raise ParseError("missing 'grading:' line", lines[-1][0]) from None
    if fields[0] != "grading:":
        raise ParseError("second data line must be 'grading: a1 ... an'", lineno)
    weights = _ints(fields[1:], lineno, "grading")
    if len(weights) != n:
        raise ParseError(f"grading has {len(weights)} entries, expected {n}", lineno)
    if any(a < 1 for a in weights):
        raise ParseError(f"grading entries must be positive, got {weights}", lineno)

    rows = []
    significance = None
    vectors = []
    vector_lines = []
    for lineno, fields in it:
        key = fields[0]
        if key == "weight:" and not vectors:
            row = _ints(fields[1:], lineno, "weight row")
            if len(row) != n:
                raise ParseError(f"weight row has {len(row)} entries, expected {n}", lineno)
            rows.append(tuple(row))
        elif key == "significance:" and not vectors and significance is None:
            perm = _ints(fields[1:], lineno, "significance")
            if sorted(perm) != list(range(1, n + 1)):
                raise ParseError(f"significance must be a permutation of 1..{n}", lineno)
            significance = tuple(p - 1 for p in perm)
        elif key.endswith(":"):
            raise ParseError(f"unexpected {key!r} line", lineno)
        else:
            v = _ints(fields, lineno, "vector")
            if len(v) != n:
                raise ParseError(f"vector has {len(v)} entries, expected {n}", lineno)
            vectors.append(tuple(v))
            vector_lines.append(lineno)
    if len(vectors) != m:
        raise ParseError(f"header declares {m} vector(s), found {len(vectors)}")

    grading = Grading(tuple(weights))
    bad = set(check_homogeneous(vectors, grading))
    if bad:
        first = next(k for k, v in zip(vector_lines, vectors) if v in bad)
        raise ParseError(f"{len(bad)} vector(s) not homogeneous for the grading", first)
    return ProblemFile(n, grading, rows, significance, vectors)


def render_vector_file(problem, generators=None, comment=None):
    """Canonical text of a problem file, optionally with other generators."""
    gens = problem.generators if generators is None else list(generators)
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{problem.n} {len(gens)}")
    out.append("grading: " + " ".join(map(str, problem.grading.weights)))
    for row in problem.weight_rows:
        out.append("weight: " + " ".join(map(str, row)))
    if tuple(problem.significance) != tuple(range(problem.n - 1, -1, -1)):
        out.append("significance: " + " ".join(str(p + 1) for p in problem.significance))
    for v in gens:
        out.append(" ".join(map(str, v)))
    return "\n".join(out) + "\n"


_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\S+?))?\s*$")


def _parse_term(text, index, n):
    text = text.strip()
    exps = [0] * n
    if text == "1":
        return exps
    if not text:
        raise ParseError("empty term")
    for part in text.split("*"):
        mt = _FACTOR.match(part)
        if not mt:
            raise ParseError(f"malformed factor {part.strip()!r}")
        name, exp = mt.groups()
        if name not in index:
            raise ParseError(f"unknown variable {name!r}")
        if exp is None:
            k = 1
        elif exp.isdigit() and int(exp) > 0:
            k = int(exp)
        else:
            raise ParseError(f"malformed exponent {exp!r} on {name}")
        exps[index[name]] += k
    return exps


def parse_terms(line, names):
    """The two monomials of ``term - term``, common factors allowed."""
    names = list(names)
    index = {name: i for i, name in enumerate(names)}
    parts = line.split("-")
    if len(parts) != 2:
        raise ParseError("a binomial must have the form 'term - term'"
                         if len(parts) == 1 else "more than one '-' in binomial")
    a = _parse_term(parts[0], index, len(names))
    b = _parse_term(parts[1], index, len(names))
    return tuple(a), tuple(b)


def parse_symbolic(line, names):
    """Exponent vector of the binomial ``line``, e.g. ``"x2^2 - x1*x3"``.

    The two terms must not share a variable.
    """
    names = list(names)
    a, b = parse_terms(line, names)
    shared = [names[i] for i in range(len(names)) if a[i] and b[i]]
    if shared:
        raise ParseError(f"terms share variable(s) {', '.join(shared)}")
    return tuple(x - y for x, y in zip(a, b))


def _render_term(m, names):
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def render_symbolic(v, names):
    """``x^{v+} - x^{v-}`` as text, factors in variable order."""
    if not any(v):
        raise ZeroVectorError("cannot render the zero vector")
    plus = [e if e > 0 else 0 for e in v]
    minus = [-e if e < 0 else 0 for e in v]
    return f"{_render_term(plus, names)} - {_render_term(minus, names)}"


def render_monomial(m, names):
    return _render_term(m, names)
