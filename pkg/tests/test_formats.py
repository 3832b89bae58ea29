import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticegb.algebra import Grading, TermOrder, orient
from latticegb.engine import CompletedGB, buchberger
from latticegb.errors import ParseError, ZeroVectorError
from latticegb.formats import (
    ProblemFile,
    default_names,
    parse_symbolic,
    parse_terms,
    parse_vector_file,
    render_symbolic,
    render_vector_file,
)
from suite import EX_GRADING, EX_NAMES, EX_ORDER, RUN1

RUN1_TEXT = "3 2\ngrading: 3 4 5\n-1 2 -1\n-4 3 0\n"


class TestParseVectorFile:
    def test_example(self):
        p = parse_vector_file(RUN1_TEXT)
        assert p.n == 3
        assert p.grading == EX_GRADING
        assert p.generators == [(-1, 2, -1), (-4, 3, 0)]
        assert p.order == EX_ORDER
        # the same binomials as the run-1 input, up to sign
        assert sorted(orient(v, EX_GRADING, EX_ORDER).vector for v in p.generators) == \
            sorted(orient(v, EX_GRADING, EX_ORDER).vector for v in RUN1)

    def test_default_significance_makes_last_variable_largest(self):
        p = parse_vector_file(RUN1_TEXT)
        assert p.significance == (2, 1, 0)
        assert p.order == TermOrder.revlex(3)
        g = Grading((1, 1, 1))
        assert orient((1, 0, -1), g, p.order).plus == (0, 0, 1)
        assert orient((1, -1, 0), g, p.order).plus == (0, 1, 0)

    def test_comments_tabs_and_options(self):
        text = ("# a comment\n\n2\t1\n  grading:\t1   1\n"
                "weight: -1 0\nweight: 0 1\nsignificance: 1 2\n# inner\n1\t-1\n")
        p = parse_vector_file(text)
        assert p.weight_rows == [(-1, 0), (0, 1)]
        assert p.significance == (0, 1)
        assert p.generators == [(1, -1)]

    def test_significance_before_weight(self):
        p = parse_vector_file("2 0\ngrading: 1 1\nsignificance: 2 1\nweight: 1 0\n")
        assert p.weight_rows == [(1, 0)] and p.significance == (1, 0)

    def test_empty_generators(self):
        p = parse_vector_file("3 0\ngrading: 3 4 5\n")
        assert p.generators == []
        out, _ = buchberger(p.generators, p.grading, p.order)
        assert out == CompletedGB(())

    def test_zero_and_duplicates_accepted(self):
        p = parse_vector_file("2 3\ngrading: 1 1\n0 0\n1 -1\n1 -1\n")
        assert len(p.generators) == 3

    @pytest.mark.parametrize("text, line", [
        ("3 2\ngrading: 3 4 5\n-1 2 x\n-4 3 0\n", 3),
        ("3 2\ngrading: 3 4 5\n-1 2\n-4 3 0\n", 3),
        ("3 1\ngrading: 3 0 5\n-1 2 -1\n", 2),
        ("3 1\ngrading: 3 4\n-1 2 -1\n", 2),
        ("3 1\ngrading: 3 4 5\nsignificance: 1 1 2\n-1 2 -1\n", 3),
        ("3 1\ngrading: 3 4 5\n# c\nweight: 1 2\n-1 2 -1\n", 4),
        ("3\ngrading: 3 4 5\n", 1),
        ("3 1\n\nweight: 1 1 1\n", 3),
        ("3 2\ngrading: 3 4 5\n-1 2 -1\n1 0 0\n", 4),
        ("2 1\ngrading: 1 1\n1 -1\nweight: 1 0\n", 4),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_vector_file(text)
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value)

    def test_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_vector_file("3 3\ngrading: 3 4 5\n-1 2 -1\n")

    def test_empty_file(self):
        with pytest.raises(ParseError):
            parse_vector_file("# nothing\n")

    def test_large_file_count(self):
        rng = random.Random(1)
        m = 145512
        lines = ["64 %d" % m, "grading: " + " ".join(["1"] * 64), "weight: -1" + " 0" * 63]
        row = [0] * 64
        for _ in range(m):
            i, j = rng.sample(range(64), 2)
            row[i], row[j] = 1, -1
            lines.append(" ".join(map(str, row)))
            row[i] = row[j] = 0
        p = parse_vector_file("\n".join(lines))
        assert p.n == 64 and len(p.generators) == m


class TestRoundTrip:
    def test_example(self):
        p = parse_vector_file(RUN1_TEXT)
        assert render_vector_file(p) == RUN1_TEXT

    def test_with_options_and_comment(self):
        p = ProblemFile(3, Grading((1, 2, 3)), [(0, 0, -1)], (0, 2, 1), [(2, -1, 0)])
        text = render_vector_file(p, comment="generated")
        assert text.startswith("# generated\n")
        q = parse_vector_file(text)
        assert q == p

    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(
        st.lists(st.integers(1, 5), min_size=n, max_size=n),
        st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), max_size=2),
        st.permutations(range(n)),
        st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), max_size=4))))
    def test_property(self, data):
        weights, rows, sig, vs = data
        g = Grading(tuple(weights))
        gens = [tuple(v) for v in vs if g(v) == 0]
        p = ProblemFile(len(weights), g, [tuple(r) for r in rows], tuple(sig), gens)
        assert parse_vector_file(render_vector_file(p)) == p


class TestSymbolic:
    def test_example(self):
        assert parse_symbolic("x2^2 - x1*x3", default_names(3)) == (-1, 2, -1)

    def test_accumulate(self):
        assert parse_symbolic("x1^3*x2 - x3^2*x4^2", default_names(4)) == (3, 1, -2, -2)
        assert parse_symbolic("x1*x1 - x2^2", default_names(2)) == (2, -2)

    def test_constant_term(self):
        assert parse_symbolic("x1 - 1", default_names(2)) == (1, 0)

    @pytest.mark.parametrize("line", [
        "x1 - x1", "x1*x2 - x2^3", "x1 + x2", "x1 - x9", "x1^0 - x2", "x1^-1 - x2",
        "x1^a - x2", "x1 - x2 - x3", " - x2", "x1 * - x2",
    ])
    def test_errors(self, line):
        with pytest.raises(ParseError):
            parse_symbolic(line, default_names(3))

    def test_terms_may_share_support(self):
        assert parse_terms("x^2*y^2 - x^3*z", EX_NAMES) == ((2, 2, 0), (3, 0, 1))

    def test_render(self):
        assert render_symbolic((-3, 1, 1), EX_NAMES) == "y*z - x^3"
        assert render_symbolic((1, 0, -1), EX_NAMES) == "x - z"
        assert render_symbolic((0, 0, 2), EX_NAMES) == "z^2 - 1"

    def test_render_follows_orientation(self):
        v = (0, 2, -1)
        assert render_symbolic(v, EX_NAMES) == "y^2 - z"
        assert render_symbolic(tuple(-e for e in v), EX_NAMES) == "z - y^2"
        # y^2 (degree 8) and z (degree 5): the oriented form keeps y^2 first
        assert render_symbolic(orient(v, EX_GRADING, EX_ORDER).vector, EX_NAMES) == "y^2 - z"

    def test_render_zero(self):
        with pytest.raises(ZeroVectorError):
            render_symbolic((0, 0, 0), EX_NAMES)

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6).filter(any))
    def test_round_trip(self, v):
        names = default_names(len(v))
        assert parse_symbolic(render_symbolic(tuple(v), names), names) == tuple(v)
