import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from complexes import example_k, fr
from weightedtorsion.chains import WeightPair
from weightedtorsion.complex import build_complex
from weightedtorsion.errors import (DuplicateVertex, InputError, UnknownVertex,
                                    UnsupportedVersion, WscSyntaxError)
from weightedtorsion.sampling import random_complex, random_weights
from weightedtorsion.wsc import parse_rational, parse_wsc, serialize_wsc


def test_single_vertex():
    K, w = parse_wsc("wsc v1\nvertex a f=1 g=1\nsimplex a")
    assert K.vertices == ("a",) and len(K) == 1
    assert w.f == fr(1) and w.g == fr(1)


def test_edge_weights():
    K, w = parse_wsc("wsc v1\nvertex a f=1/2 g=-3\nvertex b f=0 g=2\nsimplex a b")
    assert K.count(1) == 1
    assert w.f == fr("1/2", 0) and w.g == fr(-3, 2)


def test_comments_blank_lines_crlf():
    text = "# leading\r\n\r\nwsc v1  # trailing\r\nvertex a f=1 g=2 # note\r\nsimplex a\r\n"
    K, w = parse_wsc(text)
    assert w.g == fr(2)


def test_decimals_are_exact():
    assert parse_rational("0.1") == Fraction(1, 10)
    assert parse_rational("-2.50") == Fraction(-5, 2)
    for bad in ("1e3", "1/0", "1/-2", ".5", "nan", "inf", "1.", "+1"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@pytest.mark.parametrize("text, error, line", [
    ("wsc v1\nvertex a f=1 g=1\nsimplex a b", UnknownVertex, 3),
    ("wsc v2\n", UnsupportedVersion, 1),
    ("vertex a f=1 g=1\n", WscSyntaxError, 1),
    ("", WscSyntaxError, 1),
    ("wsc v1\nvertex a f=1 g=1\nvertex a f=1 g=1\n", DuplicateVertex, 3),
    ("wsc v1\nvertex a f=1 g=1\nsimplex a a\n", DuplicateVertex, 3),
    ("wsc v1\nvertex a f=1\n", WscSyntaxError, 2),
    ("wsc v1\nvertex a f=x g=1\n", WscSyntaxError, 2),
    ("wsc v1\nvertex 1a f=1 g=1\n", WscSyntaxError, 2),
    ("wsc v1\n\nfrobnicate\n", WscSyntaxError, 3),
    ("wsc v1\nsimplex\n", WscSyntaxError, 2),
    (b"wsc v1\n\xff\n", WscSyntaxError, None),
])
def test_errors_carry_lines(text, error, line):
    with pytest.raises(error) as info:
        parse_wsc(text)
    assert info.value.line == line
    if line is not None:
        assert f"line {line}" in str(info.value)


def test_column_reported():
    with pytest.raises(UnknownVertex) as info:
        parse_wsc("wsc v1\nvertex a f=1 g=1\nsimplex a zz")
    assert info.value.column == 11


def test_round_trip_example():
    K = example_k()
    w = WeightPair(fr(1, "1/2", -3, 0), fr(2, 0, "7/3", 1))
    K2, w2 = parse_wsc(serialize_wsc(K, w))
    assert K2 == K and w2 == w


def test_empty_complex_serializes_to_header():
    assert serialize_wsc(build_complex([], []), WeightPair((), ())) == "wsc v1\n"
    K, w = parse_wsc("wsc v1\n")
    assert len(K) == 0


@pytest.mark.parametrize("seed", range(30))
def test_round_trip_random(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    w = WeightPair(random_weights(rng, len(K.vertices)), random_weights(rng, len(K.vertices)))
    text = serialize_wsc(K, w)
    K2, w2 = parse_wsc(text)
    assert K2 == K and w2 == w
    assert serialize_wsc(K2, w2) == text


@given(st.text(alphabet="wsc v1vertexsimplexfg=/.-0123456789ab_#\n\r\t ", max_size=80))
@settings(max_examples=300, deadline=None)
def test_fuzz_only_input_errors(text):
    try:
        parse_wsc(text)
    except InputError:
        pass
