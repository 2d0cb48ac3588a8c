from pathlib import Path

import pytest

from socle_lab.ringspec import RingSpecError, parse_ring_spec

RINGS = Path(__file__).resolve().parent.parent / "rings"


def test_example_spec():
    spec = parse_ring_spec(RINGS / "example_d2.ring")
    assert spec.ring.names == ("x", "y", "w")
    assert spec.ring.dimension() == 2
    assert str(spec.ring.field) == "GF(32003)"
    assert [str(g) for g in spec.ideal("Q")] == ["x^3", "y^3"]
    assert len(spec.digest) == 64


def test_buchsbaum_spec():
    spec = parse_ring_spec(RINGS / "buchsbaum.ring")
    assert spec.ring.dimension() == 2 and len(spec.ring.relations) == 4


def test_text_input_and_defaults():
    spec = parse_ring_spec("vars a b  # comment\nrelations a*b\nrelations a^3\n")
    assert spec.ring.field.p == 32003 and len(spec.ring.relations) == 2
    assert parse_ring_spec("field rational\nvars t\n").ring.field.p == 0


def test_digest_is_content_hash():
    a = parse_ring_spec("vars x\n")
    assert a.digest == parse_ring_spec("vars x\n").digest != parse_ring_spec("vars y\n").digest


@pytest.mark.parametrize("text, line, col", [
    ("vars x y\nrelations x*z", 2, 13),
    ("field prime 12\nvars x", 1, 7),
    ("field complex\nvars x", 1, 7),
    ("vars x\nfoo bar", 2, 1),
    ("vars x\nideal Q = x+*2", 2, 13),
    ("vars x\nideal = x", 2, 7),
    ("vars x x", 1, 6),
    ("vars x 2y", 1, 8),
    ("relations x", 1, 1),
])
def test_errors(text, line, col):
    with pytest.raises(RingSpecError) as e:
        parse_ring_spec(text)
    assert (e.value.line, e.value.col) == (line, col)


def test_unknown_ideal_name():
    spec = parse_ring_spec("vars x\nideal Q = x\n")
    with pytest.raises(KeyError):
        spec.ideal("P")
