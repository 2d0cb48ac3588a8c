"""Line-oriented ring description files.

::

    # comment
    field prime 32003        (or: field rational)
    vars x y w
    relations x^2*w, w^2
    ideal Q = x^3, y^3
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .field import Field
from .poly import PolynomialParseError, parse_polys
from .ring import RingPresentation

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingSpecError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")


@dataclass
class RingSpec:
    ring: RingPresentation
    ideals: dict = dc_field(default_factory=dict)
    digest: str = ""
    text: str = ""

    def ideal(self, name: str) -> list:
        if name not in self.ideals:
            raise KeyError(f"no ideal named {name!r} (have: {', '.join(self.ideals) or 'none'})")
        return self.ideals[name]


def _parse_list(text: str, start: int, lineno: int, ring) -> list:
    lead = len(text) - len(text.lstrip())
    try:
        return parse_polys(text, ring)
    except PolynomialParseError as e:
        col = start + lead + (e.pos or 0) + 1
        raise RingSpecError(str(e).rsplit(" (column", 1)[0], lineno, col) from None


def parse_ring_spec(source: str | Path) -> RingSpec:
    """Parse a ring-spec given as a path or as the file's text."""
    if isinstance(source, Path) or ("\n" not in source and Path(source).is_file()):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source
    fld = None
    names = None
    relations = []     # (text, col, lineno)
    ideals = []        # (name, text, col, lineno)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        word, _, rest = body.partition(" ")
        rest_col = indent + len(word) + 1
        if word == "field":
            if fld is not None:
                raise RingSpecError("field declared twice", lineno, indent + 1)
            parts = rest.split()
            if parts == ["rational"]:
                fld = Field.rationals()
            elif len(parts) == 2 and parts[0] == "prime":
                try:
                    fld = Field.prime(int(parts[1]))
                except ValueError as e:
                    raise RingSpecError(f"bad characteristic: {e}", lineno, rest_col + 1) from None
            else:
                raise RingSpecError(f"unknown field {rest.strip()!r}", lineno, rest_col + 1)
        elif word == "vars":
            if names is not None:
                raise RingSpecError("vars declared twice", lineno, indent + 1)
            names = rest.replace(",", " ").split()
            if not names:
                raise RingSpecError("empty variable list", lineno, rest_col)
            for v in names:
                if not _NAME.match(v):
                    raise RingSpecError(f"bad variable name {v!r}", lineno,
                                        line.index(v, rest_col) + 1)
            if len(set(names)) != len(names):
                raise RingSpecError("duplicate variable", lineno, rest_col + 1)
        elif word == "relations":
            relations.append((rest, rest_col, lineno))
        elif word == "ideal":
            name, eq, gens = rest.partition("=")
            name = name.strip()
            if not eq or not _NAME.match(name):
                raise RingSpecError("expected 'ideal NAME = generators'", lineno, rest_col + 1)
            ideals.append((name, gens, rest_col + len(rest.split("=")[0]) + 1, lineno))
        else:
            raise RingSpecError(f"unknown keyword {word!r}", lineno, indent + 1)
    if names is None:
        raise RingSpecError("missing 'vars' line", max(1, len(text.splitlines())))
    fld = fld or Field.prime()
    ring = RingPresentation(fld, names)
    rels = []
    for t, col, ln in relations:
        rels.extend(_parse_list(t, col, ln, ring))
    ring = RingPresentation(fld, names, rels)
    named = {}
    for name, t, col, ln in ideals:
        if name in named:
            raise RingSpecError(f"ideal {name} defined twice", ln)
        named[name] = _parse_list(t, col, ln, ring)
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return RingSpec(ring, named, digest, text)
