"""Exact sparse linear algebra over a :class:`~socle_lab.field.Field`.

Vectors are dicts ``{column: nonzero coefficient}``; columns may be any
mutually comparable hashable values (ints, monomial tuples, ...).
"""

from __future__ import annotations

from typing import Iterable


def _axpy(v: dict, c, row: dict, p: int) -> None:
    """v -= c * row, in place."""
    for col, r in row.items():
        x = v.get(col, 0) - c * r
        if p:
            x %= p
        if x:
            v[col] = x
        else:
            v.pop(col, None)


class Echelon:
    """A subspace kept in fully reduced row echelon form.

    Every stored row has coefficient 1 at its pivot and 0 at all other
    pivots, so the coordinates of a vector of the span are its entries at
    the pivot columns.  With ``track=True`` each row also remembers which
    combination of inserted vectors produced it, which is what
    :func:`kernel` needs.
    """

    def __init__(self, field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict = {}   # pivot -> row
        self.tags: dict = {}   # pivot -> combination of inserted vectors
        self._count = 0
        self.relation = None

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict, tag: dict | None = None):
        p = self.field.p
        v = dict(v)
        tag = dict(tag) if tag is not None else None
        for col in [c for c in v if c in self.rows]:
            c = v.get(col)
            if not c:
                continue
            _axpy(v, c, self.rows[col], p)
            if tag is not None:
                _axpy(tag, c, self.tags[col], p)
        return (v, tag) if self.track else v

    def add(self, v: dict):
        """Insert ``v``.

        Returns the new pivot, or ``None`` when ``v`` was dependent.  In
        tracking mode a dependent insert leaves the linear relation it
        witnessed in ``self.relation``.
        """
        self.relation = None
        idx = self._count
        self._count += 1
        if self.track:
            v, tag = self.reduce(v, {idx: self.field.one})
        else:
            v, tag = self.reduce(v), None
        if not v:
            self.relation = tag
            return None
        p = self.field.p
        pivot = min(v)
        inv = self.field.inv(v[pivot])
        if p:
            v = {k: x * inv % p for k, x in v.items()}
            if tag is not None:
                tag = {k: x * inv % p for k, x in tag.items()}
        else:
            v = {k: x * inv for k, x in v.items()}
            if tag is not None:
                tag = {k: x * inv for k, x in tag.items()}
        for piv, row in self.rows.items():
            c = row.get(pivot)
            if c:
                _axpy(row, c, v, p)
                if tag is not None:
                    _axpy(self.tags[piv], c, tag, p)
        self.rows[pivot] = v
        if tag is not None:
            self.tags[pivot] = tag
        return pivot

    def contains(self, v: dict) -> bool:
        out = self.reduce(v)
        return not (out[0] if self.track else out)

    def coordinates(self, v: dict) -> dict:
        """Coordinates of ``v`` (assumed in the span) keyed by pivot."""
        return {piv: v[piv] for piv in self.rows if v.get(piv)}

    def basis(self) -> list[dict]:
        return [self.rows[piv] for piv in sorted(self.rows)]


def rank(vectors: Iterable[dict], field) -> int:
    e = Echelon(field)
    for v in vectors:
        e.add(v)
    return e.rank


def kernel(columns: list[dict], field) -> list[dict]:
    """Basis of ``{c : sum_j c[j] * columns[j] = 0}`` as dicts keyed by j."""
    e = Echelon(field, track=True)
    out = []
    for col in columns:
        if e.add(col) is None:
            out.append(e.relation)
    return out


def span_intersection_dim(a: list[dict], b: list[dict], field) -> int:
    """dim(span a ∩ span b) = dim a + dim b - dim(a + b)."""
    return rank(a, field) + rank(b, field) - rank(list(a) + list(b), field)
