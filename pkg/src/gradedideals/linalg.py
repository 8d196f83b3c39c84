"""Exact sparse linear algebra over a coefficient field (raw values).

Vectors are dicts ``{index: raw coefficient}`` with nonzero entries only.
"""

from __future__ import annotations


class EchelonSpace:
    """Incrementally maintained reduced row echelon basis of a subspace."""

    def __init__(self, field):
        self.field = field
        self.rows: dict = {}  # pivot index -> row with row[pivot] == 1

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        F = self.field
        v = dict(v)
        for k in [k for k in v if k in self.rows]:
            c = v.get(k)
            if not c:
                continue
            for j, a in self.rows[k].items():
                w = F.sub(v.get(j, F.zero), F.mul(c, a))
                if w:
                    v[j] = w
                else:
                    v.pop(j, None)
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def insert(self, v: dict) -> bool:
        """Add ``v``; returns False if it was already in the span."""
        F = self.field
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = F.inv(r[p])
        r = {j: F.mul(a, inv) for j, a in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for j, a in r.items():
                    w = F.sub(row.get(j, F.zero), F.mul(c, a))
                    if w:
                        row[j] = w
                    else:
                        row.pop(j, None)
        self.rows[p] = r
        return True


def rank(rows, field) -> int:
    space = EchelonSpace(field)
    for r in rows:
        space.insert(r)
    return len(space)


def nullspace(rows, ncols: int, field) -> list:
    """Basis of {x : row . x = 0 for every row}, as dicts; one vector per free column."""
    F = field
    space = EchelonSpace(F)
    for r in rows:
        space.insert(r)
    pivots = space.rows
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: F.one}
        for p, row in pivots.items():
            c = row.get(free)
            if c:
                vec[p] = F.neg(c)
        basis.append(vec)
    return basis
