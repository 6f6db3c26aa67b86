"""Vectors, small matrices, and subspaces of F^4 over a finite field.

Vectors are 4-tuples of canonical field indices and matrices are nested
lists/tuples of them.  Subspaces carry a reduced-row-echelon basis, so two
subspaces are equal exactly when their Subspace values are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from .gf import Field

Vec4 = tuple[int, int, int, int]


class SizeUnsupported(ValueError):
    """Determinants are implemented for 2x2 and 3x3 matrices only."""


def vec_add(field: Field, u, v) -> Vec4:
    add = field.add
    return (add(u[0], v[0]), add(u[1], v[1]), add(u[2], v[2]), add(u[3], v[3]))


def vec_scale(field: Field, c: int, v) -> Vec4:
    mul = field.mul
    return (mul(c, v[0]), mul(c, v[1]), mul(c, v[2]), mul(c, v[3]))


def mat_sub(field: Field, a, b):
    """Entrywise difference of two equal-shaped matrices."""
    return tuple(
        tuple(field.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def det(field: Field, m) -> int:
    """Determinant of a square 2x2 or 3x3 matrix, by cofactor expansion."""
    n = len(m)
    if any(len(row) != n for row in m) or n not in (2, 3):
        raise SizeUnsupported("determinant supports square matrices of size 2 or 3")
    mul, sub = field.mul, field.sub
    if n == 2:
        return sub(mul(m[0][0], m[1][1]), mul(m[0][1], m[1][0]))
    c0 = sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1]))
    c1 = sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0]))
    c2 = sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0]))
    return sub(field.add(mul(m[0][0], c0), mul(m[0][2], c2)), mul(m[0][1], c1))


def _pivot(row) -> int:
    for i, x in enumerate(row):
        if x:
            return i
    return -1


def rref(field: Field, rows) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon basis of the span of the given row vectors."""
    sub, mul, inv = field.sub, field.mul, field.inv
    basis: list[list[int]] = []
    for vec in rows:
        v = list(vec)
        for b in basis:
            f = v[_pivot(b)]
            if f:
                v = [sub(x, mul(f, y)) for x, y in zip(v, b)]
        piv = _pivot(v)
        if piv < 0:
            continue
        c = inv(v[piv])
        v = [mul(c, x) for x in v]
        for b in basis:
            f = b[piv]
            if f:
                b[:] = [sub(x, mul(f, y)) for x, y in zip(b, v)]
        basis.append(v)
    basis.sort(key=_pivot)
    return tuple(tuple(b) for b in basis)


def rank(field: Field, rows) -> int:
    return len(rref(field, rows))


def nullspace(field: Field, rows, ncols: int) -> list[tuple[int, ...]]:
    """Basis of the right nullspace of the matrix with the given rows."""
    reduced = rref(field, rows)
    pivots = [_pivot(r) for r in reduced]
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, piv in zip(reduced, pivots):
            v[piv] = field.neg(row[free])
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^4 in canonical (RREF) basis form."""

    field: Field
    basis: tuple[Vec4, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        sub, mul = self.field.sub, self.field.mul
        w = list(v)
        for b in self.basis:
            f = w[_pivot(b)]
            if f:
                w = [sub(x, mul(f, y)) for x, y in zip(w, b)]
        return not any(w)


def subspace_from(field: Field, vectors) -> Subspace:
    return Subspace(field, rref(field, vectors))


def span_elements(sub: Subspace) -> list[Vec4]:
    """All q**dim vectors of the subspace."""
    field = sub.field
    vecs: list[Vec4] = [(0, 0, 0, 0)]
    for b in sub.basis:
        scaled = [vec_scale(field, c, b) for c in range(field.q)]
        vecs = [vec_add(field, v, s) for v in vecs for s in scaled]
    return vecs


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return subspace_from(a.field, a.basis + b.basis)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, via the nullspace of the stacked coefficient system."""
    field = a.field
    if field != b.field:
        raise ValueError("subspaces lie over different fields")
    if a.dim == 0 or b.dim == 0:
        return subspace_from(field, [])
    # Columns are a's basis followed by b's negated basis; nullspace vectors
    # give coefficient pairs (x, y) with x*A = y*B.
    stacked = [
        tuple(col[i] for col in a.basis) + tuple(field.neg(col[i]) for col in b.basis)
        for i in range(4)
    ]
    vecs = []
    for z in nullspace(field, stacked, a.dim + b.dim):
        w: Vec4 = (0, 0, 0, 0)
        for coef, bas in zip(z[: a.dim], a.basis):
            w = vec_add(field, w, vec_scale(field, coef, bas))
        vecs.append(w)
    return subspace_from(field, vecs)


def trivial_intersection(a: Subspace, b: Subspace) -> bool:
    if a.field != b.field:
        raise ValueError("subspaces lie over different fields")
    return rank(a.field, a.basis + b.basis) == a.dim + b.dim


def pack(q: int, v) -> int:
    return ((v[0] * q + v[1]) * q + v[2]) * q + v[3]


def unpack(q: int, m: int) -> Vec4:
    m, x4 = divmod(m, q)
    m, x3 = divmod(m, q)
    x1, x2 = divmod(m, q)
    return (x1, x2, x3, x4)


def coset_index_map(sub: Subspace) -> tuple[list[Vec4], list[int]]:
    """Minimal coset representatives plus a packed-vector -> coset-id table.

    Representatives come out in increasing lexicographic order of their
    canonical index tuples, and ids follow that order.
    """
    field = sub.field
    q = field.q
    total = q**4
    members = span_elements(sub)
    ids = [-1] * total
    reps: list[Vec4] = []
    add = field.add
    for m in range(total):
        if ids[m] >= 0:
            continue
        v = unpack(q, m)
        cid = len(reps)
        reps.append(v)
        for w in members:
            ids[pack(q, (add(v[0], w[0]), add(v[1], w[1]), add(v[2], w[2]), add(v[3], w[3])))] = cid
    return reps, ids


def cosets(sub: Subspace) -> list[Vec4]:
    """Lexicographically minimal representative of every coset, sorted."""
    return coset_index_map(sub)[0]


def subspace_to_text(sub: Subspace) -> str:
    """One basis vector per line as space-separated canonical indices."""
    return "\n".join(" ".join(str(x) for x in row) for row in sub.basis)
