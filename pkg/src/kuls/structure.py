"""Multiplication of elements and the classical subspaces of a
finite-dimensional algebra: radical, socle, center, commutator span.

Elements are coordinate vectors over the table's monomial basis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvariantViolation, NotNilpotent
from .linalg import Subspace, contains, kernel, row_space, zero_subspace
from .rewriting import AlgebraTable

__all__ = [
    "multiply",
    "power",
    "left_mult_matrix",
    "right_mult_matrix",
    "radical",
    "Socle",
    "socle",
    "center",
    "commutator_space",
]


def _as_vec(at: AlgebraTable, x) -> np.ndarray:
    v = np.asarray(x, dtype=np.int64)
    if v.shape != (at.dim,):
        raise DimensionMismatch(f"element has shape {v.shape}, expected ({at.dim},)")
    return v


def multiply(at: AlgebraTable, x, y) -> np.ndarray:
    """Product of two coordinate vectors."""
    gf, d = at.gf, at.dim
    x = _as_vec(at, x)
    y = _as_vec(at, y)
    m = gf.matmul(x.reshape(1, d), at.table.reshape(d, d * d)).reshape(d, d)
    return gf.matmul(y.reshape(1, d), m).reshape(d)


def power(at: AlgebraTable, x, k: int) -> np.ndarray:
    """k-th power by binary exponentiation; x**0 is the unit."""
    if k < 0:
        raise ValueError("negative powers are undefined here")
    acc = at.unit.copy()
    base = _as_vec(at, x)
    while k:
        if k & 1:
            acc = multiply(at, acc, base)
        base_next = multiply(at, base, base) if k > 1 else base
        base = base_next
        k >>= 1
    return acc


def left_mult_matrix(at: AlgebraTable, x) -> np.ndarray:
    """Matrix of y -> x*y acting on row coordinate vectors: (x*b_j)_l."""
    d = at.dim
    x = _as_vec(at, x)
    return at.gf.matmul(x.reshape(1, d), at.table.reshape(d, d * d)).reshape(d, d)


def right_mult_matrix(at: AlgebraTable, x) -> np.ndarray:
    """Matrix of y -> y*x: rows are (b_i*x)_l."""
    d = at.dim
    x = _as_vec(at, x)
    m = at.table.transpose(1, 0, 2).reshape(d, d * d)  # [j, i*d + l]
    return at.gf.matmul(x.reshape(1, d), m).reshape(d, d)


def radical(at: AlgebraTable) -> Subspace:
    """Span of the non-trivial basis words, verified nilpotent.

    Nilpotency is checked on the spans T_k of length-k path images:
    T_(k+1) = T_k * arrows, and rad**m = sum of T_k for k >= m, so the
    radical is nilpotent iff some T_k (k <= dim) vanishes.
    """
    d = at.dim
    eye = np.eye(d, dtype=np.int64)
    rad = row_space(at.gf, eye[at.lengths() >= 1], d)
    arrow_idx = [at.index[w] for w in at.basis if len(w.arrows) == 1]
    t = row_space(at.gf, eye[at.lengths() == 1], d)
    steps = 1
    while t.dim:
        if steps > d:
            raise NotNilpotent("arrow products never die out; the relations are not admissible")
        prods = [multiply(at, v, eye[a]) for v in t.basis for a in arrow_idx]
        t = row_space(at.gf, np.array(prods).reshape(-1, d), d)
        steps += 1
    return rad


@dataclass(frozen=True)
class Socle:
    right: Subspace
    left: Subspace

    @property
    def two_sided_equal(self) -> bool:
        return self.right == self.left


def socle(at: AlgebraTable) -> Socle:
    """Right and left socles: annihilators of the arrows on each side."""
    d = at.dim
    arrow_idx = [at.index[w] for w in at.basis if len(w.arrows) == 1]
    if not arrow_idx:
        full = row_space(at.gf, np.eye(d, dtype=np.int64), d)
        return Socle(full, full)
    right_cons = np.hstack([at.table[:, a, :] for a in arrow_idx])  # x @ C[:,a,:] = coords(x*b_a)
    left_cons = np.hstack([at.table[a, :, :] for a in arrow_idx])   # x @ C[a,:,:] = coords(b_a*x)
    return Socle(kernel(at.gf, right_cons.T), kernel(at.gf, left_cons.T))


def center(at: AlgebraTable) -> Subspace:
    """Elements commuting with every trivial path and arrow (hence with all of A)."""
    d = at.dim
    gens = list(at.trivial_indices) + [at.index[w] for w in at.basis if len(w.arrows) == 1]
    blocks = [at.gf.sub(at.table[:, g, :], at.table[g, :, :]) for g in gens]
    z = kernel(at.gf, np.hstack(blocks).T) if blocks else row_space(
        at.gf, np.eye(d, dtype=np.int64), d)
    if not contains(z, at.unit):
        raise InvariantViolation("center does not contain the unit")
    return z


def commutator_space(at: AlgebraTable) -> Subspace:
    """Span of all commutators of basis elements, K(A)."""
    d = at.dim
    diffs = at.gf.sub(at.table, at.table.transpose(1, 0, 2)).reshape(d * d, d)
    return row_space(at.gf, diffs, d)
