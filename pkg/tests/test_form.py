"""Symmetrizing forms: construction, validation, orthogonal complements."""
from __future__ import annotations

import numpy as np
import pytest

from conftest import make_table
from kuls import (
    build_table,
    canonical_form,
    center,
    commutator_space,
    complete,
    consistent_form,
    custom_form,
    orthogonal,
    parse_presentation,
    socle,
)
from kuls.errors import BadParameters, Degenerate, DimensionMismatch, NotSymmetric
from kuls.linalg import contains, full_space, intersect, zero_subspace
from kuls.structure import multiply


def test_canonical_form_on_omega2():
    at = make_table("Omega", n=2)
    f = canonical_form(at)
    assert f.psi.tolist() == [0, 0, 0, 0, 0, 1, 0, 0, 0, 1]  # a1*a1 and b2*a1*b1
    assert np.array_equal(f.gram, f.gram.T)
    assert f.gram[0, at.index[at.quiver.word("a1", "a1")]] == 1  # (e_c, a1*a1)


def test_form_is_associative_and_vanishes_on_commutators():
    at = make_table("Omega", n=2)
    f = canonical_form(at)
    gf = at.gf
    rng = np.random.default_rng(3)
    for _ in range(12):
        x, y, z = rng.integers(0, gf.q, size=(3, at.dim)).astype(np.int64)
        assert f.pair(x, y) == f.pair(y, x)
        assert f.pair(multiply(at, x, y), z) == f.pair(x, multiply(at, y, z))
        lie = gf.sub(multiply(at, x, y), multiply(at, y, x))
        assert f.pair(at.unit, lie) == 0  # psi kills commutators
    k = commutator_space(at)
    psi_on_k = gf.matmul(k.basis, f.psi.reshape(-1, 1))
    assert not np.any(psi_on_k)


def test_orthogonal_complements():
    at = make_table("Omega", n=2)
    f = canonical_form(at)
    z = center(at)
    k = commutator_space(at)
    assert orthogonal(f, k) == z  # K(A)^perp = Z(A) for symmetric algebras
    assert orthogonal(f, z) == k
    assert z.dim + k.dim == at.dim
    for s in (z, k, socle(at).right):
        assert orthogonal(f, orthogonal(f, s)) == s
        assert orthogonal(f, s).dim == at.dim - s.dim
    assert orthogonal(f, zero_subspace(at.gf, at.dim)) == full_space(at.gf, at.dim)
    assert orthogonal(f, full_space(at.gf, at.dim)).dim == 0
    with pytest.raises(DimensionMismatch):
        orthogonal(f, zero_subspace(at.gf, 3))


def test_socle_pairs_nondegenerately_with_the_top():
    at = make_table("A", p=1, q=2)
    f = canonical_form(at)
    s = socle(at).right
    # soc^perp has codimension dim soc, and soc pairs to zero with the radical square
    assert orthogonal(f, s).dim == at.dim - s.dim


def test_not_symmetric_witness_over_gf3():
    at = make_table("Omega", gf=(3, 1), n=1)
    with pytest.raises(NotSymmetric) as err:
        canonical_form(at)
    assert "(a1, b1) = 1 but (b1, a1) = 2" in str(err.value)
    i, j = err.value.witness
    assert {at.word_name(i), at.word_name(j)} == {"a1", "b1"}
    with pytest.raises(NotSymmetric) as err2:
        consistent_form(at)  # infeasible: no symmetrizing form exists at all
    assert "no symmetrizing form" in str(err2.value)


def test_consistent_form_rescues_twisted_loop_algebra():
    at = make_table("D", m=2)
    with pytest.raises(NotSymmetric):
        canonical_form(at)  # a commutator ties a1*a1 to the socle word b2*b1
    f = consistent_form(at)
    support = {at.word_name(i) for i, c in enumerate(f.psi) if c}
    assert support == {"a1*a1", "b2*b1", "a1*a1*a1"}
    k = commutator_space(at)
    assert not np.any(at.gf.matmul(k.basis, f.psi.reshape(-1, 1)))
    assert orthogonal(f, k) == center(at)


def test_consistent_form_matches_canonical_when_both_exist():
    at = make_table("Omega", n=2)
    assert consistent_form(at).psi.tolist() == canonical_form(at).psi.tolist()


def test_custom_form_paths():
    at = make_table("D", m=2)
    f = custom_form(at, {"a1*a1": 1, "b2*b1": 1, "a1*a1*a1": 1})
    assert f.psi.tolist() == consistent_form(at).psi.tolist()
    by_word = custom_form(at, {at.quiver.word("a1", "a1"): 1,
                               at.quiver.word("b2", "b1"): 1,
                               at.quiver.word("a1", "a1", "a1"): 1})
    assert by_word.psi.tolist() == f.psi.tolist()
    with pytest.raises(BadParameters):
        custom_form(at, {"zz": 1})
    with pytest.raises(BadParameters):
        custom_form(at, {at.quiver.word("b1", "b2"): 1})  # reduces to a1*a1, not a basis word
    with pytest.raises(BadParameters):
        custom_form(at, {"a1*a1": 2})  # 2 = 0 over GF(2)
    with pytest.raises(NotSymmetric):
        custom_form(at, {"a1*a1*a1": 1})  # canonical psi, known asymmetric here
    gf4 = make_table("Omega", gf=(2, 2), n=2)
    with pytest.raises(BadParameters):
        custom_form(gf4, {"a1*a1": 7, "b2*a1*b1": 1})  # 7 is not an encoded element


def test_degenerate_forms_are_rejected():
    square_zero = build_table(complete(parse_presentation(
        "algebra sz over GF(2) {\n  vertices v;\n"
        "  arrows { a: v -> v; b: v -> v; }\n"
        "  relations { a*a; a*b; b*a; b*b; }\n}\n")))
    with pytest.raises(Degenerate) as err:
        canonical_form(square_zero)  # gram rows of a and b coincide
    assert err.value.kernel_vector is not None
    dual = build_table(complete(parse_presentation(
        "algebra k2 over GF(2) {\n  vertices v;\n  arrows { a: v -> v; }\n"
        "  relations { a*a; }\n}\n")))
    with pytest.raises(Degenerate):
        custom_form(dual, {"e_v": 1})  # psi supported off the socle
    f = canonical_form(dual)  # psi(a) = 1 works: gram [[0,1],[1,0]]
    assert f.gram.tolist() == [[0, 1], [1, 0]]
