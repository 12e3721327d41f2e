"""Bound quiver algebra construction: basis dimensions frozen by hand
path-counting, multiplication identities, the opposite algebra."""

import numpy as np
import pytest

from tautilt.algebra import Arrow, Quiver, RadicalPower, Relation, build_algebra
from tautilt.errors import MixedEndpointsError, NonAdmissibleError
from tautilt.field import PrimeField


def test_dimensions_by_path_count(nak6, nak4, prep3, a2, one_vertex):
    # cyclic n-cycle mod R^L has n*L basis paths
    assert nak6.dim == 24
    assert nak4.dim == 12
    # preprojective A3: per-vertex projective dims 3, 4, 3
    assert prep3.dim == 10
    # A2: e1, e2, a
    assert a2.dim == 3
    assert one_vertex.dim == 1


def test_basis_labels(nak6):
    labels = [nak6.label(k) for k in range(nak6.dim)]
    assert "e_1" in labels
    assert "a1" in labels
    assert "a1*a2*a3" in labels
    assert "a1*a2*a3*a4" not in labels  # killed by radical^4


def test_multiplication_assoc_and_truncation(nak6):
    a1 = nak6.arrow_element("a1")
    a2 = nak6.arrow_element("a2")
    a3 = nak6.arrow_element("a3")
    a4 = nak6.arrow_element("a4")
    left = nak6.multiply(nak6.multiply(a1, a2), a3)
    right = nak6.multiply(a1, nak6.multiply(a2, a3))
    assert (left == right).all()
    assert left.any()
    assert not nak6.multiply(left, a4).any()  # length four vanishes


def test_trivial_paths_are_idempotents(nak4):
    for v in range(1, 5):
        ev = nak4.trivial_path(v)
        assert (nak4.multiply(ev, ev) == ev).all()
    total = sum(nak4.trivial_path(v) for v in range(1, 5)) % nak4.field.p
    a1 = nak4.arrow_element("a1")
    assert (nak4.multiply(total, a1) == a1).all()
    assert (nak4.multiply(a1, total) == a1).all()


def test_mesh_relation_holds(prep3):
    astar_a = prep3.multiply(prep3.arrow_element("astar"), prep3.arrow_element("a"))
    b_bstar = prep3.multiply(prep3.arrow_element("b"), prep3.arrow_element("bstar"))
    assert astar_a.any()
    assert (astar_a == b_bstar).all()
    aa = prep3.multiply(prep3.arrow_element("a"), prep3.arrow_element("astar"))
    assert not aa.any()


def test_opposite_involution(nak6):
    op = nak6.opposite()
    assert op.dim == nak6.dim
    assert op.opposite() is nak6
    # the anti-isomorphism reverses products
    a1 = nak6.arrow_element("a1")
    a2 = nak6.arrow_element("a2")
    lhs = nak6.op_element(nak6.multiply(a1, a2))
    rhs = op.multiply(nak6.op_element(a2), nak6.op_element(a1))
    assert (lhs == rhs).all()


def test_op_element_is_linear_involution(nak4, rng):
    op = nak4.opposite()
    x = rng.integers(0, nak4.field.p, size=nak4.dim)
    back = op.op_element(nak4.op_element(x))
    assert (back == x % nak4.field.p).all()


def test_slice_indices_partition(prep3):
    seen = []
    for i in range(1, 4):
        for j in range(1, 4):
            seen.extend(prep3.slice_indices(i, j))
    assert sorted(seen) == list(range(prep3.dim))


def test_nonadmissible_rejected():
    q = Quiver(1, [Arrow("x", 1, 1)])
    with pytest.raises(NonAdmissibleError):
        build_algebra(q, [], PrimeField(32003))  # loop never truncated


def test_relation_with_mixed_endpoints_rejected():
    q = Quiver(4, [Arrow("a", 1, 2), Arrow("b", 2, 3), Arrow("c", 2, 4)])
    rel = Relation(((1, ("a", "b")), (1, ("a", "c"))))
    with pytest.raises(MixedEndpointsError):
        build_algebra(q, [rel], PrimeField(32003))


def test_short_relation_term_rejected():
    q = Quiver(2, [Arrow("a", 1, 2)])
    with pytest.raises(NonAdmissibleError):
        build_algebra(q, [Relation(((1, ("a",)),))], PrimeField(32003))


def test_element_matmul_matches_multiply(nak6, rng):
    e = np.zeros((2, 2, nak6.dim), dtype=np.int64)
    f = np.zeros((2, 2, nak6.dim), dtype=np.int64)
    verts = [1, 2]
    mids = [2, 3]
    outs = [3, 4]
    for r in range(2):
        for c in range(2):
            for w in nak6.paths_from(outs[r]):
                if nak6.target_of(w) == mids[c]:
                    e[r, c, w] = rng.integers(0, nak6.field.p)
            for w in nak6.paths_from(mids[r]):
                if nak6.target_of(w) == verts[c]:
                    f[r, c, w] = rng.integers(0, nak6.field.p)
    prod = nak6.element_matmul(e, f)
    for r in range(2):
        for c in range(2):
            manual = sum(nak6.multiply(e[r, k], f[k, c]) for k in range(2))
            assert (prod[r, c] == manual % nak6.field.p).all()
