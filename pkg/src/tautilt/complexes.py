"""Two-term complexes of projectives, hom spaces, and silting predicates.

A complex P^{-1} -> P^0 is stored as two vertex lists and a matrix of
algebra elements: entry (r, c) lies in e_{deg0[r]} A e_{deg1[c]} and is the
component from the c-th degree -1 summand to the r-th degree 0 summand, so
composition of maps is the ordinary matrix product over the algebra.

Hom spaces in the homotopy category are computed degreewise on element
matrices.  Isomorphism and direct sum decomposition are delegated to the
module layer: a two-term complex is the same thing as a module over the
triangular matrix algebra of A, where both questions are plain module
questions and minimal complexes are homotopy equivalent exactly when they
are isomorphic on the nose.
"""

from __future__ import annotations

import numpy as np

from .algebra import Arrow, Quiver, Relation, build_algebra
from .errors import NotSelfinjectiveError, TheoremViolationError
from .modules import (
    Rep,
    RepMap,
    decompose,
    elements_to_repmap,
    hom_dim as module_hom_dim,
    is_indecomposable,
    minimal_presentation,
    projective_cover,
    quotient_rep,
    repmap_to_elements,
)
from .translate import nu_element, selfinjective_data


class TwoTermComplex:
    """A complex of projectives in degrees -1 and 0.

    deg1 and deg0 are the summand vertex tuples in degrees -1 and 0; d is
    the differential element matrix of shape (len(deg0), len(deg1), dim).
    """

    def __init__(self, algebra, deg1, deg0, d, check: bool = True):
        self.algebra = algebra
        self.deg1 = tuple(int(v) for v in deg1)
        self.deg0 = tuple(int(v) for v in deg0)
        d = algebra.field.reduce(d) if d is not None else np.zeros(
            (len(self.deg0), len(self.deg1), algebra.dim), dtype=np.int64)
        if d.shape != (len(self.deg0), len(self.deg1), algebra.dim):
            raise ValueError(f"differential shape {d.shape} is wrong")
        self.d = d
        if check:
            for r, tv in enumerate(self.deg0):
                for c, sv in enumerate(self.deg1):
                    allowed = set(algebra.slice_indices(tv, sv))
                    support = set(np.nonzero(d[r, c])[0].tolist())
                    if not support <= allowed:
                        raise ValueError(
                            f"entry ({r}, {c}) leaves e_{tv} A e_{sv}"
                        )

    def __repr__(self):
        return f"TwoTermComplex(deg1={list(self.deg1)}, deg0={list(self.deg0)})"

    def is_zero(self) -> bool:
        return not self.deg1 and not self.deg0

    def expand(self) -> RepMap:
        """The differential as a map of actual projective modules."""
        return elements_to_repmap(self.algebra, list(self.deg1),
                                  list(self.deg0), self.d)

    def h0(self) -> Rep:
        f = self.expand()
        quo, _ = quotient_rep(f.tgt, {v: f.blocks[v] for v in f.blocks})
        return quo


def projective_stalk(algebra, verts, shifted: bool = False) -> TwoTermComplex:
    """Sum of projectives as a stalk complex, in degree -1 if shifted."""
    verts = list(verts)
    if shifted:
        return TwoTermComplex(algebra, verts, [], None, check=False)
    return TwoTermComplex(algebra, [], verts, None, check=False)


def presentation_complex(m: Rep) -> TwoTermComplex:
    """Minimal projective presentation of a module, as a complex."""
    verts1, verts0, e = minimal_presentation(m)
    return TwoTermComplex(m.algebra, verts1, verts0, e, check=False)


def sum_complexes(complexes: list) -> TwoTermComplex:
    algebra = complexes[0].algebra
    deg1 = [v for c in complexes for v in c.deg1]
    deg0 = [v for c in complexes for v in c.deg0]
    d = np.zeros((len(deg0), len(deg1), algebra.dim), dtype=np.int64)
    r0 = c0 = 0
    for c in complexes:
        d[r0:r0 + len(c.deg0), c0:c0 + len(c.deg1)] = c.d
        r0 += len(c.deg0)
        c0 += len(c.deg1)
    return TwoTermComplex(algebra, deg1, deg0, d, check=False)


# -- hom spaces in the homotopy category -------------------------------------


def _space(algebra, tverts, sverts):
    """Coordinates for element matrices with entry (r, c) constrained to
    e_{tverts[r]} A e_{sverts[c]}."""
    slices = {}
    offs = {}
    pos = 0
    for r, tv in enumerate(tverts):
        for c, sv in enumerate(sverts):
            sl = algebra.slice_indices(tv, sv)
            slices[(r, c)] = sl
            offs[(r, c)] = pos
            pos += len(sl)
    return {"slices": slices, "offs": offs, "total": pos,
            "shape": (len(tverts), len(sverts)), "dim": algebra.dim}


def _flatten(e, space):
    out = np.zeros(space["total"], dtype=np.int64)
    for (r, c), sl in space["slices"].items():
        o = space["offs"][(r, c)]
        out[o:o + len(sl)] = e[r, c][sl]
    return out


def _unflatten(vec, space):
    e = np.zeros(space["shape"] + (space["dim"],), dtype=np.int64)
    for (r, c), sl in space["slices"].items():
        o = space["offs"][(r, c)]
        e[r, c][sl] = vec[o:o + len(sl)]
    return e


def _compose_left(algebra, a, x_space, out_space) -> np.ndarray:
    """Matrix of X -> a . X between flattened coordinate spaces."""
    cols = []
    for k in range(x_space["total"]):
        unit = np.zeros(x_space["total"], dtype=np.int64)
        unit[k] = 1
        prod = algebra.element_matmul(a, _unflatten(unit, x_space))
        cols.append(_flatten(prod, out_space))
    if not cols:
        return algebra.field.zeros(out_space["total"], 0)
    return np.array(cols, dtype=np.int64).T


def _compose_right(algebra, b, x_space, out_space) -> np.ndarray:
    """Matrix of X -> X . b between flattened coordinate spaces."""
    cols = []
    for k in range(x_space["total"]):
        unit = np.zeros(x_space["total"], dtype=np.int64)
        unit[k] = 1
        prod = algebra.element_matmul(_unflatten(unit, x_space), b)
        cols.append(_flatten(prod, out_space))
    if not cols:
        return algebra.field.zeros(out_space["total"], 0)
    return np.array(cols, dtype=np.int64).T


def _chain_map_data(p: TwoTermComplex, q: TwoTermComplex):
    """Kernel basis of the chain-map condition and the homotopy image rows,
    in the joint (F1, F0) coordinate space."""
    alg = p.algebra
    field = alg.field
    f1 = _space(alg, q.deg1, p.deg1)
    f0 = _space(alg, q.deg0, p.deg0)
    out = _space(alg, q.deg0, p.deg1)
    lhs = _compose_left(alg, q.d, f1, out)
    rhs = _compose_right(alg, p.d, f0, out)
    cons = np.hstack([lhs, (-rhs) % field.p])
    maps = field.kernel_basis(cons)
    hsp = _space(alg, q.deg1, p.deg0)
    himg = []
    for k in range(hsp["total"]):
        unit = np.zeros(hsp["total"], dtype=np.int64)
        unit[k] = 1
        h = _unflatten(unit, hsp)
        part1 = _flatten(alg.element_matmul(h, p.d), f1)
        part0 = _flatten(alg.element_matmul(q.d, h), f0)
        himg.append(np.concatenate([part1, part0]))
    himg = (np.array(himg, dtype=np.int64) if himg
            else field.zeros(0, f1["total"] + f0["total"]))
    return f1, f0, maps, himg


def hom_dim(p: TwoTermComplex, q: TwoTermComplex, shift: int = 0) -> int:
    """Dimension of Hom(p, q[shift]) in the homotopy category."""
    alg = p.algebra
    field = alg.field
    if abs(shift) >= 2:
        return 0
    if shift == 0:
        _, _, maps, himg = _chain_map_data(p, q)
        return len(maps) - field.rank(himg)
    if shift == 1:
        fsp = _space(alg, q.deg0, p.deg1)
        h0sp = _space(alg, q.deg0, p.deg0)
        h1sp = _space(alg, q.deg1, p.deg1)
        rows = []
        for k in range(h0sp["total"]):
            unit = np.zeros(h0sp["total"], dtype=np.int64)
            unit[k] = 1
            rows.append(_flatten(
                alg.element_matmul(_unflatten(unit, h0sp), p.d), fsp))
        for k in range(h1sp["total"]):
            unit = np.zeros(h1sp["total"], dtype=np.int64)
            unit[k] = 1
            rows.append(_flatten(
                alg.element_matmul(q.d, _unflatten(unit, h1sp)), fsp))
        img = (np.array(rows, dtype=np.int64) if rows
               else field.zeros(0, fsp["total"]))
        return fsp["total"] - field.rank(img)
    gsp = _space(alg, q.deg1, p.deg0)
    out1 = _space(alg, q.deg1, p.deg1)
    out0 = _space(alg, q.deg0, p.deg0)
    cons = np.vstack([
        _compose_right(alg, p.d, gsp, out1),
        _compose_left(alg, q.d, gsp, out0),
    ])
    return len(field.kernel_basis(cons))


def chain_maps_mod_homotopy(p: TwoTermComplex, q: TwoTermComplex) -> list:
    """Representatives of a basis of Hom(p, q) modulo homotopy, as pairs of
    element matrices (f1, f0)."""
    alg = p.algebra
    field = alg.field
    f1, f0, maps, himg = _chain_map_data(p, q)
    reps = []
    span = himg
    rank = field.rank(span)
    for vec in maps:
        cand = np.vstack([span, vec.reshape(1, -1)])
        r = field.rank(cand)
        if r > rank:
            span, rank = cand, r
            reps.append((_unflatten(vec[:f1["total"]], f1),
                         _unflatten(vec[f1["total"]:], f0)))
    return reps


# -- minimality ---------------------------------------------------------------


def minimalize(c: TwoTermComplex) -> TwoTermComplex:
    """Strip contractible summands: repeatedly eliminate a unit entry of
    the differential by row and column operations and delete its pair of
    summands."""
    alg = c.algebra
    field = alg.field
    deg1 = list(c.deg1)
    deg0 = list(c.deg0)
    d = c.d.copy()
    while True:
        pivot = None
        for r, tv in enumerate(deg0):
            for col, sv in enumerate(deg1):
                if tv == sv and alg.is_local_unit(d[r, col], tv):
                    pivot = (r, col, tv)
                    break
            if pivot:
                break
        if pivot is None:
            break
        r, col, v = pivot
        uinv = alg.local_inverse(d[r, col], v)
        keep_r = [i for i in range(len(deg0)) if i != r]
        keep_c = [j for j in range(len(deg1)) if j != col]
        nd = np.zeros((len(keep_r), len(keep_c), alg.dim), dtype=np.int64)
        for ii, i in enumerate(keep_r):
            mu = alg.multiply(d[i, col], uinv)
            for jj, j in enumerate(keep_c):
                nd[ii, jj] = (d[i, j] - alg.multiply(mu, d[r, j])) % field.p
        deg0 = [deg0[i] for i in keep_r]
        deg1 = [deg1[j] for j in keep_c]
        d = nd
    return TwoTermComplex(alg, deg1, deg0, d, check=False)


# -- complexes as modules over the triangular algebra -------------------------


def triangular_algebra(algebra):
    """The lower triangular matrix algebra of A, as a bound quiver algebra.
    Vertices 1..n are the degree -1 layer, n+1..2n the degree 0 layer, with
    a connecting arrow per vertex and commutation relations."""
    if "triangular" not in algebra._cache:
        n = algebra.num_vertices
        quiver = algebra.quiver
        arrows = []
        for a in quiver.arrows:
            arrows.append(Arrow(f"{a.name}@1", a.source, a.target))
        for a in quiver.arrows:
            arrows.append(Arrow(f"{a.name}@0", a.source + n, a.target + n))
        for v in range(1, n + 1):
            arrows.append(Arrow(f"@{v}", v, v + n))
        rels = []
        for src, tgt, _, terms in algebra.normalised_relations():
            for layer in ("1", "0"):
                rels.append(Relation(tuple(
                    (coeff, tuple(f"{quiver.arrows[ai].name}@{layer}"
                                  for ai in ids))
                    for coeff, ids in terms)))
        for a in quiver.arrows:
            rels.append(Relation((
                (1, (f"@{a.source}", f"{a.name}@0")),
                (-1, (f"{a.name}@1", f"@{a.target}")),
            )))
        tri = build_algebra(Quiver(2 * n, arrows), rels, algebra.field)
        if tri.dim != 3 * algebra.dim:
            raise AssertionError("triangular algebra has the wrong dimension")
        algebra._cache["triangular"] = tri
    return algebra._cache["triangular"]


def complex_to_module(c: TwoTermComplex) -> Rep:
    """A two-term complex as a module over the triangular algebra."""
    alg = c.algebra
    n = alg.num_vertices
    tri = triangular_algebra(alg)
    f = c.expand()
    dims = {}
    maps = {}
    for v in range(1, n + 1):
        dims[v] = f.src.dims[v]
        dims[v + n] = f.tgt.dims[v]
        maps[f"@{v}"] = f.blocks[v]
    for a in alg.quiver.arrows:
        maps[f"{a.name}@1"] = f.src.maps[a.name]
        maps[f"{a.name}@0"] = f.tgt.maps[a.name]
    return Rep(tri, dims, maps, check=False)


def _module_to_complex(algebra, s: Rep) -> TwoTermComplex:
    """Back from a triangular module whose layers are projective; the
    layers are re-coordinatised onto the path basis through their covers."""
    n = algebra.num_vertices
    layer1 = Rep(algebra, {v: s.dims[v] for v in range(1, n + 1)},
                 {a.name: s.maps[f"{a.name}@1"] for a in algebra.quiver.arrows},
                 check=False)
    layer0 = Rep(algebra, {v: s.dims[v + n] for v in range(1, n + 1)},
                 {a.name: s.maps[f"{a.name}@0"] for a in algebra.quiver.arrows},
                 check=False)
    conn = RepMap(layer1, layer0,
                  {v: s.maps[f"@{v}"] for v in range(1, n + 1)})
    _, cm1, verts1 = projective_cover(layer1)
    _, cm0, verts0 = projective_cover(layer0)
    if not (cm1.is_iso() and cm0.is_iso()):
        raise AssertionError("triangular summand has a non-projective layer")
    comp = cm1.compose(conn).compose(cm0.inverse())
    return TwoTermComplex(algebra, verts1, verts0,
                          repmap_to_elements(comp, verts1, verts0),
                          check=False)


def decompose_complex(c: TwoTermComplex, rng=None) -> list:
    """Indecomposable direct summands, with repetition."""
    if c.is_zero():
        return []
    return [_module_to_complex(c.algebra, s)
            for s in decompose(complex_to_module(c), rng)]


def is_indecomposable_complex(c: TwoTermComplex) -> bool:
    return is_indecomposable(complex_to_module(c))


def complexes_isomorphic(p: TwoTermComplex, q: TwoTermComplex) -> bool:
    """Isomorphism in the homotopy category.  Both inputs must be minimal,
    which enumeration and minimalize guarantee; minimal complexes are
    homotopy equivalent exactly when the triangular modules match."""
    if sorted(p.deg1) != sorted(q.deg1) or sorted(p.deg0) != sorted(q.deg0):
        return False
    from .modules import are_isomorphic

    return are_isomorphic(complex_to_module(p), complex_to_module(q))


def complex_end_dim(c: TwoTermComplex) -> int:
    """Dimension of the chain endomorphism ring, before homotopies."""
    m = complex_to_module(c)
    return module_hom_dim(m, m)


# -- the Nakayama functor on complexes ----------------------------------------


def nu_complex(c: TwoTermComplex) -> TwoTermComplex:
    """Apply the Nakayama functor: permute summand vertices and transport
    each differential entry through the twisted automorphism."""
    alg = c.algebra
    perm, _ = selfinjective_data(alg)
    moved = np.zeros_like(c.d)
    for r in range(c.d.shape[0]):
        for col in range(c.d.shape[1]):
            moved[r, col] = nu_element(alg, c.d[r, col])
    return TwoTermComplex(alg, [perm[v] for v in c.deg1],
                          [perm[v] for v in c.deg0], moved, check=False)


# -- silting and tilting -------------------------------------------------------


def summand_classes(c: TwoTermComplex, rng=None) -> list:
    """Indecomposable summands grouped up to isomorphism:
    a list of (representative, multiplicity)."""
    classes = []
    for s in decompose_complex(c, rng):
        for k, (rep, mult) in enumerate(classes):
            if complexes_isomorphic(s, rep):
                classes[k] = (rep, mult + 1)
                break
        else:
            classes.append((s, 1))
    return classes


def is_two_term_presilting(c: TwoTermComplex) -> bool:
    return hom_dim(c, c, 1) == 0


def is_two_term_silting(c: TwoTermComplex, rng=None) -> bool:
    """Presilting with as many indecomposable summand classes as the
    algebra has vertices.  Classes are counted on the minimal form so that
    contractible summands never inflate the count."""
    if not is_two_term_presilting(c):
        return False
    return len(summand_classes(minimalize(c), rng)) == c.algebra.num_vertices


def is_two_term_tilting(c: TwoTermComplex, rng=None) -> bool:
    """Silting with no negative self-maps.  Over a selfinjective algebra
    this must agree with invariance under the Nakayama functor; the two
    routes are both computed and a mismatch is a hard error."""
    if not is_two_term_silting(c, rng):
        return False
    answer = hom_dim(c, c, -1) == 0
    try:
        selfinjective_data(c.algebra)
    except NotSelfinjectiveError:
        return answer
    nu_route = complexes_isomorphic(minimalize(c), minimalize(nu_complex(c)))
    if nu_route != answer:
        raise TheoremViolationError(
            "negative-self-map and Nakayama-invariance routes disagree "
            "on a silting complex"
        )
    return answer
