"""Finite-dimensional right modules over a bound quiver algebra.

A representation assigns a vector space to each vertex and a matrix to each
arrow.  Everything follows the row convention from the field layer: for an
arrow a: s -> t the matrix has shape (dim_s, dim_t) and acts on row vectors
by right multiplication, so the action of a path is the product of its
arrow matrices in path order.

Maps between projective modules are handled in two interchangeable forms:
as RepMap (matrices per vertex) and as matrices of algebra elements.  A map
from the projective at vertex i to the projective at vertex j is left
multiplication by an element of e_j A e_i, and a map of finite sums is an
element matrix indexed (target summand, source summand) so that composition
is the ordinary matrix product over the algebra.
"""

from __future__ import annotations

import threading

import numpy as np

from .errors import (
    AlgebraMismatchError,
    RandomnessExhaustedError,
    ZeroModuleError,
)

_SYMPY_LOCK = threading.Lock()


def _check_same(*objs):
    alg = objs[0].algebra
    for o in objs[1:]:
        if o.algebra is not alg:
            raise AlgebraMismatchError("objects live over different algebras")
    return alg


class Rep:
    """A right module, given by vertex dimensions and arrow matrices."""

    def __init__(self, algebra, dims: dict, maps: dict, check: bool = True):
        self.algebra = algebra
        n = algebra.num_vertices
        self.dims = {v: int(dims.get(v, 0)) for v in range(1, n + 1)}
        field = algebra.field
        self.maps = {}
        for a in algebra.quiver.arrows:
            m = maps.get(a.name)
            if m is None:
                m = field.zeros(self.dims[a.source], self.dims[a.target])
            m = field.reduce(m)
            if m.shape != (self.dims[a.source], self.dims[a.target]):
                raise ValueError(
                    f"arrow {a.name}: matrix shape {m.shape} does not match "
                    f"({self.dims[a.source]}, {self.dims[a.target]})"
                )
            self.maps[a.name] = m
        if check:
            self._validate()

    def _validate(self):
        field = self.algebra.field
        quiver = self.algebra.quiver
        for src, tgt, _, terms in self.algebra.normalised_relations():
            acc = field.zeros(self.dims[src], self.dims[tgt])
            for coeff, ids in terms:
                m = field.identity(self.dims[src])
                for ai in ids:
                    m = field.matmul(m, self.maps[quiver.arrows[ai].name])
                acc = (acc + coeff * m) % field.p
            if acc.any():
                raise ValueError("arrow matrices do not satisfy the relations")
        for src, arrows in self.algebra.boundary_words():
            m = field.identity(self.dims[src])
            for ai in arrows:
                m = field.matmul(m, self.maps[quiver.arrows[ai].name])
            if m.any():
                raise ValueError("a path at the truncation level acts nonzero")

    # -- basic data -------------------------------------------------------

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple:
        n = self.algebra.num_vertices
        return tuple(self.dims[v] for v in range(1, n + 1))

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def word_action(self, basis_index: int) -> np.ndarray:
        """Matrix of the right action of a basis path, from its source
        vertex space to its target vertex space."""
        src, arrows = self.algebra.basis_words[basis_index]
        field = self.algebra.field
        m = field.identity(self.dims[src])
        for ai in arrows:
            m = field.matmul(m, self.maps[self.algebra.quiver.arrows[ai].name])
        return m

    def __repr__(self):
        return f"Rep(dim_vector={self.dim_vector()})"


class RepMap:
    """A module map, one matrix per vertex, acting on row vectors."""

    def __init__(self, src: Rep, tgt: Rep, blocks: dict):
        _check_same(src, tgt)
        self.src = src
        self.tgt = tgt
        field = src.algebra.field
        self.blocks = {}
        for v in src.dims:
            b = blocks.get(v)
            if b is None:
                b = field.zeros(src.dims[v], tgt.dims[v])
            b = field.reduce(b)
            if b.shape != (src.dims[v], tgt.dims[v]):
                raise ValueError(f"vertex {v}: block shape {b.shape} is wrong")
            self.blocks[v] = b

    def compose(self, other: "RepMap") -> "RepMap":
        """self followed by other.  The middle objects may be distinct
        instances as long as they are equal on the nose."""
        mid, src = self.tgt, other.src
        if src is not mid:
            if src.algebra is not mid.algebra or src.dims != mid.dims or any(
                    (src.maps[a.name] != mid.maps[a.name]).any()
                    for a in src.algebra.quiver.arrows):
                raise ValueError("maps do not compose")
        field = self.src.algebra.field
        return RepMap(self.src, other.tgt,
                      {v: field.matmul(self.blocks[v], other.blocks[v])
                       for v in self.blocks})

    def is_zero(self) -> bool:
        return not any(b.any() for b in self.blocks.values())

    def is_module_map(self) -> bool:
        field = self.src.algebra.field
        for a in self.src.algebra.quiver.arrows:
            lhs = field.matmul(self.src.maps[a.name], self.blocks[a.target])
            rhs = field.matmul(self.blocks[a.source], self.tgt.maps[a.name])
            if (lhs != rhs).any():
                return False
        return True

    def is_iso(self) -> bool:
        field = self.src.algebra.field
        return all(b.shape[0] == b.shape[1] and field.is_invertible(b)
                   for b in self.blocks.values())

    def inverse(self) -> "RepMap":
        field = self.src.algebra.field
        return RepMap(self.tgt, self.src,
                      {v: field.inverse(self.blocks[v]) for v in self.blocks})

    def flatten(self) -> np.ndarray:
        return np.concatenate(
            [self.blocks[v].ravel() for v in sorted(self.blocks)]
        ) if self.blocks else np.zeros(0, dtype=np.int64)

    def __repr__(self):
        return f"RepMap({self.src!r} -> {self.tgt!r})"


# -- constructions ---------------------------------------------------------


def zero_module(algebra) -> Rep:
    return Rep(algebra, {}, {}, check=False)


def simple(algebra, v: int) -> Rep:
    return Rep(algebra, {v: 1}, {}, check=False)


def projective(algebra, v: int) -> Rep:
    """The indecomposable projective e_v A, on the path basis."""
    dims = {u: len(algebra.slice_indices(v, u))
            for u in range(1, algebra.num_vertices + 1)}
    maps = {}
    for a in algebra.quiver.arrows:
        maps[a.name] = algebra.right_mult_matrix(
            algebra.arrow_element(a.name),
            algebra.slice_indices(v, a.source),
            algebra.slice_indices(v, a.target),
        )
    return Rep(algebra, dims, maps, check=False)


def injective(algebra, v: int) -> Rep:
    return dual(projective(algebra.opposite(), v))


def regular(algebra) -> Rep:
    rep, _ = direct_sum(algebra, [projective(algebra, v)
                                  for v in range(1, algebra.num_vertices + 1)])
    return rep


def direct_sum(algebra, reps: list) -> tuple:
    """Block direct sum.  Returns (rep, offsets) where offsets[i][v] is the
    start of summand i inside vertex space v."""
    for r in reps:
        if r.algebra is not algebra:
            raise AlgebraMismatchError("summand over a different algebra")
    field = algebra.field
    dims = {v: sum(r.dims[v] for r in reps)
            for v in range(1, algebra.num_vertices + 1)}
    offsets = []
    running = {v: 0 for v in dims}
    for r in reps:
        offsets.append(dict(running))
        for v in dims:
            running[v] += r.dims[v]
    maps = {}
    for a in algebra.quiver.arrows:
        m = field.zeros(dims[a.source], dims[a.target])
        for i, r in enumerate(reps):
            rs, cs = offsets[i][a.source], offsets[i][a.target]
            blk = r.maps[a.name]
            m[rs:rs + blk.shape[0], cs:cs + blk.shape[1]] = blk
        maps[a.name] = m
    return Rep(algebra, dims, maps, check=False), offsets


def summand_inclusion(total: Rep, reps: list, offsets: list, i: int) -> RepMap:
    field = total.algebra.field
    blocks = {}
    for v in total.dims:
        b = field.zeros(reps[i].dims[v], total.dims[v])
        o = offsets[i][v]
        b[:, o:o + reps[i].dims[v]] = field.identity(reps[i].dims[v])
        blocks[v] = b
    return RepMap(reps[i], total, blocks)


def dual(m: Rep) -> Rep:
    """The dual module over the opposite algebra, via transposed matrices."""
    op = m.algebra.opposite()
    return Rep(op, dict(m.dims),
               {a.name: m.maps[a.name].T.copy() for a in m.algebra.quiver.arrows},
               check=False)


def dual_map(f: RepMap) -> RepMap:
    return RepMap(dual(f.tgt), dual(f.src),
                  {v: f.blocks[v].T.copy() for v in f.blocks})


# -- hom spaces -------------------------------------------------------------


def hom_basis(m: Rep, n: Rep) -> list:
    """Basis of the space of module maps m -> n."""
    alg = _check_same(m, n)
    field = alg.field
    verts = sorted(m.dims)
    sizes = {v: m.dims[v] * n.dims[v] for v in verts}
    offset = {}
    pos = 0
    for v in verts:
        offset[v] = pos
        pos += sizes[v]
    total = pos
    crows = []
    for a in alg.quiver.arrows:
        s, t = a.source, a.target
        rcount = m.dims[s] * n.dims[t]
        if rcount == 0:
            continue
        blk = field.zeros(rcount, total)
        # f_s @ n_a - m_a @ f_t = 0, vectorised row-major
        blk[:, offset[s]:offset[s] + sizes[s]] = np.kron(
            field.identity(m.dims[s]), n.maps[a.name].T)
        blk[:, offset[t]:offset[t] + sizes[t]] = (
            blk[:, offset[t]:offset[t] + sizes[t]]
            - np.kron(m.maps[a.name], field.identity(n.dims[t]))) % field.p
        crows.append(blk)
    c = np.vstack(crows) if crows else field.zeros(0, total)
    out = []
    for vec in field.kernel_basis(c):
        blocks = {v: vec[offset[v]:offset[v] + sizes[v]].reshape(m.dims[v], n.dims[v])
                  for v in verts}
        out.append(RepMap(m, n, blocks))
    return out


def hom_dim(m: Rep, n: Rep) -> int:
    return len(hom_basis(m, n))


def _pairing_matrix(fs: list, gs: list, field) -> np.ndarray:
    """Traces of composites f then g, for f: M -> N and g: N -> M."""
    out = field.zeros(len(fs), len(gs))
    for i, f in enumerate(fs):
        for j, g in enumerate(gs):
            t = 0
            for v in f.blocks:
                t += int(np.trace(field.matmul(f.blocks[v], g.blocks[v])))
            out[i, j] = t % field.p
    return out


def end_gram(m: Rep, ends: list | None = None) -> np.ndarray:
    ends = hom_basis(m, m) if ends is None else ends
    return _pairing_matrix(ends, ends, m.algebra.field)


def is_indecomposable(m: Rep) -> bool:
    """Whether the endomorphism ring is local: the trace form on it has
    rank one, the dimension of the semisimple quotient."""
    if m.is_zero():
        raise ZeroModuleError("the zero module is not indecomposable")
    field = m.algebra.field
    return field.rank(end_gram(m)) == 1


# -- submodules, quotients, radical, socle ----------------------------------


def sub_rep(m: Rep, rows: dict) -> tuple:
    """Submodule spanned by the given rows (per vertex, need not be
    independent).  Returns (sub, inclusion).  The span must be closed under
    the arrow action."""
    alg = m.algebra
    field = alg.field
    basis = {}
    for v in m.dims:
        r = rows.get(v)
        r = field.zeros(0, m.dims[v]) if r is None or len(r) == 0 else field.reduce(r)
        basis[v] = field.row_space_basis(r)
    dims = {v: basis[v].shape[0] for v in m.dims}
    maps = {}
    for a in alg.quiver.arrows:
        moved = field.matmul(basis[a.source], m.maps[a.name])
        x = field.solve_left(basis[a.target], moved)
        if x is None:
            raise ValueError("rows do not span an arrow-stable subspace")
        maps[a.name] = x
    sub = Rep(alg, dims, maps, check=False)
    return sub, RepMap(sub, m, basis)


def quotient_rep(m: Rep, rows: dict) -> tuple:
    """Quotient by the submodule spanned by the rows.  Returns
    (quotient, projection)."""
    alg = m.algebra
    field = alg.field
    proj = {}
    for v in m.dims:
        r = rows.get(v)
        r = field.zeros(0, m.dims[v]) if r is None or len(r) == 0 else field.reduce(r)
        rr, piv = field.rref(r)
        y = field.identity(m.dims[v])
        for i, c in enumerate(piv):
            y[c] = (y[c] - rr[i]) % field.p
        nonpiv = [j for j in range(m.dims[v]) if j not in set(piv)]
        proj[v] = y[:, nonpiv].copy()
    dims = {v: proj[v].shape[1] for v in m.dims}
    maps = {}
    for a in alg.quiver.arrows:
        rhs = field.matmul(m.maps[a.name], proj[a.target])
        x = field.solve_right(proj[a.source], rhs)
        if x is None:
            raise ValueError("rows do not span an arrow-stable subspace")
        maps[a.name] = x
    quo = Rep(alg, dims, maps, check=False)
    return quo, RepMap(m, quo, proj)


def submodule_generated(m: Rep, gens: list) -> dict:
    """Row spans, per vertex, of the submodule generated by the given
    (vertex, row vector) pairs."""
    field = m.algebra.field
    rows = {v: [] for v in m.dims}
    for v, row in gens:
        rows[v].append(field.reduce(row))
    spans = {v: field.row_space_basis(np.array(rows[v], dtype=np.int64))
             if rows[v] else field.zeros(0, m.dims[v]) for v in m.dims}
    changed = True
    while changed:
        changed = False
        for a in m.algebra.quiver.arrows:
            moved = field.matmul(spans[a.source], m.maps[a.name])
            stacked = np.vstack([spans[a.target], moved])
            nb = field.row_space_basis(stacked)
            if nb.shape[0] != spans[a.target].shape[0]:
                spans[a.target] = nb
                changed = True
    return spans


def radical_rows(m: Rep) -> dict:
    field = m.algebra.field
    out = {}
    for v in m.dims:
        blocks = [m.maps[a.name] for a in m.algebra.quiver.arrows if a.target == v]
        out[v] = (field.row_space_basis(np.vstack(blocks))
                  if blocks else field.zeros(0, m.dims[v]))
    return out


def radical(m: Rep) -> tuple:
    return sub_rep(m, radical_rows(m))


def top(m: Rep) -> tuple:
    """(top, projection m -> top)."""
    return quotient_rep(m, radical_rows(m))


def socle_rows(m: Rep) -> dict:
    field = m.algebra.field
    out = {}
    for v in m.dims:
        blocks = [m.maps[a.name] for a in m.algebra.quiver.arrows if a.source == v]
        out[v] = (field.left_kernel_basis(np.hstack(blocks))
                  if blocks else field.identity(m.dims[v]))
    return out


def kernel(f: RepMap) -> tuple:
    """(kernel, inclusion into f.src)."""
    field = f.src.algebra.field
    rows = {v: field.left_kernel_basis(f.blocks[v]) for v in f.blocks}
    return sub_rep(f.src, rows)


def image(f: RepMap) -> tuple:
    """(image, inclusion into f.tgt)."""
    field = f.src.algebra.field
    rows = {v: field.row_space_basis(f.blocks[v]) for v in f.blocks}
    return sub_rep(f.tgt, rows)


# -- projective covers and presentations ------------------------------------


def top_generators(m: Rep) -> list:
    """One (vertex, row) generator per simple summand of the top."""
    field = m.algebra.field
    gens = []
    rad = radical_rows(m)
    for v in sorted(m.dims):
        _, piv = field.rref(rad[v])
        for j in range(m.dims[v]):
            if j not in set(piv):
                row = field.zeros(1, m.dims[v])[0]
                row[j] = 1
                gens.append((v, row))
    return gens


def projective_cover(m: Rep) -> tuple:
    """(cover rep, surjection cover -> m, list of cover vertices)."""
    alg = m.algebra
    field = alg.field
    gens = top_generators(m)
    verts = [v for v, _ in gens]
    cover, offsets = projective_sum(alg, verts)
    blocks = {u: field.zeros(cover.dims[u], m.dims[u]) for u in m.dims}
    for i, (v, g) in enumerate(gens):
        for u in m.dims:
            sl = alg.slice_indices(v, u)
            for k, w in enumerate(sl):
                row = field.matmul(g.reshape(1, -1), m.word_action(w))[0]
                blocks[u][offsets[i][u] + k] = row
    return cover, RepMap(cover, m, blocks), verts


def projective_sum(algebra, verts: list) -> tuple:
    """Direct sum of projectives at the given vertices, in order, on the
    path basis.  Returns (rep, offsets)."""
    return direct_sum(algebra, [projective(algebra, v) for v in verts])


def syzygy(m: Rep) -> tuple:
    """(syzygy, inclusion into the cover, cover map, cover vertices)."""
    cover, cmap, verts = projective_cover(m)
    ker, incl = kernel(cmap)
    return ker, incl, cmap, verts


def minimal_presentation(m: Rep) -> tuple:
    """Minimal projective presentation as an element matrix.

    Returns (deg1_verts, deg0_verts, e) where e has shape
    (len(deg0), len(deg1), dim) and entry (r, c) is the component from the
    c-th degree -1 summand to the r-th degree 0 summand.
    """
    ker, incl, _, verts0 = syzygy(m)
    _, kcover, verts1 = projective_cover(ker)
    comp = kcover.compose(incl)
    e = repmap_to_elements(comp, verts1, verts0)
    return verts1, verts0, e


def repmap_to_elements(f: RepMap, src_verts: list, tgt_verts: list) -> np.ndarray:
    """Element matrix of a map between projective sums on the path basis.

    The result has shape (len(tgt_verts), len(src_verts), dim); entry (r, c)
    lies in e_{tgt[r]} A e_{src[c]} and acts by left multiplication.
    """
    alg = f.src.algebra
    field = alg.field
    _, soff = projective_sum(alg, src_verts)
    _, toff = projective_sum(alg, tgt_verts)
    out = np.zeros((len(tgt_verts), len(src_verts), alg.dim), dtype=np.int64)
    for c, sv in enumerate(src_verts):
        sl = alg.slice_indices(sv, sv)
        gen_pos = soff[c][sv] + sl.index(alg.trivial_index(sv))
        row = f.blocks[sv][gen_pos]
        for r, tv in enumerate(tgt_verts):
            seg = alg.slice_indices(tv, sv)
            vec = field.zeros(1, alg.dim)[0]
            for k, w in enumerate(seg):
                vec[w] = row[toff[r][sv] + k]
            out[r, c] = vec
    return out


def elements_to_repmap(algebra, src_verts: list, tgt_verts: list,
                       e: np.ndarray) -> RepMap:
    """Inverse of repmap_to_elements: realise an element matrix as a map of
    projective sums on the path basis."""
    field = algebra.field
    src, soff = projective_sum(algebra, src_verts)
    tgt, toff = projective_sum(algebra, tgt_verts)
    blocks = {u: field.zeros(src.dims[u], tgt.dims[u]) for u in src.dims}
    for c, sv in enumerate(src_verts):
        for r, tv in enumerate(tgt_verts):
            x = e[r, c]
            if not x.any():
                continue
            for u in src.dims:
                rows_sl = algebra.slice_indices(sv, u)
                cols_sl = algebra.slice_indices(tv, u)
                if not rows_sl or not cols_sl:
                    continue
                blk = algebra.left_mult_matrix(x, rows_sl, cols_sl)
                blocks[u][soff[c][u]:soff[c][u] + len(rows_sl),
                          toff[r][u]:toff[r][u] + len(cols_sl)] = blk
    return RepMap(src, tgt, blocks)


# -- decomposition -----------------------------------------------------------


def _min_poly_coeffs(blocks: dict, field) -> list:
    """Monic minimal polynomial of a per-vertex family of square matrices,
    lowest degree first."""
    p = field.p
    flat0 = np.concatenate([field.identity(b.shape[0]).ravel()
                            for b in blocks.values()])
    power = np.concatenate([b.ravel() for b in blocks.values()])
    cur = {v: b.copy() for v, b in blocks.items()}
    stack = [flat0]
    while True:
        sol = field.solve_left(np.array(stack, dtype=np.int64), power)
        if sol is not None:
            return [(-int(c)) % p for c in sol] + [1]
        stack.append(power)
        cur = {v: field.matmul(cur[v], blocks[v]) for v in blocks}
        power = np.concatenate([b.ravel() for b in cur.values()])
        if len(stack) > flat0.size + 2:
            raise AssertionError("minimal polynomial search did not terminate")


def _poly_eval(coeffs: list, blocks: dict, field) -> dict:
    """Evaluate a polynomial (lowest degree first) at a per-vertex family."""
    out = {}
    for v, b in blocks.items():
        acc = field.zeros(b.shape[0], b.shape[0])
        for c in reversed(coeffs):
            acc = (field.matmul(acc, b) + int(c) % field.p * field.identity(b.shape[0])) % field.p
        out[v] = acc
    return out


def _splitting_idempotent(m: Rep, u: RepMap):
    """A nontrivial idempotent endomorphism commuting with u, or None.

    Factors the minimal polynomial of u; coprime factors give an exact
    idempotent via the extended Euclidean algorithm, no lifting involved.
    """
    import sympy

    field = m.algebra.field
    p = field.p
    blocks = {v: u.blocks[v] for v in u.blocks if u.blocks[v].shape[0] > 0}
    if not blocks:
        return None
    coeffs = _min_poly_coeffs(blocks, field)
    with _SYMPY_LOCK:  # sympy's global cache is not safe under threads
        x = sympy.Symbol("x")
        poly = sympy.Poly(list(reversed(coeffs)), x, modulus=p)
        _, factors = poly.factor_list()
        if len(factors) < 2:
            return None
        factors = sorted(factors, key=lambda fm: (fm[0].degree(), str(fm[0])))
        f1 = factors[0][0] ** factors[0][1]
        f2 = sympy.Poly(1, x, modulus=p)
        for fac, mult in factors[1:]:
            f2 = f2 * fac ** mult
        s, t, h = f1.gcdex(f2)
        if h.degree() != 0:
            raise AssertionError("complementary factors are not coprime")
        # on ker f1(u) the combination t*f2 acts as 1, on ker f2(u) as 0
        hinv = field.inv_scalar(int(h.all_coeffs()[-1]))
        proj_poly = t * f2
        pcoeffs = [int(c) * hinv % p for c in reversed(proj_poly.all_coeffs())]
    eps_blocks = _poly_eval(pcoeffs, {v: u.blocks[v] for v in u.blocks}, field)
    eps = RepMap(m, m, eps_blocks)
    ranks = sum(field.rank(b) for b in eps.blocks.values())
    if ranks == 0 or ranks == m.total_dim:
        return None
    check = eps.compose(eps)
    for v in eps.blocks:
        if (check.blocks[v] != eps.blocks[v]).any():
            raise AssertionError("idempotent construction failed")
    return eps


def decompose(m: Rep, rng=None) -> list:
    """Indecomposable summands of m, with repetition, as a list of Rep."""
    if m.is_zero():
        return []
    if rng is None:
        rng = np.random.default_rng(0)
    field = m.algebra.field
    ends = hom_basis(m, m)
    if field.rank(_pairing_matrix(ends, ends, field)) == 1:
        return [m]
    candidates = list(ends)
    for _ in range(200):
        for u in candidates:
            eps = _splitting_idempotent(m, u)
            if eps is None:
                continue
            one_minus = RepMap(m, m, {
                v: (field.identity(m.dims[v]) - eps.blocks[v]) % field.p
                for v in eps.blocks})
            out = []
            for part in (eps, one_minus):
                rows = {v: field.row_space_basis(part.blocks[v])
                        for v in part.blocks}
                summand, _ = sub_rep(m, rows)
                out.extend(decompose(summand, rng))
            return out
        coeffs = rng.integers(0, field.p, size=len(ends))
        blocks = {v: sum(int(c) * f.blocks[v] for c, f in zip(coeffs, ends)) % field.p
                  for v in m.dims}
        candidates = [RepMap(m, m, blocks)]
    raise RandomnessExhaustedError(
        "no splitting endomorphism found for a decomposable module"
    )


def _indec_iso(m: Rep, n: Rep) -> bool:
    """Isomorphism test for indecomposables via the trace pairing: any
    composite through a non-isomorphism is nilpotent and traceless, while
    an isomorphism pairs with its inverse to the total dimension."""
    if m.dim_vector() != n.dim_vector():
        return False
    field = m.algebra.field
    fs = hom_basis(m, n)
    if not fs:
        return False
    gs = hom_basis(n, m)
    return _pairing_matrix(fs, gs, field).any()


def extract_iso(m: Rep, n: Rep) -> RepMap | None:
    """An explicit isomorphism between indecomposables, or None."""
    if m.dim_vector() != n.dim_vector():
        return None
    field = m.algebra.field
    fs = hom_basis(m, n)
    gs = hom_basis(n, m)
    pair = _pairing_matrix(fs, gs, field)
    idx = np.argwhere(pair)
    if idx.size == 0:
        return None
    i, j = idx[0]
    # trace(f g) != 0 makes g f a unit in the local endomorphism ring
    return fs[int(i)]


def are_isomorphic(m: Rep, n: Rep, rng=None) -> bool:
    if m.dim_vector() != n.dim_vector():
        return False
    if m.is_zero():
        return True
    parts_m = decompose(m, rng)
    parts_n = list(decompose(n, rng))
    if len(parts_m) != len(parts_n):
        return False
    for a in parts_m:
        hit = next((k for k, b in enumerate(parts_n) if _indec_iso(a, b)), None)
        if hit is None:
            return False
        parts_n.pop(hit)
    return True


# -- ext groups and extensions ----------------------------------------------


def ext1_dim(m: Rep, n: Rep) -> int:
    """dim Ext^1(m, n), via maps out of the syzygy modulo those extending
    to the projective cover."""
    ker, incl, _, _ = syzygy(m)
    target = hom_basis(ker, n)
    if not target:
        return 0
    cover_maps = hom_basis(incl.tgt, n)
    if not cover_maps:
        return len(target)
    field = m.algebra.field
    restricted = np.array([incl.compose(h).flatten() for h in cover_maps],
                          dtype=np.int64)
    return len(target) - field.rank(restricted)


def fac_contains(m: Rep, x: Rep) -> bool:
    """Whether x is a quotient of a finite sum of copies of m: the images
    of all maps m -> x must fill x."""
    _check_same(m, x)
    field = m.algebra.field
    fs = hom_basis(m, x)
    for v in x.dims:
        if x.dims[v] == 0:
            continue
        if not fs:
            return False
        stacked = np.vstack([f.blocks[v] for f in fs])
        if field.rank(stacked) < x.dims[v]:
            return False
    return True


def random_extension(m: Rep, n: Rep, rng=None) -> tuple:
    """A module e with a short exact sequence 0 -> n -> e -> m -> 0, built
    from a random cocycle.  Returns (e, inclusion, projection)."""
    alg = _check_same(m, n)
    field = alg.field
    if rng is None:
        rng = np.random.default_rng(0)
    ker, incl, cmap, _ = syzygy(m)
    fs = hom_basis(ker, n)
    if fs:
        coeffs = rng.integers(0, field.p, size=len(fs))
        phi = {v: sum(int(c) * f.blocks[v] for c, f in zip(coeffs, fs)) % field.p
               for v in ker.dims}
    else:
        phi = {v: field.zeros(ker.dims[v], n.dims[v]) for v in ker.dims}
    cover = incl.tgt
    total, offs = direct_sum(alg, [n, cover])
    rows = {}
    for v in total.dims:
        r = field.zeros(ker.dims[v], total.dims[v])
        r[:, offs[0][v]:offs[0][v] + n.dims[v]] = phi[v]
        r[:, offs[1][v]:offs[1][v] + cover.dims[v]] = (-incl.blocks[v]) % field.p
        rows[v] = r
    e, proj = quotient_rep(total, rows)
    inc_blocks = {}
    for v in total.dims:
        b = field.zeros(n.dims[v], total.dims[v])
        b[:, offs[0][v]:offs[0][v] + n.dims[v]] = field.identity(n.dims[v])
        inc_blocks[v] = field.matmul(b, proj.blocks[v])
    inclusion = RepMap(n, e, inc_blocks)
    h_blocks = {}
    for v in total.dims:
        h = field.zeros(total.dims[v], m.dims[v])
        h[offs[1][v]:offs[1][v] + cover.dims[v]] = cmap.blocks[v]
        x = field.solve_right(proj.blocks[v], h)
        if x is None:
            raise AssertionError("extension projection failed to factor")
        h_blocks[v] = x
    projection = RepMap(e, m, h_blocks)
    return e, inclusion, projection
