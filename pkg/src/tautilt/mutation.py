"""Irreducible mutation of two-term silting complexes and exhaustive
enumeration of all of them by breadth-first mutation.

Mutation at an indecomposable summand X of P = X + Q forms the cone over
the universal left add(Q)-approximation of X, or dually the cocone over
the universal right approximation.  The universal approximation is built
from a full basis of maps modulo homotopy, so its cone carries extra
add(Q) summands alongside the new indecomposable; those are stripped after
reduction.  A cone is a three-term complex, and it reduces to a two-term
one exactly when unit elimination empties the outer degree.  Exactly one
of the two directions survives for each summand; anything else trips an
internal assertion, as does a reduction with more than one new summand.

The enumeration walks the mutation graph from the stalk of the algebra,
keyed by a registry of indecomposable complexes up to isomorphism, and
records every edge.  Mutation is an involution, so each computed edge
prepopulates its reverse.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .complexes import (
    TwoTermComplex,
    chain_maps_mod_homotopy,
    complex_to_module,
    complexes_isomorphic,
    decompose_complex,
    hom_dim,
    nu_complex,
    projective_stalk,
    sum_complexes,
    summand_classes,
    triangular_algebra,
)
from .errors import MutationAmbiguousError, NotSiltingError
from .modules import _indec_iso


def _reduce_pair(alg, va, vb, vc, da, db):
    """Minimalise a three-term complex A -> B -> C given by element
    matrices da: A -> B and db: B -> C, eliminating unit entries with the
    induced updates on the neighbouring differential."""
    p = alg.field.p
    va, vb, vc = list(va), list(vb), list(vc)
    da = da.copy() % p
    db = db.copy() % p
    while True:
        hit = None
        for r in range(len(vb)):
            for c in range(len(va)):
                if vb[r] == va[c] and alg.is_local_unit(da[r, c], vb[r]):
                    hit = ("a", r, c)
                    break
            if hit:
                break
        if hit is None:
            for r in range(len(vc)):
                for c in range(len(vb)):
                    if vc[r] == vb[c] and alg.is_local_unit(db[r, c], vc[r]):
                        hit = ("b", r, c)
                        break
                if hit:
                    break
        if hit is None:
            break
        kind, r, c = hit
        if kind == "a":
            uinv = alg.local_inverse(da[r, c], vb[r])
            for r2 in range(len(vb)):
                if r2 == r or not da[r2, c].any():
                    continue
                mu = alg.multiply(da[r2, c], uinv)
                for j in range(len(va)):
                    da[r2, j] = (da[r2, j] - alg.multiply(mu, da[r, j])) % p
                for i in range(len(vc)):
                    db[i, r] = (db[i, r] + alg.multiply(db[i, r2], mu)) % p
            for c2 in range(len(va)):
                if c2 == c or not da[r, c2].any():
                    continue
                nu = alg.multiply(uinv, da[r, c2])
                for i in range(len(vb)):
                    da[i, c2] = (da[i, c2] - alg.multiply(da[i, c], nu)) % p
            if db.size and db[:, r].any():
                raise AssertionError("composition invariant broken in reduction")
            va.pop(c)
            vb.pop(r)
            da = np.delete(np.delete(da, r, axis=0), c, axis=1)
            db = np.delete(db, r, axis=1)
        else:
            uinv = alg.local_inverse(db[r, c], vc[r])
            for c2 in range(len(vb)):
                if c2 == c or not db[r, c2].any():
                    continue
                nu = alg.multiply(uinv, db[r, c2])
                for i in range(len(vc)):
                    db[i, c2] = (db[i, c2] - alg.multiply(db[i, c], nu)) % p
                for j in range(len(va)):
                    da[c, j] = (da[c, j] + alg.multiply(nu, da[c2, j])) % p
            for r2 in range(len(vc)):
                if r2 == r or not db[r2, c].any():
                    continue
                mu = alg.multiply(db[r2, c], uinv)
                for j in range(len(vb)):
                    db[r2, j] = (db[r2, j] - alg.multiply(mu, db[r, j])) % p
            if da.size and da[c, :].any():
                raise AssertionError("composition invariant broken in reduction")
            vb.pop(c)
            vc.pop(r)
            db = np.delete(np.delete(db, r, axis=0), c, axis=1)
            da = np.delete(da, c, axis=0)
    return va, vb, vc, da, db


def _left_candidate(x: TwoTermComplex, q_reps: list) -> TwoTermComplex | None:
    """Reduced cone over the universal left approximation, or None when it
    stays three-term."""
    alg = x.algebra
    copies = [(q, f1, f0) for q in q_reps
              for f1, f0 in chain_maps_mod_homotopy(x, q)]
    t1 = [v for q, _, _ in copies for v in q.deg1]
    t0 = [v for q, _, _ in copies for v in q.deg0]
    va = list(x.deg1)
    vb = t1 + list(x.deg0)
    vc = list(t0)
    da = np.zeros((len(vb), len(va), alg.dim), dtype=np.int64)
    db = np.zeros((len(vc), len(vb), alg.dim), dtype=np.int64)
    r1 = r0 = 0
    for q, f1, f0 in copies:
        da[r1:r1 + len(q.deg1)] = f1
        db[r0:r0 + len(q.deg0), r1:r1 + len(q.deg1)] = q.d
        db[r0:r0 + len(q.deg0), len(t1):] = f0
        r1 += len(q.deg1)
        r0 += len(q.deg0)
    da[len(t1):] = (-x.d) % alg.field.p
    va, vb, vc, da, db = _reduce_pair(alg, va, vb, vc, da, db)
    if va:
        return None
    return TwoTermComplex(alg, vb, vc, db, check=False)


def _right_candidate(x: TwoTermComplex, q_reps: list) -> TwoTermComplex | None:
    """Reduced cocone over the universal right approximation, or None when
    it stays three-term."""
    alg = x.algebra
    copies = [(q, g1, g0) for q in q_reps
              for g1, g0 in chain_maps_mod_homotopy(q, x)]
    t1 = [v for q, _, _ in copies for v in q.deg1]
    t0 = [v for q, _, _ in copies for v in q.deg0]
    va = list(t1)
    vb = t0 + list(x.deg1)
    vc = list(x.deg0)
    da = np.zeros((len(vb), len(va), alg.dim), dtype=np.int64)
    db = np.zeros((len(vc), len(vb), alg.dim), dtype=np.int64)
    r1 = r0 = 0
    for q, g1, g0 in copies:
        da[r0:r0 + len(q.deg0), r1:r1 + len(q.deg1)] = q.d
        da[len(t0):, r1:r1 + len(q.deg1)] = g1
        db[:, r0:r0 + len(q.deg0)] = g0
        r1 += len(q.deg1)
        r0 += len(q.deg0)
    db[:, len(t0):] = (-x.d) % alg.field.p
    va, vb, vc, da, db = _reduce_pair(alg, va, vb, vc, da, db)
    if vc:
        return None
    return TwoTermComplex(alg, va, vb, da, check=False)


def _extract_new(result: TwoTermComplex, x: TwoTermComplex,
                 q_reps: list, rng) -> TwoTermComplex:
    parts = decompose_complex(result, rng)
    new = [s for s in parts
           if not any(complexes_isomorphic(s, q) for q in q_reps)]
    if len(new) != 1:
        raise MutationAmbiguousError(
            f"mutation produced {len(new)} summands outside the fixed part"
        )
    if complexes_isomorphic(new[0], x):
        raise MutationAmbiguousError("mutation reproduced the mutated summand")
    return new[0]


def mutate_summand(x: TwoTermComplex, q_reps: list, rng=None) -> TwoTermComplex:
    """The unique other indecomposable complement of add(Q) at X, reached
    by whichever of left and right mutation stays two-term."""
    left = _left_candidate(x, q_reps)
    right = _right_candidate(x, q_reps)
    outs = [c for c in (left, right) if c is not None]
    if len(outs) != 1:
        raise MutationAmbiguousError(
            f"{len(outs)} mutation directions stayed two-term"
        )
    return _extract_new(outs[0], x, q_reps, rng)


def mutate_silting(c: TwoTermComplex, index: int, rng=None) -> TwoTermComplex:
    """Mutate a basic two-term silting complex at its index-th summand
    class (in decomposition order).  Returns the mutated silting complex."""
    from .complexes import is_two_term_silting, minimalize

    if not is_two_term_silting(c, rng):
        raise NotSiltingError("mutation input is not a two-term silting complex")
    classes = [rep for rep, _ in summand_classes(minimalize(c), rng)]
    if not (0 <= index < len(classes)):
        raise ValueError(f"summand index {index} out of range")
    x = classes[index]
    q_reps = [rep for k, rep in enumerate(classes) if k != index]
    y = mutate_summand(x, q_reps, rng)
    return sum_complexes(q_reps[:index] + [y] + q_reps[index:])


# -- enumeration ---------------------------------------------------------------


class ComplexRegistry:
    """Indecomposable two-term complexes up to isomorphism, with stable
    integer ids in insertion order."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.items: list[TwoTermComplex] = []
        self._modules = []
        self._buckets: dict = {}

    def get_or_insert(self, c: TwoTermComplex) -> int:
        key = (tuple(sorted(c.deg1)), tuple(sorted(c.deg0)))
        mod = complex_to_module(c)
        for i in self._buckets.get(key, []):
            if _indec_iso(self._modules[i], mod):
                return i
        i = len(self.items)
        self.items.append(c)
        self._modules.append(mod)
        self._buckets.setdefault(key, []).append(i)
        return i

    def __len__(self):
        return len(self.items)


class EnumerationResult:
    """Mutation graph of basic two-term silting complexes.

    nodes are frozensets of registry ids in discovery order; edges[node]
    maps a summand id to the neighbouring node; status is COMPLETE when the
    graph was exhausted and TRUNCATED when the node cap stopped the walk.
    """

    def __init__(self, algebra, registry, nodes, edges, status):
        self.algebra = algebra
        self.registry = registry
        self.nodes = nodes
        self.edges = edges
        self.status = status
        self._hom_cache: dict = {}
        self._nu_cache: dict = {}

    def node_complex(self, node) -> TwoTermComplex:
        return sum_complexes([self.registry.items[i] for i in sorted(node)])

    def hom_shift(self, i: int, j: int, shift: int) -> int:
        key = (i, j, shift)
        if key not in self._hom_cache:
            self._hom_cache[key] = hom_dim(
                self.registry.items[i], self.registry.items[j], shift)
        return self._hom_cache[key]

    def is_node_tilting(self, node) -> bool:
        return all(self.hom_shift(i, j, -1) == 0 for i in node for j in node)

    def nu_id(self, i: int) -> int:
        if i not in self._nu_cache:
            self._nu_cache[i] = self.registry.get_or_insert(
                nu_complex(self.registry.items[i]))
        return self._nu_cache[i]

    def is_node_nu_stable(self, node) -> bool:
        return frozenset(self.nu_id(i) for i in node) == node


def enumerate_two_term_silting(algebra, cap: int = 10000, seed: int = 0,
                               threads: int = 1) -> EnumerationResult:
    """Breadth-first mutation walk from the stalk of the algebra."""
    triangular_algebra(algebra)  # warm shared caches before any threading
    registry = ComplexRegistry(algebra)
    start = frozenset(
        registry.get_or_insert(projective_stalk(algebra, [v]))
        for v in range(1, algebra.num_vertices + 1))
    seen = {start}
    order = [start]
    frontier = [start]
    edges: dict = {}
    cache: dict = {}
    status = "COMPLETE"

    def work(task):
        node, x = task
        qs = [registry.items[q] for q in sorted(node) if q != x]
        return task, mutate_summand(registry.items[x], qs,
                                    np.random.default_rng(seed))

    while frontier:
        if len(order) > cap:
            status = "TRUNCATED"
            break
        tasks = []
        for node in sorted(frontier, key=lambda nd: tuple(sorted(nd))):
            for x in sorted(node):
                if (node, x) not in cache:
                    tasks.append((node, x))
        if threads > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                results = list(ex.map(work, tasks))
        else:
            results = [work(t) for t in tasks]
        nxt = []
        for (node, x), y in results:
            yid = registry.get_or_insert(y)
            new_node = frozenset((node - {x}) | {yid})
            cache[(node, x)] = new_node
            cache[(new_node, yid)] = node
            edges.setdefault(node, {})[x] = new_node
            edges.setdefault(new_node, {})[yid] = node
            if new_node not in seen:
                seen.add(new_node)
                order.append(new_node)
                nxt.append(new_node)
        frontier = nxt
    return EnumerationResult(algebra, registry, order, edges, status)
