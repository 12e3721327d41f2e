"""Support tau-tilting pairs, stability under the Nakayama functor, and the
transport between pairs and two-term silting complexes.

A pair is a basic list of indecomposable modules X together with a set of
vertices naming the projectives P that must not map into X.  The pair is
support tau-tilting when X is tau-rigid, X vanishes at every named vertex,
and the summand count |X| + |P| reaches the number of vertices.  The
correspondence with two-term silting complexes sends X to its minimal
presentation and each named vertex to a shifted projective stalk.

Several results carry a second, independently computed route, and any
disagreement between routes raises TheoremViolationError: stability under
the Nakayama functor against tilting complexes, tau-minus predicates
against duality over the opposite algebra, and the obstruction battery for
2-Calabi-Yau tilted algebras.  The obstruction report only ever rules an
algebra out; a fully consistent report proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import (
    TwoTermComplex,
    decompose_complex,
    is_two_term_silting,
    minimalize,
    presentation_complex,
    projective_stalk,
    sum_complexes,
)
from .errors import (
    NotCompletableError,
    NotInFacError,
    NotSelfinjectiveError,
    NotSiltingError,
    NotSupportTauTiltingError,
    TheoremViolationError,
)
from .modules import (
    Rep,
    are_isomorphic,
    direct_sum,
    dual,
    fac_contains,
    hom_dim as module_hom_dim,
    is_indecomposable,
    regular,
    syzygy,
    zero_module,
)
from .mutation import EnumerationResult, enumerate_two_term_silting
from .translate import (
    nakayama_permutation,
    nu_module,
    selfinjective_data,
    tau,
    tau_minus,
)


@dataclass(frozen=True)
class STPair:
    """A basic pair: indecomposable modules plus complement vertices."""

    algebra: object
    modules: tuple
    pverts: tuple

    def __post_init__(self):
        n = self.algebra.num_vertices
        if len(set(self.pverts)) != len(self.pverts):
            raise ValueError("complement vertices repeat")
        for v in self.pverts:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} out of range")
        if len(self.modules) + len(self.pverts) > n:
            raise ValueError("more summands than the algebra has vertices")

    def validate_basic(self) -> None:
        """Check indecomposability and pairwise non-isomorphism; these are
        deliberately not run on construction (they cost decompositions)."""
        for m in self.modules:
            if not is_indecomposable(m):
                raise ValueError("a listed module is decomposable")
        for i in range(len(self.modules)):
            for j in range(i + 1, len(self.modules)):
                if are_isomorphic(self.modules[i], self.modules[j]):
                    raise ValueError("two listed modules are isomorphic")

    def module_sum(self) -> Rep:
        if not self.modules:
            return zero_module(self.algebra)
        return direct_sum(self.algebra, list(self.modules))[0]

    def sort_key(self):
        mods = sorted((m.total_dim, m.dim_vector()) for m in self.modules)
        return (len(self.pverts), tuple(sorted(self.pverts)), tuple(mods))


def make_pair(algebra, modules, pverts) -> STPair:
    mods = tuple(sorted(modules, key=lambda m: (m.total_dim, m.dim_vector())))
    return STPair(algebra, mods, tuple(sorted(pverts)))


def is_tau_rigid(x: Rep) -> bool:
    """No nonzero maps from x to its translate."""
    return module_hom_dim(x, tau(x)) == 0


def is_support_tau_tilting_pair(pair: STPair, rng=None) -> bool:
    x = pair.module_sum()
    if any(x.dims[v] != 0 for v in pair.pverts):
        return False
    if len(pair.modules) + len(pair.pverts) != pair.algebra.num_vertices:
        return False
    return is_tau_rigid(x)


def completion_projectives(modules: list, algebra=None) -> tuple:
    """The unique complement vertex set making a tau-rigid module list into
    a support tau-tilting pair, when one exists."""
    if algebra is None:
        if not modules:
            raise ValueError("an empty module list needs an explicit algebra")
        algebra = modules[0].algebra
    pair = make_pair(algebra, modules, ())
    x = pair.module_sum()
    pverts = tuple(v for v in range(1, algebra.num_vertices + 1)
                   if x.dims[v] == 0)
    candidate = STPair(algebra, pair.modules, pverts)
    if not is_support_tau_tilting_pair(candidate):
        raise NotCompletableError(
            "zero-support vertices do not complete the module to a "
            "support tau-tilting pair"
        )
    return pverts


def is_nu_stable_pair(pair: STPair, rng=None) -> bool:
    """Whether the module part is fixed by the Nakayama functor.  For a
    support tau-tilting pair the complement vertices must then be closed
    under the Nakayama permutation, which is asserted."""
    perm = nakayama_permutation(pair.algebra)
    x = pair.module_sum()
    stable = are_isomorphic(nu_module(x), x, rng)
    if stable and is_support_tau_tilting_pair(pair, rng):
        if sorted(perm[v] for v in pair.pverts) != sorted(pair.pverts):
            raise TheoremViolationError(
                "stable module part with complement vertices not closed "
                "under the Nakayama permutation"
            )
    return stable


def is_support_tau_minus_tilting(modules: list, algebra=None, rng=None) -> bool:
    """Support tau-minus-tilting, computed directly and again through
    duality over the opposite algebra; the routes must agree."""
    if algebra is None:
        if not modules:
            raise ValueError("an empty module list needs an explicit algebra")
        algebra = modules[0].algebra
    pair = make_pair(algebra, modules, ())
    x = pair.module_sum()
    zero_verts = tuple(v for v in range(1, algebra.num_vertices + 1)
                       if x.dims[v] == 0)
    count_ok = len(pair.modules) + len(zero_verts) == algebra.num_vertices
    direct = count_ok and module_hom_dim(tau_minus(x), x) == 0
    dpair = STPair(algebra.opposite(), tuple(dual(m) for m in pair.modules),
                   zero_verts)
    via_dual = is_support_tau_tilting_pair(dpair, rng)
    if direct != via_dual:
        raise TheoremViolationError(
            "direct tau-minus route and duality route disagree"
        )
    return direct


# -- transport to and from two-term complexes ----------------------------------


def pair_to_complex(pair: STPair, rng=None) -> TwoTermComplex:
    """Minimal presentations of the module part plus shifted stalks for the
    complement vertices, as one two-term complex."""
    if not is_support_tau_tilting_pair(pair, rng):
        raise NotSupportTauTiltingError(
            "transport to a complex needs a support tau-tilting pair"
        )
    parts = [presentation_complex(m) for m in pair.modules]
    if pair.pverts:
        parts.append(projective_stalk(pair.algebra, list(pair.pverts),
                                      shifted=True))
    return sum_complexes(parts)


def complex_to_pair(c: TwoTermComplex, rng=None) -> STPair:
    """Split off the shifted-stalk part, take the cokernel of the rest."""
    if not is_two_term_silting(c, rng):
        raise NotSiltingError("transport to a pair needs a silting complex")
    return _complex_to_pair_unchecked(minimalize(c), rng)


def _complex_to_pair_unchecked(c: TwoTermComplex, rng=None) -> STPair:
    pverts = []
    mods = []
    for s in decompose_complex(c, rng):
        if not s.deg0:
            if len(s.deg1) != 1:
                raise AssertionError("decomposable shifted stalk returned")
            pverts.append(s.deg1[0])
        else:
            m = s.h0()
            if m.is_zero():
                raise AssertionError(
                    "a minimal non-stalk summand has zero cokernel")
            mods.append(m)
    kept = []
    for m in mods:
        if not any(are_isomorphic(m, k, rng) for k in kept):
            kept.append(m)
    return make_pair(c.algebra, kept, pverts)


# -- enumeration ----------------------------------------------------------------


@dataclass
class PairEnumeration:
    """All basic support tau-tilting pairs reached by the silting walk,
    aligned index-for-index with the silting nodes that produced them."""

    algebra: object
    pairs: list
    status: str
    silting: EnumerationResult
    node_index: dict = field(default_factory=dict)


def enumerate_support_tau_tilting(algebra, cap: int = 10000, seed: int = 0,
                                  threads: int = 1,
                                  rng=None) -> PairEnumeration:
    enum = enumerate_two_term_silting(algebra, cap, seed, threads)
    pairs = []
    node_index = {}
    for k, node in enumerate(enum.nodes):
        pverts = []
        mods = []
        for i in sorted(node):
            item = enum.registry.items[i]
            if not item.deg0:
                pverts.append(item.deg1[0])
            else:
                mods.append(item.h0())
        pair = make_pair(algebra, mods, pverts)
        pair.validate_basic()
        if not is_support_tau_tilting_pair(pair, rng):
            raise TheoremViolationError(
                "a silting node transported to a non-tau-tilting pair"
            )
        node_index[node] = k
        pairs.append(pair)
    return PairEnumeration(algebra, pairs, enum.status, enum, node_index)


def enumerate_nu_stable(algebra, cap: int = 10000, seed: int = 0,
                        threads: int = 1, rng=None) -> PairEnumeration:
    """Stable pairs by two independent routes: filtering the pair
    enumeration by stability, and filtering the silting enumeration by the
    tilting criterion.  The index sets must agree."""
    selfinjective_data(algebra)
    base = enumerate_support_tau_tilting(algebra, cap, seed, threads, rng)
    by_stability = [k for k, pair in enumerate(base.pairs)
                    if is_nu_stable_pair(pair, rng)]
    by_tilting = [k for k, node in enumerate(base.silting.nodes)
                  if base.silting.is_node_tilting(node)]
    if by_stability != by_tilting:
        raise TheoremViolationError(
            "stable-pair route and tilting-complex route disagree"
        )
    picked = [base.pairs[k] for k in by_stability]
    index = {base.silting.nodes[k]: i for i, k in enumerate(by_stability)}
    return PairEnumeration(algebra, picked, base.status, base.silting, index)


# -- torsion classes ------------------------------------------------------------


def fac_equal(x: Rep, y: Rep) -> bool:
    """Whether x and y generate the same quotient-closed class."""
    return fac_contains(x, y) and fac_contains(y, x)


def is_ext_projective_in_fac(m: Rep, x: Rep) -> bool:
    """Whether extensions of m by anything generated by x split, via the
    vanishing of Hom(x, tau m)."""
    if not fac_contains(x, m):
        raise NotInFacError("the module is not generated by x")
    return module_hom_dim(x, tau(m)) == 0


def nu_stable_torsion_check(x: Rep, rng=None) -> bool:
    """Whether x and its Nakayama image generate the same class."""
    selfinjective_data(x.algebra)
    return fac_equal(x, nu_module(x))


# -- the obstruction battery ----------------------------------------------------


def gorenstein_injdim_le1(algebra) -> bool:
    """Injective dimension of the regular module at most 1 on both sides,
    read off from the second syzygy of the dual over the opposite ring."""

    def side(alg):
        m = dual(regular(alg))
        first, _, _, _ = syzygy(m)
        second, _, _, _ = syzygy(first)
        return second.is_zero()

    return side(algebra) and side(algebra.opposite())


@dataclass
class ObstructionReport:
    """Outcome of the necessary conditions for being 2-Calabi-Yau tilted.

    checks maps each condition name to PASS, FAIL, or SKIPPED; the verdict
    is OBSTRUCTED when any check fails, INCONCLUSIVE-TRUNCATED when a
    needed enumeration hit its cap, and CONSISTENT otherwise.  CONSISTENT
    is not a certificate: the conditions are necessary, never sufficient.
    """

    checks: dict
    verdict: str
    details: list
    truncated: bool


CHECK_GORENSTEIN = "gorenstein-injective-dimension"
CHECK_TAU_MINUS = "tau-minus-coincidence"
CHECK_NU_TRANSLATE = "stable-pair-translate-symmetry"


def two_cy_obstruction_report(algebra, cap: int = 10000, seed: int = 0,
                              threads: int = 1, rng=None) -> ObstructionReport:
    checks = {}
    details = []
    truncated = False

    checks[CHECK_GORENSTEIN] = "PASS" if gorenstein_injdim_le1(algebra) else "FAIL"
    if checks[CHECK_GORENSTEIN] == "FAIL":
        details.append("the regular module has injective dimension above 1")

    enum = enumerate_support_tau_tilting(algebra, cap, seed, threads, rng)
    op_enum = enumerate_support_tau_tilting(algebra.opposite(), cap, seed,
                                            threads, rng)
    truncated = enum.status == "TRUNCATED" or op_enum.status == "TRUNCATED"

    coincide = True
    for pair in enum.pairs:
        if not is_support_tau_minus_tilting(list(pair.modules), algebra, rng):
            coincide = False
            details.append(
                "a support tau-tilting module is not support tau-minus-tilting"
            )
            break
    if coincide:
        for op_pair in op_enum.pairs:
            back = STPair(algebra, tuple(dual(m) for m in op_pair.modules),
                          op_pair.pverts)
            if not is_support_tau_tilting_pair(back, rng):
                coincide = False
                details.append(
                    "a support tau-minus-tilting module is not support "
                    "tau-tilting"
                )
                break
    checks[CHECK_TAU_MINUS] = "PASS" if coincide else "FAIL"

    try:
        selfinjective_data(algebra)
        selfinjective = True
    except NotSelfinjectiveError:
        selfinjective = False
    if not selfinjective:
        checks[CHECK_NU_TRANSLATE] = "SKIPPED"
    else:
        symmetric = True
        for pair in enum.pairs:
            if not is_nu_stable_pair(pair, rng):
                continue
            x = pair.module_sum()
            if not are_isomorphic(tau(x), tau_minus(x), rng):
                symmetric = False
                details.append(
                    "a stable pair has non-isomorphic forward and backward "
                    "translates"
                )
                break
        checks[CHECK_NU_TRANSLATE] = "PASS" if symmetric else "FAIL"

    if any(v == "FAIL" for v in checks.values()):
        verdict = "OBSTRUCTED"
    elif truncated:
        verdict = "INCONCLUSIVE-TRUNCATED"
    else:
        verdict = "CONSISTENT"
    return ObstructionReport(checks, verdict, details, truncated)
