"""A stable pair over the preprojective algebra of the A3 graph whose
forward and backward translates differ, and the report that flags the
algebra for it.

Selfinjectivity alone does not make the two translates of a stable pair
agree.  That symmetry holds when the algebra is the endomorphism ring of
a cluster-tilting object in a 2-Calabi-Yau category, so the asymmetric
pair below obstructs this algebra from arising that way.

Run from the repository root:

    python3 demos/preprojective_obstruction.py
"""

from tautilt import (
    are_isomorphic,
    decompose,
    is_nu_stable_pair,
    is_selfinjective,
    is_support_tau_tilting_pair,
    make_pair,
    module_expr_string,
    parse_algebra_text,
    parse_module_expr,
    tau,
    tau_minus,
    two_cy_obstruction_report,
)

ALGEBRA = """
# preprojective algebra of the A3 graph: doubled quiver, mesh relations
field p=32003
vertices 3
arrow a 1 -> 2
arrow astar 2 -> 1
arrow b 2 -> 3
arrow bstar 3 -> 2
relations:
a*astar = 0
bstar*b = 0
astar*a - b*bstar = 0
"""

alg = parse_algebra_text(ALGEBRA)
print(f"dimension {alg.dim}, selfinjective: {is_selfinjective(alg)}")

# The middle projective together with its two quotients by a single
# arrow.  The Nakayama permutation swaps the outer vertices and fixes the
# middle one, and the sum of the three summands is fixed by the functor.
parts = [parse_module_expr(alg, s) for s in ("P(2)", "P(2)/<astar>", "P(2)/<b>")]
pair = make_pair(alg, parts, ())
print("X =", " + ".join(module_expr_string(m) for m in pair.modules))
print(f"support tau-tilting: {is_support_tau_tilting_pair(pair)}")
print(f"stable: {is_nu_stable_pair(pair)}")


def names(module) -> str:
    return " + ".join(module_expr_string(s) for s in decompose(module)) or "0"


x = pair.module_sum()
fwd, bwd = tau(x), tau_minus(x)
print(f"\ntau X   = {names(fwd)}")
print(f"tau^- X = {names(bwd)}")
print(f"isomorphic: {are_isomorphic(fwd, bwd)}")

# The same asymmetry seen wholesale: the necessary conditions for the
# translate symmetry to hold everywhere fail for this algebra.
report = two_cy_obstruction_report(alg)
print(f"\nreport verdict: {report.verdict}")
for name, outcome in report.checks.items():
    print(f"  {name}: {outcome}")
for line in report.details:
    print(f"  note: {line}")
