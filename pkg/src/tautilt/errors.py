"""Exception types shared across the package.

Every predicate that has a precondition raises one of these instead of
returning a junk value, so callers (and the command line driver) can
distinguish "false" from "not applicable".
"""


class TautiltError(Exception):
    """Base class for all package errors."""


class ParseError(TautiltError):
    """Malformed algebra file, module expression, or element expression."""


class MixedEndpointsError(TautiltError):
    """A relation mixes paths with different sources or targets."""


class NonAdmissibleError(TautiltError):
    """The relation ideal does not contain any radical power up to the cap,
    or a relation involves a path of length < 2."""


class FieldTooSmallError(TautiltError):
    """The prime is too small for the trace certificates used here; the
    session requires p > 4 * dim(algebra)**2."""


class AlgebraMismatchError(TautiltError):
    """Two objects that must live over the same algebra do not."""


class ZeroModuleError(TautiltError):
    """Operation undefined on the zero module."""


class RandomnessExhaustedError(TautiltError):
    """A randomized splitting routine failed its trial budget.  With the
    default prime this indicates a module whose endomorphism ring has a
    residue division ring bigger than the prime field."""


class NotSelfinjectiveError(TautiltError):
    """Operation requires a selfinjective algebra."""


class NotSiltingError(TautiltError):
    """Operation requires a two-term silting complex."""


class NotSupportTauTiltingError(TautiltError):
    """Operation requires a support tau-tilting pair."""


class NotInFacError(TautiltError):
    """Ext-projectivity asked for a module outside the torsion class."""


class NotCompletableError(TautiltError):
    """A tau-rigid module whose zero-support vertices do not complete it
    to a support tau-tilting pair."""


class MutationAmbiguousError(TautiltError):
    """Silting mutation did not produce exactly one two-term candidate;
    this is an internal assertion and should never fire."""


class TheoremViolationError(TautiltError):
    """A runtime cross-check of a structural identity failed; this is an
    internal assertion and should never fire."""
