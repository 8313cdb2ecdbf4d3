"""Exception hierarchy.

Every error raised by the library derives from :class:`SchemeError`. The CLI
maps the three families below onto distinct exit codes:

* :class:`InputError` -- malformed input or a table that is not a scheme (2)
* :class:`PreconditionError` -- valid scheme, but an operation's hypothesis
  fails, e.g. class 1 or a repeated dual-eigenvalue row (3)
* :class:`NumericalError` -- the numerics disagree with a theorem (1)
"""


class SchemeError(Exception):
    """Base class for all assocscheme errors."""


class InputError(SchemeError):
    pass


class PreconditionError(SchemeError):
    pass


class NumericalError(SchemeError):
    pass


class ParseError(InputError):
    def __init__(self, message, *, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if field is not None:
            where.append(f"field {field!r}")
        if line is not None:
            where.append(f"line {line}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class NotAScheme(InputError):
    """Two pairs in the same relation see different triangle counts."""

    def __init__(self, ijk, witnesses, counts):
        self.ijk = tuple(ijk)
        self.witnesses = tuple(tuple(w) for w in witnesses)
        self.counts = tuple(counts)
        i, j, k = self.ijk
        (x1, y1), (x2, y2) = self.witnesses
        super().__init__(
            f"p_{{{i}{j}}}^{k} is not well defined: pair ({x1},{y1}) gives "
            f"{counts[0]} but pair ({x2},{y2}) gives {counts[1]}"
        )


class BadDiagonal(InputError):
    pass


class NotSymmetric(InputError):
    pass


class EmptyRelation(InputError):
    pass


class Disconnected(InputError):
    pass


class TooLarge(InputError):
    pass


class UnknownName(InputError):
    pass


class ClassTooSmall(PreconditionError):
    """Raised when an operation needs class d >= 2."""


class NotDistinct(PreconditionError):
    """A (dual) eigenvalue row has two entries closer than the tolerance."""

    def __init__(self, values, pair, tol):
        self.values = tuple(float(v) for v in values)
        self.pair = tuple(pair)
        a, b = pair
        super().__init__(
            f"entries {a} and {b} of {self.values} coincide within tol={tol:g}"
        )


class DegenerateNodes(PreconditionError):
    pass


class DegenerateSplit(NumericalError):
    pass


class KreinViolation(NumericalError):
    pass


class AmbiguousWitness(NumericalError):
    """More than one index l satisfies the ratio criterion."""

    def __init__(self, candidates, K):
        self.candidates = tuple(int(c) for c in candidates)
        self.K = tuple(float(k) for k in K)
        super().__init__(
            f"ratio criterion matched several witnesses l={self.candidates}; "
            "tighten the tolerance"
        )
