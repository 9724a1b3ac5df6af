"""Exception hierarchy shared by every module of the package."""


class CurveCheckError(Exception):
    """Base class; the CLI maps any of these to exit code 2."""


class InvalidInput(CurveCheckError, ValueError):
    """Malformed data: a bad field, a non-symmetric matrix, a parse error."""


class DuplicateLabel(InvalidInput):
    pass


class UnknownLabel(InvalidInput, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DegenerateCore(CurveCheckError, ArithmeticError):
    """The restriction of a form to the eliminated subspace is singular."""


class InvariantViolation(InvalidInput):
    pass


class NotQSingularity(CurveCheckError):
    """Local data that cannot come from a Q-singularity."""


class UnknownType(InvalidInput):
    pass


class NoFixture(CurveCheckError, LookupError):
    pass


class UnresolvedLocalForm(InvalidInput):
    pass


class MissingSides(InvalidInput):
    pass


class MissingData(InvalidInput):
    pass


class MissingMilnorData(MissingData):
    pass
