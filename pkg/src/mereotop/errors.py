"""Exception types shared across the engine."""


class MereotopError(Exception):
    """Base class for all engine errors."""


class ModelMismatch(MereotopError):
    """Names from different universes were combined."""


class UnknownObject(MereotopError):
    """An object id does not belong to the model universe."""


class NotIndividual(MereotopError):
    """An operation requiring an individual name received a plural or empty one."""


class EmptyCollection(MereotopError):
    """The fusion of an empty collection does not exist."""


class NotPart(MereotopError):
    """Relative complement taken with respect to a whole that does not contain the part."""


class NoComplement(MereotopError):
    """The complement does not exist (top element, empty value, or full carrier)."""


class DegenerateInterval(MereotopError):
    """An interval with lo >= hi cannot denote a nonempty open set."""


class WholeSpaceComplement(MereotopError):
    """The whole geometric space has no complement."""


class ConcentricPoints(MereotopError):
    """Two coincident points cannot be separated."""


class BudgetInvalid(MereotopError):
    """A subdivision or sampling budget must be at least 1."""


class UnknownSuite(MereotopError):
    """run_suite received a suite name it does not know."""


class GeneratorExhausted(MereotopError):
    """A sample source yielded no valid case."""


class UnknownIdentifier(MereotopError):
    """A query referenced an identifier absent from the scene."""
