"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and the process exit
status the command-line front end maps it to.
"""


class NorthcottError(Exception):
    code = "error"
    exit_status = 2


class InvalidInput(NorthcottError, ValueError):
    code = "invalid_input"


class ParseError(InvalidInput):
    code = "parse_error"


class NotMonic(InvalidInput):
    code = "not_monic"


class Reducible(InvalidInput):
    code = "reducible"


class NotPrime(InvalidInput):
    code = "not_prime"


class InvalidEmbedding(InvalidInput):
    code = "invalid_embedding"


class IndexObstruction(NorthcottError):
    """Kummer-Dedekind splitting is refused at primes dividing the index."""

    code = "index_obstruction"


class CapExceeded(NorthcottError):
    code = "cap_exceeded"
    exit_status = 4


class DegreeCapExceeded(CapExceeded):
    code = "degree_cap"


class BudgetExceeded(CapExceeded):
    code = "budget_exceeded"


class Inconclusive(NorthcottError):
    """Raised when a certified comparison cannot be decided at the precision cap."""

    code = "inconclusive"
    exit_status = 3
