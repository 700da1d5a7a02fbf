"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the service layer
and the CLI can map failures to HTTP payloads and exit statuses without
string matching.
"""


class LayerlenError(Exception):
    """Base class for all package errors."""

    code = "internal"


class ParseError(LayerlenError):
    """Malformed algebra/module text or functor expression."""

    code = "parse"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedRelation(LayerlenError):
    """Relation terms are not parallel paths of length >= 2."""

    code = "parse"


class RelationViolated(LayerlenError):
    """A module's arrow matrices do not satisfy an algebra relation."""

    code = "parse"


class NotAdmissibleWithinCap(LayerlenError):
    """No power of the arrow ideal vanishes within the path-length cap."""

    code = "usage"


class AlgebraMismatch(LayerlenError):
    """Operation mixed objects attached to different algebras."""

    code = "usage"


class ContractViolation(LayerlenError):
    """An operation received data violating its preconditions."""

    code = "usage"


class UnknownVertex(LayerlenError):
    code = "usage"


class BudgetExceeded(LayerlenError):
    """Enumeration work estimate above the configured budget."""

    code = "budget"


class HypothesisFailed(LayerlenError):
    """A bound theorem's hypothesis does not hold; carries the report."""

    code = "hypothesis"

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
