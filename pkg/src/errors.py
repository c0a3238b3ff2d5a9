"""Exception hierarchy; every error knows its CLI exit code"""
from typing import Any, Dict


class BettiEngineError(Exception):
    """Base error carrying an exit code and structured details"""

    exit_code = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_record(self) -> Dict[str, Any]:
        """Machine-readable error record"""
        record: Dict[str, Any] = {
            "success": False,
            "error": type(self).__name__,
            "message": self.message,
            "exit_code": self.exit_code,
        }
        record.update({k: _jsonable(v) for k, v in self.details.items()})
        return record


def _jsonable(value: Any) -> Any:
    labels = getattr(value, "labels", None)
    if isinstance(labels, tuple):
        return list(labels)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# ============================================================================
# INPUT ERRORS (exit 2)
# ============================================================================

class InputError(BettiEngineError):
    exit_code = 2


class ConfigError(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int = None, **details: Any):
        text = f"line {line}: {message}" if line is not None else message
        super().__init__(text, line=line, **details)
        self.line = line


class BuildingSetError(InputError):
    """A family of sets fails the building-set axioms"""


class EmptyMember(BuildingSetError):
    def __init__(self):
        super().__init__("building sets cannot contain the empty set")


class MissingSingleton(BuildingSetError):
    def __init__(self, label: int):
        super().__init__(f"missing singleton {{{label}}}", label=label)
        self.label = label


class UnionAxiomViolated(BuildingSetError):
    def __init__(self, first, second):
        super().__init__(
            f"{first} and {second} intersect but their union {first | second} is not a member",
            first=first,
            second=second,
        )
        self.first = first
        self.second = second


class LabelOutsideGround(BuildingSetError):
    def __init__(self, label: int, ground):
        super().__init__(f"label {label} is not in the ground set {ground}", label=label, ground=ground)
        self.label = label


class LabelOutOfRange(InputError):
    def __init__(self, label: int, max_label: int):
        super().__init__(f"label {label} outside the supported range 1..{max_label}", label=label)
        self.label = label


class InvalidGraph(InputError):
    pass


class LoopEdge(InvalidGraph):
    def __init__(self, vertex: int):
        super().__init__(f"loop edge at vertex {vertex}", vertex=vertex)
        self.vertex = vertex


# ============================================================================
# PRECONDITION ERRORS (exit 3)
# ============================================================================

class PreconditionError(BettiEngineError):
    exit_code = 3


class NotChordal(PreconditionError):
    def __init__(self, member=None, tail=None):
        message = "building set is not chordal"
        if member is not None:
            message += f": member {member} lacks its upper tail {tail}"
        super().__init__(message, member=member, tail=tail)


class NotConnected(PreconditionError):
    def __init__(self, components=()):
        super().__init__("building set is not connected (the ground set is not a member)",
                         components=list(components))


class OddGround(PreconditionError):
    pass


class Unbounded(PreconditionError):
    def __init__(self, component=None):
        super().__init__(f"the poset has no top element: odd component {component}", component=component)


class EmptyInterval(PreconditionError):
    pass


class NotAlternatingBPermutation(PreconditionError):
    pass


class ChainHasDecreasingPosition(PreconditionError):
    pass


class VertexNotInBuildingSet(PreconditionError):
    def __init__(self, vertex, reason: str = "is not a member of the building set"):
        super().__init__(f"{vertex} {reason}", vertex=vertex)


# ============================================================================
# RESOURCE ERRORS (exit 4)
# ============================================================================

class ResourceLimitError(BettiEngineError):
    exit_code = 4


class GroundTooLarge(ResourceLimitError):
    def __init__(self, size: int, limit: int, what: str = "enumeration"):
        super().__init__(f"ground set of size {size} exceeds the {what} bound {limit}", size=size, limit=limit)


class TooLarge(ResourceLimitError):
    pass


# ============================================================================
# VERIFICATION FAILURES (exit 1)
# ============================================================================

class VerificationFailure(BettiEngineError):
    pass


class MethodMismatch(VerificationFailure):
    pass
