"""Exception hierarchy shared by every module."""


class StlcError(Exception):
    pass


class ParseError(StlcError):
    """Malformed surface text.  ``pos`` is a 0-based character offset."""

    def __init__(self, message, pos, text=None):
        self.message = message
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")

    def render(self):
        if self.text is None:
            return str(self)
        return f"{self}\n  {self.text}\n  {' ' * self.pos}^"


class ElaborationError(StlcError):
    def __init__(self, message, span=None):
        self.message = message
        self.span = span
        where = f" at {span[0]}..{span[1]}" if span is not None else ""
        super().__init__(f"{message}{where}")


class UnboundVariable(ElaborationError):
    def __init__(self, name, span=None):
        self.name = name
        super().__init__(f"unbound variable {name!r}", span)


class TypeMismatch(ElaborationError):
    def __init__(self, expected, found, span=None):
        self.expected = expected
        self.found = found
        super().__init__(f"type mismatch: expected {expected}, found {found}", span)


class NonArrowApplication(ElaborationError):
    def __init__(self, found, span=None):
        self.found = found
        super().__init__(f"cannot apply a term of non-function type {found}", span)


class IllScoped(StlcError):
    pass


class IllTyped(StlcError):
    pass


class NotAValue(StlcError):
    pass


class IndexOutOfRange(StlcError, IndexError):
    pass


class InvalidEnvironment(StlcError):
    pass


class InvariantViolation(StlcError, AssertionError):
    pass


class FuelExhausted(StlcError):
    def __init__(self, fuel, log):
        self.fuel = fuel
        self.log = log
        super().__init__(f"fuel exhausted after {fuel} steps ({log.machine})")


class GenerationFailed(StlcError):
    def __init__(self, goal, depth):
        self.goal = goal
        self.depth = depth
        super().__init__(f"cannot generate a closed term of type {goal} within depth {depth}")
