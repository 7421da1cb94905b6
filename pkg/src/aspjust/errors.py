"""Exception hierarchy shared by every layer of the engine."""


class AspJustError(Exception):
    """Base class for all errors raised by aspjust."""


class ParseError(AspJustError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class GroundingError(AspJustError):
    pass


class InconsistentProgramError(AspJustError):
    """The program has no consistent answer set."""


class NotAnAnswerSetError(AspJustError, ValueError):
    pass


class LiteralNotInLanguageError(AspJustError, KeyError):
    def __init__(self, literal):
        self.literal = literal
        super().__init__(f"literal {literal} is not in the language of the program")

    def __str__(self):
        return self.args[0]


class PolarityError(AspJustError, ValueError):
    """A positive justification was requested for a literal outside S_NAF, or vice versa."""


class UnknownArgumentError(AspJustError, KeyError):
    def __init__(self, argument_id):
        self.argument_id = argument_id
        super().__init__(f"unknown argument id {argument_id!r}")

    def __str__(self):
        return self.args[0]


class TreeConstructionError(AspJustError, ValueError):
    pass
