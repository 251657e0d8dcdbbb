"""Exception hierarchy.  Everything raised on purpose derives from TiltlabError."""


class TiltlabError(Exception):
    pass


class QuiverParseError(TiltlabError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class QuiverMismatch(TiltlabError, ValueError):
    pass


class NotRepresentationFinite(TiltlabError):
    pass


class IterationCapExceeded(TiltlabError):
    pass


class DecompositionError(TiltlabError):
    """No splitting endomorphism was found for a module known to decompose."""


class NotTilting(TiltlabError, ValueError):
    pass


class SimpleIsInjective(TiltlabError, ValueError):
    pass


class NotInScope(TiltlabError, ValueError):
    pass


class AdmissibilityViolation(TiltlabError):
    def __init__(self, message: str, witness: object = None):
        self.witness = witness
        super().__init__(message)


class CogenerationViolation(TiltlabError):
    def __init__(self, message: str, witness: object = None):
        self.witness = witness
        super().__init__(message)


class NotBB(TiltlabError, ValueError):
    pass


class TransportError(TiltlabError):
    """The transported construction disagreed with one of its own consistency checks."""
