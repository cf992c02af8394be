class InputError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    pass


# -- input errors --

class MalformedInput(InputError):
    pass


class UnknownElement(InputError, KeyError):
    pass


class SymbolicUnsupported(InputError):
    pass


class MalformedTranscript(InputError):
    pass


class SizeLimit(InputError):
    pass


class NotAGroup(InputError):
    pass


class InvalidTree(InputError):
    pass


class EmptyLevel(InputError):
    pass


class NotCofinal(InputError):
    pass


class UnmappedFiber(InputError, KeyError):
    pass


# -- invariant violations --

class NotDirected(InvariantViolation):
    def __init__(self, p: str, q: str):
        self.pair = (p, q)
        super().__init__(f"No upper bound for the pair ({p}, {q}).")


class NoBound(InvariantViolation):
    pass


class EmptyFiber(InvariantViolation):
    pass


class NonTotalMap(InvariantViolation):
    pass


class CoherenceViolation(InvariantViolation):
    def __init__(self, p: str, q: str, r: str, message: str = None):
        self.triple = (p, q, r)
        if message is None:
            message = f"f_{{{p},{q}}} o f_{{{q},{r}}} != f_{{{p},{r}}}"
        super().__init__(f"Coherence violated at {p} <= {q} <= {r}: {message}")


class Incoherent(InvariantViolation):
    def __init__(self, p: str, q: str, message: str = None):
        self.pair = (p, q)
        if message is None:
            message = f"h_{{{p},{q}}}(g_{q}) != g_{p}"
        super().__init__(f"Incoherent family at {p} <= {q}: {message}")


class NotAHomomorphism(InvariantViolation):
    pass


class Unstable(InvariantViolation):
    pass


class NotSeparable(InvariantViolation):
    pass


class TranslationFormViolated(InvariantViolation):
    pass


class ExponentOverflow(InvariantViolation, OverflowError):
    pass
