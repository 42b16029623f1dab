"""Exception hierarchy shared by every layer of the toolchain."""


class NeuronDiagramError(Exception):
    """Base class for all errors raised by ncause."""


# -- values -----------------------------------------------------------------

class DomainError(NeuronDiagramError):
    """A value does not belong to the expected domain."""


class EmptyDomain(DomainError):
    pass


class DuplicateCase(DomainError):
    pass


class UnknownCase(DomainError):
    pass


# -- graph structure --------------------------------------------------------

class ValidationError(NeuronDiagramError):
    pass


class CycleError(ValidationError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("cycle: " + " -> ".join(self.cycle))


class DuplicateName(ValidationError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"duplicate neuron name {name!r}")


class UnknownNeuron(ValidationError):
    def __init__(self, name, referenced_by=None):
        self.name = name
        self.referenced_by = referenced_by
        where = f" (referenced by {referenced_by!r})" if referenced_by else ""
        super().__init__(f"unknown neuron {name!r}{where}")


class EmptyTerminals(ValidationError):
    def __init__(self):
        super().__init__("graph has no terminal neurons")


class NameNotFound(NeuronDiagramError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"no neuron named {self.name!r}"


class ArityError(NeuronDiagramError):
    def __init__(self, expected, got, what="input values"):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} {what}, got {got}")


# -- descriptions -----------------------------------------------------------

class BadThreshold(NeuronDiagramError):
    pass


class UndecoratableInput(NeuronDiagramError):
    pass


class DomainMismatch(NeuronDiagramError):
    pass


class UnknownBuilder(NeuronDiagramError):
    pass


# -- semantics --------------------------------------------------------------

class ArityTooLarge(NeuronDiagramError):
    pass


class BlowupError(NeuronDiagramError):
    """Enumerating every input tuple would exceed the configured limit."""
