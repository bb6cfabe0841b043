"""Exception hierarchy shared by every module."""


class EqcatError(Exception):
    """Base class; the CLI maps any subclass to exit status 2."""


class ParseError(EqcatError):
    pass


class NotAGroup(EqcatError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"not a group: {axiom} fails at {self.witness}")


class NotAHomomorphism(EqcatError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"not a homomorphism at {self.witness}")


class NotASubgroup(EqcatError):
    pass


class GroupMismatch(EqcatError):
    pass


class NotACategory(EqcatError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"not a category: {axiom} fails at {witness!r}")


class NotAGroupoid(EqcatError):
    def __init__(self, morphism):
        self.morphism = morphism
        super().__init__(f"morphism {morphism!r} is not invertible")


class ActionNotFree(EqcatError):
    def __init__(self, obj):
        self.obj = obj
        super().__init__(f"action is not free at object {obj!r}")


class SizeBudgetExceeded(EqcatError):
    def __init__(self, what, size, budget):
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: size {size} exceeds budget {budget}")


class ShapeMismatch(EqcatError):
    pass


DomainShapeMismatch = ShapeMismatch


class NotInjective(EqcatError):
    pass


class CheckFailure(EqcatError):
    """Raised by the *_check helpers when asked to assert (``strict=True``)."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


MismatchBetweenCharacterizations = CheckFailure
IsoFailure = CheckFailure
EquivalenceFailure = CheckFailure
CrossCheckFailure = CheckFailure
Mismatch = CheckFailure


class UnknownCommand(EqcatError):
    pass
