"""Exception hierarchy.

``InputError`` subclasses map to CLI exit code 1, ``BudgetError`` subclasses
to exit code 2.
"""


class ToricMJError(Exception):
    pass


class InputError(ToricMJError, ValueError):
    pass


class BudgetError(ToricMJError, RuntimeError):
    pass


class EmptyGenerators(InputError):
    pass


class NonPointedCone(InputError):
    pass


class NotFullDimensional(InputError):
    pass


class NotInKernel(InputError):
    def __init__(self, u):
        self.u = tuple(u)
        super().__init__(f"vector {list(self.u)} is not in the kernel of phi^gp")


class NotInSemigroup(InputError):
    def __init__(self, m):
        self.m = tuple(m)
        super().__init__(f"{list(self.m)} is not an element of the semigroup")


class ExponentNotInSemigroup(NotInSemigroup):
    pass


class InsufficientBasis(InputError):
    pass


class ElementOutsideSemigroup(ToricMJError):
    pass


class NegativeLambda(InputError):
    pass


class EmptySet(InputError):
    pass


class LimitExceeded(BudgetError):
    pass


class RefinementBudgetExceeded(BudgetError):
    pass
