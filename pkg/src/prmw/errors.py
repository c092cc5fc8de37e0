"""Error types shared by every module."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its point / codeword / subspace cap.

    The message always names the budget that would be required.
    """
