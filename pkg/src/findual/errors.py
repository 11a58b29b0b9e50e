"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to.
"""


class FindualError(Exception):
    exit_code = 2


class InputError(FindualError, ValueError):
    """Malformed input: bad index, non-upset, unparsable file."""
    exit_code = 2


class DomainError(FindualError, ValueError):
    """Input is well formed but outside the operation's domain."""
    exit_code = 2


class PreconditionError(DomainError):
    pass


class WellDefinednessError(DomainError):
    """A partition or kernel is incompatible with the structure it acts on."""


class CapacityError(FindualError):
    exit_code = 3

    def __init__(self, what, size, bound):
        super().__init__(f"{what}: size {size} exceeds bound {bound}")
        self.size = size
        self.bound = bound
