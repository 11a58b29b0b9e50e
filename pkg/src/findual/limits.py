"""Capacity bound shared by every constructor that can blow up."""
from contextlib import contextmanager
from contextvars import ContextVar

from .errors import CapacityError

DEFAULT_MAX_SIZE = 1 << 20

_max_size = ContextVar("findual_max_size", default=DEFAULT_MAX_SIZE)


def max_size():
    return _max_size.get()


@contextmanager
def capacity(bound):
    token = _max_size.set(int(bound))
    try:
        yield
    finally:
        _max_size.reset(token)


def guard(what, size, bound=None):
    bound = max_size() if bound is None else bound
    if size > bound:
        raise CapacityError(what, size, bound)
