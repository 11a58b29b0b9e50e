"""Bitmask helpers. Element-sets are ints internally, frozensets at the API."""


def to_mask(s):
    if isinstance(s, int):
        return s
    m = 0
    for i in s:
        m |= 1 << i
    return m


def iter_bits(m):
    i = 0
    while m:
        if m & 1:
            yield i
        m >>= 1
        i += 1


def to_set(m):
    return frozenset(iter_bits(m))


def popcount(m):
    return bin(m).count("1")


def lowest(m):
    """Index of the least set bit, or -1 for 0."""
    return (m & -m).bit_length() - 1


def check_range(s, size):
    from .errors import InputError
    if isinstance(s, int):
        if s < 0 or s >> size:
            raise InputError(f"element mask {s:#x} out of range for size {size}")
        return s
    m = 0
    for i in s:
        if not isinstance(i, int) or not 0 <= i < size:
            raise InputError(f"element {i!r} out of range 0..{size - 1}")
        m |= 1 << i
    return m
