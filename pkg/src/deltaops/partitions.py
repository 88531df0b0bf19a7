"""Integer partitions and compositions as plain tuples."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def is_partition(mu) -> bool:
    return all(a >= b for a, b in zip(mu, mu[1:])) and all(p > 0 for p in mu)


def check_partition(mu: tuple) -> tuple:
    mu = tuple(mu)
    if not is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    return mu


def conjugate(mu: tuple) -> tuple:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > c) for c in range(mu[0]))


def hook(a: int, m: int) -> tuple:
    """The hook partition (a+1, 1^(m-a-1)) of m."""
    if not 0 <= a < m:
        raise ValueError("hook arm out of range")
    return (a + 1,) + (1,) * (m - a - 1)


def compositions(n: int, length: int | None = None) -> tuple:
    """Compositions of n (positive parts), optionally of fixed length."""
    if n == 0:
        return ((),) if length in (None, 0) else ()
    out = []
    if length is None:
        for first in range(1, n + 1):
            for rest in compositions(n - first):
                out.append((first,) + rest)
    else:
        if length < 1:
            return ()
        if length == 1:
            return ((n,),) if n >= 1 else ()
        for first in range(1, n - length + 2):
            for rest in compositions(n - first, length - 1):
                out.append((first,) + rest)
    return tuple(out)


def sort_to_partition(alpha) -> tuple:
    return tuple(sorted(alpha, reverse=True))


def partition_text(mu: tuple) -> str:
    return "(" + ",".join(str(p) for p in mu) + ")"


def partition_from_text(text: str) -> tuple:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad partition text {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    return tuple(int(p) for p in body.split(","))


def reverse_lex_sorted(mus) -> list:
    """Partitions sorted reverse-lexicographically ((n) first, (1^n) last)."""
    return sorted(mus, key=lambda mu: tuple(-p for p in mu))
