"""Streaming generation of the figure-figure triple (n, a_n, b_n, u_n).

The sequence pair is pinned down by three conditions: the a-values and
b-values together cover every positive integer exactly once, b lists the
consecutive differences of a, and a is lexicographically least (which
forces b to be increasing).  Starting from a_1 = 1 and b_1 = 2, each step
is therefore greedy:

    a_{n+1} = a_n + b_n
    b_{n+1} = smallest integer above b_n that is not an a-value
    u_n     = b_n - n   (the counting companion)

The only membership questions ever asked are about a-values just above
the current b.  Because b grows linearly while a grows quadratically,
those live at indices near sqrt(2 n), so the stream retains just that
leading slice of a-values (about u_n + 2 entries) and regrows it from the
recurrence a_{m+1} = a_m + m + u_m whenever the skip cursor catches up.
Memory therefore stays O(sqrt n) no matter how far the stream runs, and
each step costs amortized O(1) integer operations.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

__all__ = ["SEQUENCE_IDS", "Triple", "TripleStream", "triples", "value_at"]

SEQUENCE_IDS = ("a", "b", "u")


class Triple(NamedTuple):
    """One row of the joint stream: the index and all three values there."""

    n: int
    a: int
    b: int
    u: int


class TripleStream:
    """Stateful producer of Triple rows in index order, one owner at a time.

    Two fresh instances always produce identical streams; there is no
    hidden configuration and no randomness.  The instance is also a plain
    infinite iterator, so ``for row in TripleStream()`` works.
    """

    def __init__(self) -> None:
        self._n = 0
        self._a = 0
        self._b = 0
        self._u = 0
        # Leading a-values a_1..a_M.  Invariant once started: strictly
        # increasing, final entry above the current b, length <= u_n + 2.
        self._prefix: list[int] = []
        self._frontier_u = 0  # u_M at the prefix frontier M = len(_prefix)
        self._skip = 0  # prefix position of the smallest a-value > b_n

    def _grow_prefix(self) -> None:
        # a_{M+1} = a_M + b_M with b_M = M + u_M.  The frontier u then moves
        # by 0 or 1, decided by the counting window against a_{u+1}, which
        # sits well inside the slice already built.
        prefix = self._prefix
        m = len(prefix)
        prefix.append(prefix[m - 1] + m + self._frontier_u)
        if m + 1 > prefix[self._frontier_u] - (self._frontier_u + 1):
            self._frontier_u += 1

    def next_triple(self) -> Triple:
        """Advance one index and return the new row."""
        if self._n == 0:
            self._n, self._a, self._b, self._u = 1, 1, 2, 1
            self._prefix = [1]
            self._frontier_u = 1
            self._skip = 1
            while self._prefix[-1] <= self._b:
                self._grow_prefix()
            return Triple(1, 1, 2, 1)
        a_next = self._a + self._b
        candidate = self._b + 1
        # Consecutive a-values differ by a b-value, hence by at least 2, so
        # at most one skip fires per step; the loop also regrows the prefix
        # when the cursor reaches its end.
        while True:
            if self._skip == len(self._prefix):
                self._grow_prefix()
            if self._prefix[self._skip] != candidate:
                break
            candidate += 1
            self._skip += 1
        self._n += 1
        self._a = a_next
        self._b = candidate
        self._u = candidate - self._n
        # Keep an a-value above b on hand so the cursor and the counting
        # window stay inside the slice.
        while self._prefix[-1] <= self._b:
            self._grow_prefix()
        return Triple(self._n, self._a, self._b, self._u)

    def take(self, count: int) -> list[Triple]:
        """The next `count` rows as a list (count >= 1)."""
        if count < 1:
            raise ValueError("count must be >= 1")
        return [self.next_triple() for _ in range(count)]

    def early_a(self, m: int) -> int:
        """a_m for an index still inside the retained leading slice.

        Valid for 1 <= m <= u_n + 1 at every point of the stream (often one
        index further); raises IndexError beyond the slice.
        """
        if m < 1:
            raise ValueError("a-index must be >= 1")
        return self._prefix[m - 1]

    @property
    def a_prefix(self) -> tuple[int, ...]:
        """Snapshot of the retained leading a-values (a_1, a_2, ...)."""
        return tuple(self._prefix)

    def __iter__(self) -> Iterator[Triple]:
        return self

    def __next__(self) -> Triple:
        return self.next_triple()


def triples() -> Iterator[Triple]:
    """A fresh infinite iterator over the joint stream."""
    return TripleStream()


def value_at(seq: str, n: int) -> int:
    """The n-th term of sequence "a", "b", or "u", streamed from the start."""
    if seq not in SEQUENCE_IDS:
        raise ValueError(f"unknown sequence id {seq!r}, expected one of {SEQUENCE_IDS}")
    if n < 1:
        raise ValueError("index must be >= 1")
    stream = TripleStream()
    for _ in range(n - 1):
        stream.next_triple()
    return getattr(stream.next_triple(), seq)
