"""SplitMix64 pseudorandom generator.

Every random choice in the package goes through this generator so that runs
are reproducible across platforms and languages. The algorithm is Vigna's
SplitMix64: a Weyl sequence with increment ``0x9E3779B97F4A7C15`` passed
through a xor-shift-multiply finalizer. Reference outputs for seed 0 start
``0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F``.

Derived quantities:

* ``bit()`` is the top bit of the next output.
* ``below(k)`` is ``next() % k`` (modulo bias is accepted; it is below
  ``k / 2**64``).
* ``shuffle`` is Fisher-Yates from the last index down, drawing
  ``below(i + 1)`` at position ``i``.
* ``derive_seed(master, i)`` is output ``i`` (0-based) of a generator seeded
  with ``master``; trial seeds are independent of execution order.
"""

from __future__ import annotations

from typing import MutableSequence, TypeVar

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

T = TypeVar("T")


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return _mix(self.state)

    def bit(self) -> int:
        return self.next() >> 63

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError(f"below() needs a positive bound, got {k}")
        return self.next() % k

    def shuffle(self, items: MutableSequence[T]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(master: int, index: int) -> int:
    """Seed for trial ``index`` under ``master``; depends on nothing else."""
    return _mix((master + (index + 1) * GOLDEN_GAMMA) & MASK64)
