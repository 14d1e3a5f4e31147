"""Cardinality-ordered exhaustive subset search, vectorised with numpy.

Within a cardinality the candidates are scanned in increasing bitmask
order, which is colex order on vertex sets, so the first accepted mask is
the colex-first witness.
"""

from __future__ import annotations

import time
from functools import lru_cache
from itertools import combinations, islice
from typing import Callable

import numpy as np

from .errors import CapExceeded, Timeout
from .graph import bits

Accept = Callable[[np.ndarray], np.ndarray]

TABLE_LIMIT = 22
CHUNK = 1 << 15


class Budget:
    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise Timeout("time budget exhausted")


def check_cap(n: int, cap: int | None, what: str):
    if cap is not None and n > cap:
        raise CapExceeded(f"{what}: n={n} exceeds cap {cap}")


def hits_all(family: list[int]) -> Accept:
    """Acceptor for 'mask meets every member of ``family``'."""
    fam = np.unique(np.array(family, dtype=np.int64)) if family else np.zeros(0, dtype=np.int64)

    def accept(masks: np.ndarray) -> np.ndarray:
        if fam.size == 0:
            return np.ones(masks.shape[0], dtype=bool)
        return ((masks[:, None] & fam[None, :]) != 0).all(axis=1)

    return accept


def _expand(compressed: np.ndarray, free: list[int]) -> np.ndarray:
    out = np.zeros_like(compressed)
    for i, v in enumerate(free):
        out |= ((compressed >> i) & 1) << v
    return out


@lru_cache(maxsize=64)
def _levels_table(free: tuple[int, ...]):
    # expansion preserves order, so the table is already sorted by mask value
    compressed = np.arange(1 << len(free), dtype=np.int64)
    return _expand(compressed, list(free)), np.bitwise_count(compressed)


def _combination_chunks(free: list[int], j: int):
    it = combinations(free, j)
    while True:
        block = list(islice(it, CHUNK))
        if not block:
            return
        arr = np.array(block, dtype=np.int64).reshape(len(block), j)
        yield np.bitwise_or.reduce(np.int64(1) << arr, axis=1) if j else np.zeros(len(block), dtype=np.int64)


def minimum_subset(
    n: int,
    accept: Accept,
    *,
    forced: int = 0,
    start: int = 0,
    stop: int | None = None,
    time_budget: float | None = None,
) -> tuple[int, int] | None:
    """Smallest k in [start, stop] with an accepted k-set containing ``forced``.

    Returns ``(k, witness_mask)`` or ``None`` when nothing up to ``stop``
    is accepted.
    """
    budget = Budget(time_budget)
    stop = n if stop is None else stop
    free = [v for v in range(n) if not forced >> v & 1]
    nforced = bin(forced).count("1")
    start = max(start, nforced)
    table = _levels_table(tuple(free)) if len(free) <= TABLE_LIMIT else None
    for k in range(start, stop + 1):
        j = k - nforced
        if j > len(free):
            break
        budget.check()
        if table is not None:
            masks = table[0][table[1] == j] | forced
            for lo in range(0, masks.shape[0], CHUNK):
                chunk = masks[lo:lo + CHUNK]
                ok = accept(chunk)
                if ok.any():
                    return k, int(chunk[np.argmax(ok)])
                budget.check()
        else:
            best = None
            for chunk in _combination_chunks(free, j):
                chunk = chunk | forced
                ok = accept(chunk)
                if ok.any():
                    cand = int(chunk[ok].min())
                    best = cand if best is None else min(best, cand)
                budget.check()
            if best is not None:
                return k, best
    return None


def all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def mask_members(mask: int) -> list[int]:
    return list(bits(mask))
