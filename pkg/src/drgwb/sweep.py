"""Integrality sweep of k_D and f_D over the alpha = q family at D = 0 mod 6.

Each cell (q, D) is pure, so the grid is mapped over a process pool. Finished
cells are appended to per-process shard files under a content-addressed
directory, which lets an interrupted sweep resume where it stopped.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .params import fD_factors, kD_factors

__all__ = [
    "IntegralityVerdict",
    "product_is_integral",
    "CellResult",
    "SweepResult",
    "evaluate_cell",
    "conjecture_sweep",
    "sweep_cells",
    "CHECKPOINT_ENV",
    "full_value",
]

CHECKPOINT_ENV = "DRGWB_CHECKPOINT_DIR"
_STORE_VERSION = "kD-fD-v1"
_SMALL_PRIMES = [p for p in range(2, 200) if all(p % d for d in range(2, int(p**0.5) + 1))]


@dataclass(frozen=True)
class IntegralityVerdict:
    integral: bool
    # "valuation" when a small prime settled it, "division" otherwise
    method: str
    prime: int | None = None
    num_valuation: int | None = None
    den_valuation: int | None = None


def _valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _tree_product(xs: list[int]) -> int:
    xs = list(xs) or [1]
    while len(xs) > 1:
        xs = [xs[i] * xs[i + 1] if i + 1 < len(xs) else xs[i] for i in range(0, len(xs), 2)]
    return xs[0]


def product_is_integral(prefix: int, factors: list[tuple[int, int]]) -> IntegralityVerdict:
    """Is prefix * prod(num/den) an integer?

    Small primes dividing some denominator are checked first by valuation
    bookkeeping; a prime whose denominator valuation exceeds the numerator's
    is a certificate on its own. Otherwise fall back to one exact division.
    """
    dens = [d for _, d in factors]
    # a zero factor makes the product 0; valuations are meaningless there
    zero = prefix == 0 or any(n == 0 for n, _ in factors)
    for p in () if zero else _SMALL_PRIMES:
        vd = sum(_valuation(d, p) for d in dens)
        if not vd:
            continue
        vn = _valuation(prefix, p) + sum(_valuation(n, p) for n, _ in factors)
        if vd > vn:
            return IntegralityVerdict(False, "valuation", p, vn, vd)
    num = _tree_product([prefix] + [n for n, _ in factors])
    den = _tree_product(dens)
    return IntegralityVerdict(num % den == 0, "division")


@dataclass(frozen=True)
class CellResult:
    q: int
    D: int
    kD_integral: bool
    fD_integral: bool
    kD_verdict: IntegralityVerdict | None = None
    fD_verdict: IntegralityVerdict | None = None

    def record(self) -> str:
        return f"{self.q}\t{self.D}\tkD_int:{int(self.kD_integral)}\tfD_int:{int(self.fD_integral)}"

    @classmethod
    def parse(cls, line: str) -> "CellResult":
        q, D, k, f = line.strip().split("\t")
        if not (k.startswith("kD_int:") and f.startswith("fD_int:")):
            raise ValueError(f"malformed checkpoint record: {line!r}")
        return cls(int(q), int(D), k.endswith("1"), f.endswith("1"))


def evaluate_cell(q: int, D: int) -> CellResult:
    k = product_is_integral(*kD_factors(q, D))
    f = product_is_integral(*fD_factors(q, D))
    return CellResult(q, D, k.integral, f.integral, k, f)


@dataclass
class SweepResult:
    q_max: int
    D_max: int
    cells: list[CellResult] = field(default_factory=list)
    resumed: int = 0

    @property
    def counterexamples_both(self) -> list[tuple[int, int]]:
        """Cells where k_D and f_D are both integers."""
        return [(c.q, c.D) for c in self.cells if c.kD_integral and c.fD_integral]

    @property
    def counterexamples_either(self) -> list[tuple[int, int]]:
        """Cells where at least one of k_D, f_D is an integer."""
        return [(c.q, c.D) for c in self.cells if c.kD_integral or c.fD_integral]

    # the conjunction is the default reading; both are always reported
    counterexamples = counterexamples_both

    def summary(self) -> dict:
        return {
            "q_max": self.q_max,
            "D_max": self.D_max,
            "cells": len(self.cells),
            "kD_integral": sum(c.kD_integral for c in self.cells),
            "fD_integral": sum(c.fD_integral for c in self.cells),
            "counterexamples_both": [list(x) for x in self.counterexamples_both],
            "counterexamples_either": [list(x) for x in self.counterexamples_either],
        }


def sweep_cells(q_max: int, D_max: int) -> list[tuple[int, int]]:
    return [(q, D) for q in range(2, q_max + 1) for D in range(6, D_max + 1, 6)]


def _store_dir(root: Path) -> Path:
    digest = hashlib.sha256(_STORE_VERSION.encode()).hexdigest()[:16]
    return root / f"cells-{digest}"


def _load_store(store: Path) -> dict[tuple[int, int], CellResult]:
    done = {}
    if not store.is_dir():
        return done
    for shard in sorted(store.glob("shard-*.tsv")):
        for line in shard.read_text().splitlines():
            # a torn last line from a killed writer is simply recomputed
            try:
                cell = CellResult.parse(line)
            except ValueError:
                continue
            done[(cell.q, cell.D)] = cell
    return done


def _work(chunk: list[tuple[int, int]], store: str | None) -> list[CellResult]:
    out = [evaluate_cell(q, D) for q, D in chunk]
    if store is not None:
        with open(Path(store) / f"shard-{os.getpid()}.tsv", "a") as fh:
            for cell in out:
                fh.write(cell.record() + "\n")
    return out


def conjecture_sweep(q_max: int, D_max: int, jobs: int = 1, checkpoint_dir: str | os.PathLike | None = None,
                     chunk: int = 16) -> SweepResult:
    """Evaluate k_D and f_D integrality for 2 <= q <= q_max, 6 <= D <= D_max, 6 | D.

    With a checkpoint directory (or DRGWB_CHECKPOINT_DIR set) finished cells
    are stored and skipped on the next call, and a sorted ``sweep-<q>-<D>.tsv``
    is written when the grid is complete.
    """
    if q_max < 2 or D_max < 6:
        raise ValueError("need q_max >= 2 and D_max >= 6")
    if checkpoint_dir is None:
        checkpoint_dir = os.environ.get(CHECKPOINT_ENV) or None
    store = None
    done: dict[tuple[int, int], CellResult] = {}
    if checkpoint_dir is not None:
        store = _store_dir(Path(checkpoint_dir))
        store.mkdir(parents=True, exist_ok=True)
        done = _load_store(store)

    grid = sweep_cells(q_max, D_max)
    todo = [c for c in grid if c not in done]
    # interleave so every chunk mixes cheap and expensive cells
    todo.sort(key=lambda c: (c[1], c[0]))
    chunks = [todo[i::max(1, len(todo) // chunk)] for i in range(max(1, len(todo) // chunk))] if todo else []
    fresh: dict[tuple[int, int], CellResult] = {}
    store_arg = str(store) if store is not None else None
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for res in pool.map(_work, chunks, [store_arg] * len(chunks)):
                fresh.update({(c.q, c.D): c for c in res})
    else:
        for ch in chunks:
            fresh.update({(c.q, c.D): c for c in _work(ch, store_arg)})

    cells = [fresh.get(c) or done[c] for c in grid]
    result = SweepResult(q_max, D_max, cells, resumed=len(grid) - len(todo))
    if store is not None:
        final = Path(checkpoint_dir) / f"sweep-{q_max}-{D_max}.tsv"
        final.write_text("".join(c.record() + "\n" for c in cells))
    return result


def full_value(q: int, D: int, which: str) -> Fraction:
    """The exact k_D or f_D value, for spot checks and certificates."""
    prefix, factors = (kD_factors if which == "kD" else fD_factors)(q, D)
    out = Fraction(prefix)
    for n, d in factors:
        out *= Fraction(n, d)
    return out
