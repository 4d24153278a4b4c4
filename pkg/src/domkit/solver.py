"""Exact domination numbers of circulant digraphs.

gamma_exact runs a branch-and-bound kernel over coverage bitmasks.  The
compiled kernel (domkit._core, Cython) is preferred; the pure-Python twin
(domkit._core_py) is selected automatically when the extension is not
built, or on demand with DOMKIT_PURE=1.  gamma_bruteforce is a
deliberately naive oracle that shares no search logic with the kernel:
it tries every subset in increasing cardinality order.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .model import CirculantInstance, DifferenceSet

if os.environ.get("DOMKIT_PURE"):
    from . import _core_py as _kernel

    KERNEL = "pure"
else:
    try:
        from . import _core as _kernel

        KERNEL = "compiled"
    except ImportError:  # extension not built; pure fallback
        from . import _core_py as _kernel

        KERNEL = "pure"


@dataclass(frozen=True)
class GammaCertificate:
    """Exact minimum size, one optimal witness, and the search node count."""

    gamma: int
    witness: frozenset[int]
    explored: int


def kernel_name() -> str:
    """Which solve_cover kernel is active, "compiled" or "pure"."""
    return KERNEL


def reduce_mod(steps: DifferenceSet, p: int) -> CirculantInstance:
    """Reduce a step set on Z to the circulant instance on Z_p.

    Distinct steps can collide mod p; the instance keeps the collision
    counts (plus the implicit self-loop at 0) for efficiency checks.
    """
    if p < 1:
        raise ValueError("modulus must be positive")
    counts: dict[int, int] = {0: 1}
    for t in steps:
        r = t % p
        counts[r] = counts.get(r, 0) + 1
    connection = frozenset(t % p for t in steps)
    return CirculantInstance(p, connection, tuple(sorted(counts.items())))


def _offsets(inst: CirculantInstance) -> tuple[int, ...]:
    return tuple(sorted(inst.connection | {0}))


_gamma_cache: dict[tuple[int, tuple[int, ...]], GammaCertificate] = {}


def gamma_exact(inst: CirculantInstance) -> GammaCertificate:
    """Exact domination number with witness; results are memoized, so the
    function stays pure while repeated scans get cheap."""
    offsets = _offsets(inst)
    key = (inst.modulus, offsets)
    cert = _gamma_cache.get(key)
    if cert is None:
        size, mask, explored = _kernel.solve_cover(inst.modulus, list(offsets))
        witness = frozenset(_bits(mask))
        cert = GammaCertificate(size, witness, explored)
        if not verify_witness(inst, witness) or len(witness) != size:
            raise AssertionError(f"kernel returned an invalid witness for {key}")
        _gamma_cache[key] = cert
    return cert


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def gamma_bruteforce(inst: CirculantInstance) -> int:
    """Oracle: smallest dominating-set size by exhaustive enumeration.

    Subsets are tried in increasing cardinality; no pruning, no symmetry.
    Capped at modulus 24 to keep the enumeration honest and finite.
    """
    n = inst.modulus
    if n > 24:
        raise ValueError("oracle size limit")
    offsets = _offsets(inst)
    cover = []
    for v in range(n):
        mask = 0
        for t in offsets:
            mask |= 1 << ((v + t) % n)
        cover.append(mask)
    full = (1 << n) - 1
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            acc = 0
            for v in combo:
                acc |= cover[v]
            if acc == full:
                return size
    raise AssertionError("unreachable: the full vertex set always dominates")


def verify_witness(inst: CirculantInstance, witness: frozenset[int]) -> bool:
    """Whether witness dominates the instance; residues must be in range."""
    n = inst.modulus
    for w in witness:
        if not 0 <= w < n:
            raise ValueError(f"witness residue {w} outside [0, {n})")
    covered = set()
    for w in witness:
        for t in _offsets(inst):
            covered.add((w + t) % n)
    return len(covered) == n


def perfect_code_exists(inst: CirculantInstance) -> frozenset[int] | None:
    """A witness covering every vertex exactly once, or None.

    Counting is with multiplicity: if two steps collide mod n, any chosen
    vertex covers one target twice and no perfect code can exist.
    """
    n = inst.modulus
    counts = inst.counts()
    if any(c > 1 for c in counts.values()):
        return None
    offsets = sorted(counts)
    m = len(offsets)
    if n % m:
        return None
    cover = []
    for v in range(n):
        mask = 0
        for t in offsets:
            mask |= 1 << ((v + t) % n)
        cover.append(mask)
    full = (1 << n) - 1

    def walk(covered: int, acc: tuple[int, ...]):
        if covered == full:
            return acc
        low = (~covered & full) & -(~covered & full)
        x = low.bit_length() - 1
        for v in sorted((x - t) % n for t in offsets):
            cv = cover[v]
            if cv & covered:
                continue
            hit = walk(covered | cv, acc + (v,))
            if hit is not None:
                return hit
        return None

    found = walk(0, ())
    return frozenset(found) if found is not None else None
