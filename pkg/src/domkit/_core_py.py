"""Pure-Python kernel for exact minimum covering by cyclic shifts.

solve_cover finds a smallest W within Z_n such that W + offsets = Z_n,
by depth-first branch and bound over coverage bitmasks:

  - upper bound: deterministic greedy (max fresh coverage, lowest index)
  - branch vertex: uncovered x with fewest allowed dominators
  - branch order: dominators by descending fresh coverage, then index
  - completeness: after a dominator is tried it is excluded from the rest
    of the node, so subtrees never overlap
  - lower bound: ceil(uncovered / len(offsets))
  - symmetry: the search fixes vertex 0 in W; rotating any cover moves
    some element onto 0, so the optimum is preserved

The compiled twin in domkit._core follows this code line by line; both
must return identical (size, witness, explored) triples.
"""

from __future__ import annotations


def solve_cover(n: int, offsets: list[int]) -> tuple[int, int, int]:
    """Minimum |W|, a witness bitmask, and the node count of the search.

    offsets must be sorted, distinct, within [0, n), nonempty.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if not offsets:
        raise ValueError("offsets must be nonempty")
    m = len(offsets)
    cover = []
    for v in range(n):
        mask = 0
        for t in offsets:
            mask |= 1 << ((v + t) % n)
        cover.append(mask)
    dom = []
    for x in range(n):
        mask = 0
        for t in offsets:
            mask |= 1 << ((x - t) % n)
        dom.append(mask)
    full = (1 << n) - 1

    # greedy upper bound; every vertex covers itself or is covered by a
    # shifted one, so this terminates with a valid witness
    best_mask = 0
    covd = 0
    best_size = 0
    while covd != full:
        bv = 0
        bg = -1
        for v in range(n):
            g = (cover[v] & ~covd).bit_count()
            if g > bg:
                bg = g
                bv = v
        best_mask |= 1 << bv
        covd |= cover[bv]
        best_size += 1

    explored = 0

    def rec(covered: int, excluded: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size, explored
        explored += 1
        if covered == full:
            if size < best_size:
                best_size = size
                best_mask = chosen
            return
        need = (n - covered.bit_count() + m - 1) // m
        if size + need >= best_size:
            return
        rem = full & ~covered
        bx_cands = 0
        bx_count = n + 1
        while rem:
            low = rem & -rem
            rem ^= low
            x = low.bit_length() - 1
            cands = dom[x] & ~excluded
            cnt = cands.bit_count()
            if cnt == 0:
                return
            if cnt < bx_count:
                bx_count = cnt
                bx_cands = cands
                if cnt == 1:
                    break
        order = []
        cb = bx_cands
        while cb:
            low = cb & -cb
            cb ^= low
            v = low.bit_length() - 1
            order.append(((cover[v] & ~covered).bit_count(), v))
        order.sort(key=lambda gv: (-gv[0], gv[1]))
        exc = excluded
        for _, v in order:
            rec(covered | cover[v], exc, chosen | (1 << v), size + 1)
            exc |= 1 << v
            if size + need >= best_size:
                return

    rec(cover[0], 0, 1, 1)
    return best_size, best_mask, explored
