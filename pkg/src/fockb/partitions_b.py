"""Mirror-symmetric singleton/pair partitions of {-n..-1, 1..n}.

A partition here is a set of blocks of size 1 or 2 covering the 2n signed
positions, closed under the reflection ``(a, b) -> (-b, -a)``, with no pair
block equal to its own reflection.  Reflection-paired pair blocks are
grouped into *mirror pairs* ``((-b, -a), (a, b))`` anchored at the block
whose entries have the smaller absolute value first; a mirror pair is
*positive* when its anchor block sits entirely on one side of zero and
*negative* when it straddles zero.

Three statistics are computed by two genuinely different algorithms:

* ``statistics`` -- the definitional route: signed crossing counts over
  pairs of mirror pairs and cover counts for singleton legs.
* ``statistics_centerline`` -- the pictorial route: count raw chord
  crossings / cover incidences among all blocks and halve, treating the
  one self-crossing of each straddling mirror pair as the negativity count.

Both must agree everywhere; the test suite enforces this.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import ResourceLimitError
from .scalars import ALPHA, Q, BiPoly

MAX_PARTITION_POSITIONS = 10  # bound on n for the full singleton/pair families
MAX_NONCROSSING_POSITIONS = 12

Block = tuple[int, ...]


@dataclass(frozen=True)
class BPair:
    """A reflection-coupled pair of pair blocks."""

    left: Block   # (-b, -a)
    right: Block  # (a, b) with |a| < |b|

    @property
    def positive(self) -> bool:
        return self.right[0] * self.right[1] > 0

    @property
    def negative(self) -> bool:
        return not self.positive


def _reflect_block(block: Block) -> Block:
    return tuple(sorted(-v for v in block))


def _crosses(x: Block, y: Block) -> bool:
    """Two sorted pair blocks interleave as chords on the line."""
    return x[0] < y[0] < x[1] < y[1] or y[0] < x[0] < y[1] < x[1]


def _covers(w: Block, s: int) -> bool:
    return w[0] < s < w[1]


class PartitionB:
    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks):
        blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
        ground = [v for b in blocks for v in b]
        expected = [v for v in range(-n, n + 1) if v != 0]
        if sorted(ground) != expected:
            raise ValueError("blocks do not partition the signed positions")
        block_set = set(blocks)
        for b in blocks:
            if len(b) not in (1, 2):
                raise ValueError(f"block size must be 1 or 2: {b!r}")
            mirror = _reflect_block(b)
            if mirror not in block_set:
                raise ValueError(f"missing reflected block for {b!r}")
            if len(b) == 2 and mirror == b:
                raise ValueError(f"self-reflected pair block {b!r} is not allowed")
        self.n = n
        self.blocks = blocks

    # -- structure ---------------------------------------------------------

    @property
    def pair_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if len(b) == 2)

    @property
    def singletons(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks if len(b) == 1)

    def b_pairs(self) -> tuple[BPair, ...]:
        """One entry per mirror pair, anchored at the |small|-first block."""
        out = []
        for b in self.pair_blocks:
            if abs(b[0]) < abs(b[1]):
                out.append(BPair(left=_reflect_block(b), right=b))
        return tuple(out)

    def b_singletons(self) -> tuple[int, ...]:
        """Positive legs of the mirrored singleton couples."""
        return tuple(s for s in self.singletons if s > 0)

    def has_singletons(self) -> bool:
        return any(len(b) == 1 for b in self.blocks)

    # -- statistics, definitional route -------------------------------------

    def statistics(self) -> tuple[int, int, int]:
        """(crossings, negative mirror pairs, covered-singleton incidences)."""
        bp = self.b_pairs()
        nb = sum(1 for p in bp if p.negative)
        cr = 0
        for i in range(len(bp)):
            vi, wi = bp[i].right, bp[i].left
            for j in range(i + 1, len(bp)):
                vj, wj = bp[j].right, bp[j].left
                if _crosses(vi, vj):
                    cr += 1
                if _crosses(wi, vj) or _crosses(wj, vi):
                    cr += 1
        cs = 0
        for s in self.b_singletons():
            for p in bp:
                cs += _covers(p.right, s) + _covers(p.right, -s)
        return cr, nb, cs

    # -- statistics, pictorial route ----------------------------------------

    def statistics_centerline(self) -> tuple[int, int, int]:
        """Same three numbers via raw chord counts and mirror halving.

        Negative mirror pairs are the ones the center line hits; crossings
        away from the line come in mirror-image twins, so the definitional
        count is half of what raw chord counting sees; likewise for
        singleton cover incidences.
        """
        pairs = self.pair_blocks
        straddling = sum(1 for b in pairs if b[0] < 0 < b[1])
        nb, rem = divmod(straddling, 2)
        if rem:
            raise AssertionError("straddling blocks must come in mirror twins")
        raw_crossings = 0
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                if _crosses(pairs[i], pairs[j]):
                    raw_crossings += 1
        cr, rem = divmod(raw_crossings - nb, 2)
        if rem:
            raise AssertionError("off-center crossings must come in mirror twins")
        raw_covers = sum(
            _covers(b, s) for b in pairs for s in self.singletons
        )
        cs, rem = divmod(raw_covers, 2)
        if rem:
            raise AssertionError("cover incidences must come in mirror twins")
        return cr, nb, cs

    # -- comparison / serialization -----------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartitionB)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        return f"PartitionB({self.n}, {[list(b) for b in self.blocks]})"

    def to_json(self) -> str:
        return json.dumps([list(b) for b in self.blocks])

    @classmethod
    def from_json(cls, n: int, text: str) -> "PartitionB":
        return cls(n, json.loads(text))

    def csv_row(self) -> list:
        cr, nb, cs = self.statistics()
        return [self.n, self.to_json(), cr, nb, cs]


# -- enumeration -------------------------------------------------------------


def _extend(remaining: tuple[int, ...], allow_singletons: bool,
            prefix: list[Block], prune_noncrossing: bool,
            positive_only: bool) -> Iterator[list[Block]]:
    """Recursive core: settle the smallest unassigned absolute position.

    Pairing k with a signed partner +-j settles both absolute positions at
    once because the mirrored block settles -k and -+j; so the recursion
    walks a shrinking set of absolute positions and emits every symmetric
    partition exactly once.
    """
    if not remaining:
        yield prefix
        return
    k, rest = remaining[0], remaining[1:]
    if allow_singletons:
        prefix.append((-k,))
        prefix.append((k,))
        yield from _extend(rest, allow_singletons, prefix,
                           prune_noncrossing, positive_only)
        prefix.pop()
        prefix.pop()
    for idx in range(len(rest)):
        j = rest[idx]
        shrunk = rest[:idx] + rest[idx + 1:]
        signs = (1,) if positive_only else (1, -1)
        for sign in signs:
            block = tuple(sorted((k, sign * j)))
            mirror = _reflect_block(block)
            if prune_noncrossing and any(
                _crosses(block, b) or _crosses(mirror, b)
                for b in prefix if len(b) == 2
            ):
                continue
            prefix.append(block)
            prefix.append(mirror)
            yield from _extend(shrunk, allow_singletons, prefix,
                               prune_noncrossing, positive_only)
            prefix.pop()
            prefix.pop()


def _enumerate(n: int, allow_singletons: bool, bound: int,
               prune_noncrossing: bool = False,
               positive_only: bool = False) -> list[PartitionB]:
    if n < 1:
        raise ValueError("need at least one position")
    if n > bound:
        raise ResourceLimitError(f"partition enumeration is capped at n={bound}; got {n}")
    remaining = tuple(range(1, n + 1))
    found = [
        PartitionB(n, blocks)
        for blocks in _extend(remaining, allow_singletons, [],
                              prune_noncrossing, positive_only)
    ]
    found.sort(key=lambda p: p.blocks)
    return found


def enumerate_p12b(n: int) -> list[PartitionB]:
    """Every symmetric singleton/pair partition of the 2n signed positions."""
    return _enumerate(n, allow_singletons=True, bound=MAX_PARTITION_POSITIONS)


def enumerate_p2b(n: int) -> list[PartitionB]:
    """The singleton-free subfamily (empty for odd n)."""
    if n < 1:
        raise ValueError("need at least one position")
    if n > MAX_PARTITION_POSITIONS:
        raise ResourceLimitError(
            f"partition enumeration is capped at n={MAX_PARTITION_POSITIONS}; got {n}"
        )
    if n % 2:
        return []
    return _enumerate(n, allow_singletons=False, bound=MAX_PARTITION_POSITIONS)


def enumerate_ncb(n: int) -> list[PartitionB]:
    """Crossing-free pair partitions; there are C(n, n/2) of them."""
    if n % 2:
        return []
    return _enumerate(n, allow_singletons=False, bound=MAX_NONCROSSING_POSITIONS,
                      prune_noncrossing=True)


def enumerate_nca(n: int) -> list[PartitionB]:
    """Crossing-free pair partitions with only positive mirror pairs."""
    if n % 2:
        return []
    return _enumerate(n, allow_singletons=False, bound=MAX_NONCROSSING_POSITIONS,
                      prune_noncrossing=True, positive_only=True)


def noncrossing_count(n: int) -> int:
    """Closed-form cardinality of ``enumerate_ncb(2n)``."""
    return comb(2 * n, n)


# -- generating polynomial and the rewiring map ------------------------------


def generating_polynomial(n: int) -> BiPoly:
    """Sum of alpha^negatives * q^crossings over the singleton-free family."""
    total = BiPoly()
    for part in enumerate_p2b(n):
        cr, nb, _ = part.statistics()
        total = total + ALPHA**nb * Q**cr
    return total


def d_map(part: PartitionB) -> PartitionB:
    """Rewire every negative mirror pair into its positive form.

    Defined on crossing-free, singleton-free partitions; the image has only
    positive mirror pairs on the same position set.
    """
    cr, _, _ = part.statistics()
    if cr or part.has_singletons():
        raise ValueError("rewiring is defined on crossing-free pair partitions only")
    blocks = []
    for bp in part.b_pairs():
        if bp.positive:
            blocks.extend([bp.left, bp.right])
        else:
            a, b = bp.right
            blocks.extend([tuple(sorted((-b, a))), tuple(sorted((-a, b)))])
    return PartitionB(part.n, blocks)


def outer_count(part: PartitionB) -> int:
    """Mirror pairs of an all-positive crossing-free partition not covered
    by another mirror pair."""
    cr, nb, _ = part.statistics()
    if cr or nb or part.has_singletons():
        raise ValueError("outer counting needs an all-positive crossing-free pair partition")
    rights = [bp.right for bp in part.b_pairs()]
    outer = 0
    for i, r in enumerate(rights):
        covered = any(
            j != i and w[0] < r[0] and r[1] < w[1] for j, w in enumerate(rights)
        )
        outer += not covered
    return outer
