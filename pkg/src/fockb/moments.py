"""Vacuum moments of Gaussian words, by operators and by partitions.

A word of 2n Gaussian factors is indexed 1..2n in application order (index
1 acts first).  Factor i carries the vector pair (value at position -i,
value at position i) of a :class:`VectorAssignment`.  The vacuum moment is
computed two independent ways:

* ``moment_operator`` -- apply the ladder operators and read off the
  vacuum amplitude;
* ``moment_partitions`` -- sum ``alpha^negatives * q^crossings`` times the
  Gram product over singleton-free symmetric pair partitions.

``wick_expansion`` refines this to arbitrary create/annihilate words,
including the covered-singleton exponent and the ordered singleton tensor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ResourceLimitError
from .fock_core import (
    FockVector,
    Gram,
    annihilation,
    as_gram,
    creation,
    gaussian,
    vec_inner,
    vector,
)
from .partitions_b import MAX_PARTITION_POSITIONS, PartitionB, _extend
from .scalars import ALPHA, ONE, BiPoly

MAX_OPERATOR_FACTORS = 8
MAX_PARTITION_FACTORS = MAX_PARTITION_POSITIONS
MAX_WICK_FACTORS = 6

CREATE = "*"
ANNIHILATE = "1"


@dataclass(frozen=True)
class EpsilonWord:
    """A create/annihilate pattern; symbol i is applied i-th (1-based)."""

    symbols: tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> "EpsilonWord":
        symbols = tuple(text)
        if any(s not in (CREATE, ANNIHILATE) for s in symbols):
            raise ValueError(f"epsilon word must be over {{'{CREATE}', '{ANNIHILATE}'}}")
        return cls(symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def prefix_dominant(self) -> bool:
        """No prefix has more annihilations than creations."""
        depth = 0
        for s in self.symbols:
            depth += 1 if s == CREATE else -1
            if depth < 0:
                return False
        return True


class VectorAssignment:
    """Exact coordinate vectors for positions -n..-1, 1..n plus a Gram matrix."""

    def __init__(self, vectors: dict[int, Sequence], gram: Gram | None = None,
                 dim: int | None = None):
        self.vectors = {int(i): vector(v) for i, v in vectors.items()}
        if not self.vectors:
            raise ValueError("assignment needs at least one vector")
        dims = {len(v) for v in self.vectors.values()}
        if len(dims) != 1:
            raise ValueError("all vectors must share a dimension")
        self.dim = dim if dim is not None else dims.pop()
        self.gram = as_gram(gram, self.dim)
        positions = sorted(abs(i) for i in self.vectors)
        self.size = positions[-1]
        expected = sorted([i for i in range(-self.size, self.size + 1) if i != 0])
        if sorted(self.vectors) != expected:
            raise ValueError("assignment must cover positions -n..-1, 1..n")

    @classmethod
    def constant(cls, size: int, coords=(1,), dim: int | None = None,
                 gram: Gram | None = None) -> "VectorAssignment":
        """Every position carries the same vector (default the first basis
        letter of a one-dimensional space)."""
        vec = tuple(coords)
        d = dim if dim is not None else len(vec)
        padded = vec + (0,) * (d - len(vec))
        return cls({i: padded for i in range(-size, size + 1) if i != 0},
                   gram=gram, dim=d)

    @classmethod
    def random_rational(cls, size: int, dim: int, seed: int,
                        gram: Gram | None = None) -> "VectorAssignment":
        """Reproducible small-rational assignment: numerators in -2..2,
        denominators in 1..3."""
        rng = random.Random(seed)
        vectors = {}
        for i in range(-size, size + 1):
            if i == 0:
                continue
            vectors[i] = tuple(
                Fraction(rng.randint(-2, 2), rng.randint(1, 3)) for _ in range(dim)
            )
        return cls(vectors, gram=gram, dim=dim)

    def is_diagonal(self) -> bool:
        return all(
            self.vectors[i] == self.vectors[-i] for i in range(1, self.size + 1)
        )

    def pair(self, i: int):
        """(left vector, right vector) of the i-th Gaussian factor."""
        return self.vectors[-i], self.vectors[i]

    def inner(self, i: int, j: int) -> Fraction:
        return vec_inner(self.vectors[i], self.vectors[j], self.gram)

    def to_jsonable(self) -> dict:
        return {
            "dim": self.dim,
            "gram": [[[v.numerator, v.denominator] for v in row] for row in self.gram],
            "vectors": {
                str(i): [[c.numerator, c.denominator] for c in v]
                for i, v in sorted(self.vectors.items())
            },
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "VectorAssignment":
        gram = tuple(
            tuple(Fraction(num, den) for num, den in row) for row in data["gram"]
        )
        vectors = {
            int(i): tuple(Fraction(num, den) for num, den in v)
            for i, v in data["vectors"].items()
        }
        return cls(vectors, gram=gram, dim=int(data["dim"]))


# -- the two moment routes -----------------------------------------------------


def _resolve_order(assignment: VectorAssignment, order) -> list[int]:
    if order is None:
        return list(range(1, assignment.size + 1))
    order = [int(i) for i in order]
    if sorted(order) != list(range(1, assignment.size + 1)):
        raise ValueError("order must be a permutation of 1..n")
    return order


def moment_operator(assignment: VectorAssignment, order=None) -> BiPoly:
    """Vacuum amplitude after applying the Gaussian factors in order
    (first entry of ``order`` acts first; default 1..2n)."""
    order = _resolve_order(assignment, order)
    if len(order) > MAX_OPERATOR_FACTORS:
        raise ResourceLimitError(
            f"operator moments are capped at {MAX_OPERATOR_FACTORS} factors"
        )
    state = FockVector.vacuum(assignment.dim)
    for i in order:
        left, right = assignment.pair(i)
        state = gaussian(left, right, assignment.gram).apply(state)
    return state.vacuum_amplitude()


def moment_partitions(assignment: VectorAssignment, order=None) -> BiPoly:
    """Same moment via the singleton-free partition sum."""
    order = _resolve_order(assignment, order)
    n = len(order)
    if n > MAX_PARTITION_FACTORS:
        raise ResourceLimitError(
            f"partition moments are capped at {MAX_PARTITION_FACTORS} factors"
        )
    if n % 2:
        return BiPoly()
    relabel = {}
    for slot, original in enumerate(order, start=1):
        relabel[slot] = original
        relabel[-slot] = -original
    total = BiPoly()
    for part in _iter_p2b(n):
        cr, nb, _ = part.statistics()
        weight = Fraction(1)
        for i, j in part.pair_blocks:
            weight *= assignment.inner(relabel[i], relabel[j])
            if not weight:
                break
        if weight:
            total = total + BiPoly.monomial(nb, cr, weight)
    return total


def _iter_p2b(n: int) -> Iterator[PartitionB]:
    remaining = tuple(range(1, n + 1))
    for blocks in _extend(remaining, False, [], False, False):
        yield PartitionB(n, blocks)


# -- epsilon-constrained partitions and the Wick state --------------------------


def _epsilon_ok(part: PartitionB, eps: EpsilonWord) -> bool:
    for s in part.b_singletons():
        if eps.symbols[s - 1] != CREATE:
            return False
    for bp in part.b_pairs():
        a, b = bp.right
        if eps.symbols[abs(a) - 1] != CREATE or eps.symbols[abs(b) - 1] != ANNIHILATE:
            return False
    return True


def epsilon_partitions_filter(eps: EpsilonWord) -> list[PartitionB]:
    """Compatible partitions by filtering the full family (oracle route)."""
    from .partitions_b import enumerate_p12b

    return [p for p in enumerate_p12b(len(eps)) if _epsilon_ok(p, eps)]


def epsilon_partitions(eps: EpsilonWord) -> list[PartitionB]:
    """Compatible partitions generated directly.

    Walking absolute positions upward, a creation index may stay a
    singleton or become the small leg of a later annihilation index; an
    annihilation index must already have been consumed, so meeting one
    unconsumed is a dead end.
    """
    n = len(eps)
    found: list[PartitionB] = []

    def walk(remaining: tuple[int, ...], prefix: list):
        if not remaining:
            found.append(PartitionB(n, prefix))
            return
        k, rest = remaining[0], remaining[1:]
        if eps.symbols[k - 1] != CREATE:
            return
        prefix.append((-k,))
        prefix.append((k,))
        walk(rest, prefix)
        prefix.pop()
        prefix.pop()
        for idx in range(len(rest)):
            j = rest[idx]
            if eps.symbols[j - 1] != ANNIHILATE:
                continue
            shrunk = rest[:idx] + rest[idx + 1 :]
            for sign in (1, -1):
                block = tuple(sorted((k, sign * j)))
                mirror = tuple(sorted((-k, -sign * j)))
                prefix.append(block)
                prefix.append(mirror)
                walk(shrunk, prefix)
                prefix.pop()
                prefix.pop()

    walk(tuple(range(1, n + 1)), [])
    found.sort(key=lambda p: p.blocks)
    return found


def wick_expansion(eps: EpsilonWord, assignment: VectorAssignment) -> FockVector:
    """The state produced by the create/annihilate word, combinatorially.

    Sums ``alpha^negatives * q^(crossings + covered singletons)`` times the
    Gram product over compatible partitions, tensoring the singleton
    vectors in increasing position order.
    """
    n = len(eps)
    if n > MAX_WICK_FACTORS:
        raise ResourceLimitError(f"Wick states are capped at {MAX_WICK_FACTORS} factors")
    if assignment.size < n:
        raise ValueError("assignment does not cover the word")
    total = FockVector(assignment.dim)
    for part in epsilon_partitions(eps):
        cr, nb, cs = part.statistics()
        weight = Fraction(1)
        for i, j in part.pair_blocks:
            weight *= assignment.inner(i, j)
            if not weight:
                break
        if not weight:
            continue
        coeff = BiPoly.monomial(nb, cr + cs, weight)
        survivors = sorted(part.singletons)
        tensor = FockVector.simple_tensor(
            [assignment.vectors[s] for s in survivors]
        )
        if tensor.dim != assignment.dim:
            tensor = FockVector(assignment.dim, tensor.terms)
        total = total + tensor.scale(coeff)
    return total


def wick_operator(eps: EpsilonWord, assignment: VectorAssignment) -> FockVector:
    """The same state by applying the ladder operators."""
    n = len(eps)
    if n > MAX_WICK_FACTORS:
        raise ResourceLimitError(f"Wick states are capped at {MAX_WICK_FACTORS} factors")
    state = FockVector.vacuum(assignment.dim)
    for i, symbol in enumerate(eps.symbols, start=1):
        left, right = assignment.pair(i)
        if symbol == CREATE:
            op = creation(left, right)
        else:
            op = annihilation(left, right, assignment.gram)
        state = op.apply(state)
    return state


# -- named experiments -----------------------------------------------------------


def trace_defect(d: int = 2) -> BiPoly:
    """Vacuum expectation gap between a four-factor word and its cyclic shift.

    Uses the crossed basis-vector assignment that exposes the failure of
    traciality; the result factors as alpha^2 (q^2 - 1).
    """
    if d < 2:
        raise ValueError("the traciality experiment needs dimension >= 2")
    e1 = tuple([1] + [0] * (d - 1))
    e2 = tuple([0, 1] + [0] * (d - 2))
    assignment = VectorAssignment(
        {-1: e1, 1: e2, -2: e1, 2: e2, -3: e2, 3: e1, -4: e2, 4: e1}
    )
    straight = moment_operator(assignment, order=[1, 2, 3, 4])
    rotated = moment_operator(assignment, order=[4, 1, 2, 3])
    return straight - rotated


def special_moments(case: str, assignment: VectorAssignment, size: int) -> BiPoly:
    """The three degenerate-parameter partition sums.

    ``alpha0``        crossing-weighted sum over all-positive pair partitions;
    ``q0_typeB``      negativity-weighted sum over the crossing-free family;
    ``q0_typeA_diag`` outer-block-weighted sum over the all-positive
                      crossing-free family (requires a mirror-symmetric
                      assignment).
    """
    from .partitions_b import enumerate_nca, enumerate_ncb, enumerate_p2b, outer_count

    if size > MAX_PARTITION_FACTORS + 2:
        raise ResourceLimitError("special sums are capped at 12 factors")
    if assignment.size < size:
        raise ValueError("assignment does not cover the word")

    def gram_product(part: PartitionB) -> Fraction:
        weight = Fraction(1)
        for i, j in part.pair_blocks:
            weight *= assignment.inner(i, j)
            if not weight:
                break
        return weight

    total = BiPoly()
    if case == "alpha0":
        for part in enumerate_p2b(size):
            cr, nb, _ = part.statistics()
            if nb:
                continue
            weight = gram_product(part)
            if weight:
                total = total + BiPoly.monomial(0, cr, weight)
        return total
    if case == "q0_typeB":
        for part in enumerate_ncb(size):
            _, nb, _ = part.statistics()
            weight = gram_product(part)
            if weight:
                total = total + BiPoly.monomial(nb, 0, weight)
        return total
    if case == "q0_typeA_diag":
        if not assignment.is_diagonal():
            raise ValueError("the outer-block sum needs a mirror-symmetric assignment")
        for part in enumerate_nca(size):
            weight = gram_product(part)
            if weight:
                total = total + (ONE + ALPHA) ** outer_count(part) * weight
        return total
    raise ValueError(f"unknown special case {case!r}")
