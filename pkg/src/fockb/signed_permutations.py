"""Signed permutations of {1..n} and their two inversion statistics.

An element is stored in one-line notation on the positive indices only:
``image[i-1]`` is the (signed) image of ``i``, and the value at ``-i`` is
defined to be the negative of the value at ``i``.  That convention makes
the sign symmetry impossible to violate.

The group is generated by ``generator(n, 0)`` (flip the sign of position 1)
and ``generator(n, i)`` for ``i >= 1`` (swap positions i and i+1).  Two
statistics drive everything downstream:

* ``ninv`` -- how many of 1..n are sent to a negative value; equals the
  number of sign-flip generators in any shortest generator word.
* ``pinv`` -- a signed inversion count over index pairs; equals the number
  of swap generators in any shortest word.

``coxeter_length_bfs`` recovers both counts directly from shortest words in
the Cayley graph and exists purely as a small-degree cross-check.

>>> g0, g1 = SignedPermutation.generator(2, 0), SignedPermutation.generator(2, 1)
>>> sigma = g1.compose(g0).compose(g1)
>>> sigma.image
(1, -2)
>>> sigma.ninv(), sigma.pinv()
(1, 2)
"""

from __future__ import annotations

import json
from collections import deque
from itertools import permutations, product
from typing import Iterator

from .errors import ResourceLimitError

MAX_ENUMERATION_DEGREE = 6
MAX_BFS_DEGREE = 3


class SignedPermutation:
    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(int(v) for v in image)
        n = len(image)
        if sorted(abs(v) for v in image) != list(range(1, n + 1)) or 0 in image:
            raise ValueError(f"not a signed permutation image: {image!r}")
        self.image = image

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    @classmethod
    def generator(cls, n: int, i: int) -> "SignedPermutation":
        """The i-th standard generator of degree n.

        ``i = 0`` flips the sign of position 1; ``i >= 1`` swaps positions
        i and i+1.
        """
        if not 0 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for degree {n}")
        image = list(range(1, n + 1))
        if i == 0:
            image[0] = -1
        else:
            image[i - 1], image[i] = image[i], image[i - 1]
        return cls(image)

    def __call__(self, i: int) -> int:
        """Image of a signed index, with sigma(-i) = -sigma(i)."""
        if i > 0:
            return self.image[i - 1]
        if i < 0:
            return -self.image[-i - 1]
        raise ValueError("0 is not a valid index")

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """(self o other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        return SignedPermutation(self(v) for v in other.image)

    __mul__ = compose

    def inverse(self) -> "SignedPermutation":
        image = [0] * self.n
        for i, v in enumerate(self.image, start=1):
            if v > 0:
                image[v - 1] = i
            else:
                image[-v - 1] = -i
        return SignedPermutation(image)

    def ninv(self) -> int:
        """Number of positions 1..n sent to a negative value."""
        return sum(1 for v in self.image if v < 0)

    def pinv(self) -> int:
        """Signed inversion count over index pairs.

        For each i < j with images u, v the two pair-type roots spanned by
        positions i and j contribute: both flip when the larger-magnitude
        image is negative, exactly one flips when the magnitudes come out
        of order, none otherwise.
        """
        total = 0
        img = self.image
        n = len(img)
        for i in range(n):
            u = img[i]
            for j in range(i + 1, n):
                v = img[j]
                if abs(v) > abs(u):
                    if v < 0:
                        total += 2
                else:
                    total += 1
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.image)})"

    def to_json(self) -> str:
        return json.dumps(list(self.image))

    @classmethod
    def from_json(cls, text: str) -> "SignedPermutation":
        return cls(json.loads(text))


def enumerate_group(n: int) -> Iterator[SignedPermutation]:
    """All signed permutations of degree n, lexicographic by image tuple."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n > MAX_ENUMERATION_DEGREE:
        raise ResourceLimitError(
            f"full enumeration is capped at degree {MAX_ENUMERATION_DEGREE}; got {n}"
        )
    images = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            images.append(tuple(s * v for s, v in zip(signs, perm)))
    for image in sorted(images):
        yield SignedPermutation(image)


def coxeter_length_bfs(sigma: SignedPermutation) -> tuple[int, int]:
    """(count of sign-flip generators, count of swap generators) in one
    shortest generator word for sigma, found by breadth-first search.

    Exponential in the degree; serves only as an oracle for ninv/pinv.
    """
    n = sigma.n
    if n > MAX_BFS_DEGREE:
        raise ResourceLimitError(f"BFS word search is capped at degree {MAX_BFS_DEGREE}")
    gens = [SignedPermutation.generator(n, i) for i in range(n)]
    start = SignedPermutation.identity(n)
    seen: dict[SignedPermutation, tuple[int, int]] = {start: (0, 0)}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        counts = seen[current]
        if current == sigma:
            return counts
        for i, g in enumerate(gens):
            nxt = current.compose(g)
            if nxt not in seen:
                seen[nxt] = (counts[0] + (i == 0), counts[1] + (i != 0))
                queue.append(nxt)
    raise AssertionError("generators failed to reach the target element")
