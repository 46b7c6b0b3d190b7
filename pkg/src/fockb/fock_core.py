"""Doubled tensor levels, the deformed inner product, and the ladder operators.

Level n is spanned by words of length 2n over the letter alphabet {1..d};
word slots are addressed by the signed positions -n..-1, 1..n (no zero),
with slot -n leftmost.  The two-parameter symmetrization weights each
signed permutation by ``alpha^ninv * q^pinv`` and defines the deformed
inner product level by level.

Everything here is exact: coefficients live in Q[alpha, q] (``BiPoly``),
vectors have Fraction coordinates, and inner products go through a caller
supplied exact Gram matrix (identity by default).  Floats appear only in
``norm_estimate`` and the eigenvalue helpers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import ResourceLimitError
from .scalars import ALPHA, ONE, Q, BiPoly, as_poly
from .signed_permutations import SignedPermutation, enumerate_group

MAX_LEVEL = 4
MAX_DIM = 3
MAX_MATRIX_SIZE = 4096  # cap on d^(2n) for materialized level matrices

Word = tuple[int, ...]
Vector = tuple[Fraction, ...]
Gram = tuple[tuple[Fraction, ...], ...]


# -- coordinates and Gram data -----------------------------------------------


def vector(coords) -> Vector:
    return tuple(Fraction(c) for c in coords)


def identity_gram(d: int) -> Gram:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(d))
        for i in range(d)
    )


def as_gram(gram, d: int) -> Gram:
    if gram is None:
        return identity_gram(d)
    gram = tuple(tuple(Fraction(v) for v in row) for row in gram)
    if len(gram) != d or any(len(row) != d for row in gram):
        raise ValueError(f"Gram matrix must be {d}x{d}")
    for i in range(d):
        for j in range(i):
            if gram[i][j] != gram[j][i]:
                raise ValueError("Gram matrix must be symmetric")
    return gram


def vec_inner(u: Vector, v: Vector, gram: Gram) -> Fraction:
    return sum(
        (ui * g * vj for ui, row in zip(u, gram) for g, vj in zip(row, v)),
        Fraction(0),
    )


def _letter_pairings(x: Vector, gram: Gram) -> list[Fraction]:
    """Inner products of x against each basis letter."""
    d = len(x)
    return [sum((x[i] * gram[i][j] for i in range(d)), Fraction(0)) for j in range(d)]


# -- words, positions, group action ------------------------------------------


def signed_positions(n: int) -> list[int]:
    return [p for p in range(-n, n + 1) if p != 0]


def pos_index(p: int, n: int) -> int:
    """Array slot of signed position p in a level-n word."""
    if not -n <= p <= n or p == 0:
        raise ValueError(f"position {p} out of range for level {n}")
    return p + n if p < 0 else p + n - 1


def basis_words(n: int, d: int) -> list[Word]:
    return [tuple(w) for w in product(range(1, d + 1), repeat=2 * n)]


def group_action(sigma: SignedPermutation, word: Word) -> Word:
    """Permute the slots: the output at position p holds the input entry
    at position sigma^{-1}(p)."""
    n = len(word) // 2
    if len(word) != 2 * n or sigma.n != n:
        raise ValueError("word length must be twice the permutation degree")
    inv = sigma.inverse()
    return tuple(word[pos_index(inv(p), n)] for p in signed_positions(n))


def character_weight(sigma: SignedPermutation) -> BiPoly:
    return BiPoly.monomial(sigma.ninv(), sigma.pinv())


# -- exact per-level matrices --------------------------------------------------


class WordMatrix:
    """Sparse exact matrix between word bases of two levels."""

    __slots__ = ("dim", "level_in", "level_out", "cols")

    def __init__(self, dim: int, level_in: int, level_out: int, cols=None):
        self.dim = dim
        self.level_in = level_in
        self.level_out = level_out
        self.cols: dict[Word, dict[Word, BiPoly]] = cols if cols is not None else {}

    @classmethod
    def identity(cls, n: int, d: int) -> "WordMatrix":
        mat = cls(d, n, n)
        for w in basis_words(n, d):
            mat.cols[w] = {w: ONE}
        return mat

    @classmethod
    def from_group_elements(cls, pairs, n: int, d: int) -> "WordMatrix":
        """Sum of coeff * (permutation action) over (coeff, sigma) pairs."""
        mat = cls(d, n, n)
        for w in basis_words(n, d):
            col: dict[Word, BiPoly] = {}
            for coeff, sigma in pairs:
                out = group_action(sigma, w) if n else w
                total = col.get(out, BiPoly()) + coeff
                if total:
                    col[out] = total
                else:
                    col.pop(out, None)
            mat.cols[w] = col
        return mat

    def entry(self, row: Word, col: Word) -> BiPoly:
        return self.cols.get(col, {}).get(row, BiPoly())

    def add_to(self, col: Word, row: Word, coeff: BiPoly) -> None:
        bucket = self.cols.setdefault(col, {})
        total = bucket.get(row, BiPoly()) + coeff
        if total:
            bucket[row] = total
        else:
            bucket.pop(row, None)

    def compose(self, other: "WordMatrix") -> "WordMatrix":
        """self o other (apply ``other`` first)."""
        if other.level_out != self.level_in or other.dim != self.dim:
            raise ValueError("level/dimension mismatch in composition")
        out = WordMatrix(self.dim, other.level_in, self.level_out)
        for col, mid in other.cols.items():
            acc: dict[Word, BiPoly] = {}
            for w_mid, c_mid in mid.items():
                for w_out, c_out in self.cols.get(w_mid, {}).items():
                    total = acc.get(w_out, BiPoly()) + c_out * c_mid
                    if total:
                        acc[w_out] = total
                    else:
                        acc.pop(w_out, None)
            out.cols[col] = acc
        return out

    def __sub__(self, other: "WordMatrix") -> "WordMatrix":
        if (self.dim, self.level_in, self.level_out) != (
            other.dim,
            other.level_in,
            other.level_out,
        ):
            raise ValueError("shape mismatch")
        out = WordMatrix(self.dim, self.level_in, self.level_out)
        for col in set(self.cols) | set(other.cols):
            acc: dict[Word, BiPoly] = {}
            for row, c in self.cols.get(col, {}).items():
                acc[row] = c
            for row, c in other.cols.get(col, {}).items():
                total = acc.get(row, BiPoly()) - c
                if total:
                    acc[row] = total
                else:
                    acc.pop(row, None)
            out.cols[col] = acc
        return out

    def scale(self, coeff) -> "WordMatrix":
        coeff = as_poly(coeff)
        out = WordMatrix(self.dim, self.level_in, self.level_out)
        for col, bucket in self.cols.items():
            out.cols[col] = {row: c * coeff for row, c in bucket.items() if c * coeff}
        return out

    def is_zero(self) -> bool:
        return all(not bucket for bucket in self.cols.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordMatrix):
            return NotImplemented
        return (self - other).is_zero()

    def transpose(self) -> "WordMatrix":
        out = WordMatrix(self.dim, self.level_out, self.level_in)
        for col, bucket in self.cols.items():
            for row, c in bucket.items():
                out.add_to(row, col, c)
        return out

    # -- evaluation / export ------------------------------------------------

    def eval_fraction(self, alpha: Fraction, q: Fraction) -> dict[Word, dict[Word, Fraction]]:
        out: dict[Word, dict[Word, Fraction]] = {}
        for col, bucket in self.cols.items():
            vals = {}
            for row, c in bucket.items():
                v = c.eval_fraction(alpha, q)
                if v:
                    vals[row] = v
            out[col] = vals
        return out

    def to_numpy(self, alpha: float, q: float) -> np.ndarray:
        rows = basis_words(self.level_out, self.dim)
        cols = basis_words(self.level_in, self.dim)
        ridx = {w: i for i, w in enumerate(rows)}
        arr = np.zeros((len(rows), len(cols)))
        for j, col in enumerate(cols):
            for row, c in self.cols.get(col, {}).items():
                arr[ridx[row], j] = c.eval_float(alpha, q)
        return arr

    def to_json(self) -> str:
        cols = basis_words(self.level_in, self.dim)
        rows = basis_words(self.level_out, self.dim)
        entries = [
            [self.entry(row, col).to_list() for col in cols] for row in rows
        ]
        return json.dumps(
            {
                "dim": self.dim,
                "level_in": self.level_in,
                "level_out": self.level_out,
                "entries": entries,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "WordMatrix":
        data = json.loads(text)
        d, n_in, n_out = data["dim"], data["level_in"], data["level_out"]
        mat = cls(d, n_in, n_out)
        cols = basis_words(n_in, d)
        rows = basis_words(n_out, d)
        for r, row_entries in zip(rows, data["entries"]):
            for c, entry in zip(cols, row_entries):
                poly = BiPoly.from_list(entry)
                if poly:
                    mat.add_to(c, r, poly)
        return mat


def _check_matrix_bounds(n: int, d: int) -> None:
    if n > MAX_LEVEL or d > MAX_DIM:
        raise ResourceLimitError(
            f"level matrices are capped at level {MAX_LEVEL}, dimension {MAX_DIM}"
        )
    if d ** (2 * n) > MAX_MATRIX_SIZE:
        raise ResourceLimitError(
            f"level matrix of size {d ** (2 * n)} exceeds the cap {MAX_MATRIX_SIZE}"
        )


def symmetrization(n: int, d: int) -> WordMatrix:
    """The weighted group average Sum_sigma alpha^ninv q^pinv sigma at level n."""
    _check_matrix_bounds(n, d)
    if n == 0:
        return WordMatrix.identity(0, d)
    pairs = [(character_weight(s), s) for s in enumerate_group(n)]
    return WordMatrix.from_group_elements(pairs, n, d)


@lru_cache(maxsize=None)
def r_elements(n: int) -> tuple[tuple[BiPoly, SignedPermutation], ...]:
    """Coefficient/element pairs of the level-n boundary factor.

    The factor peels the outermost slots off the symmetrization:
    identity, the q-weighted cycles bringing an inner slot to the right
    edge, and the alpha-branch that routes through the sign flip.
    """
    if n < 1:
        raise ValueError("boundary factor needs level >= 1")
    gen = [SignedPermutation.generator(n, i) for i in range(n)]
    pairs = [(ONE, SignedPermutation.identity(n))]
    word = SignedPermutation.identity(n)
    for k in range(1, n):
        word = word.compose(gen[n - k])
        pairs.append((Q**k, word))
    tail = SignedPermutation.identity(n)
    for i in range(n - 1, -1, -1):
        tail = tail.compose(gen[i])
    pairs.append((ALPHA * Q ** (n - 1), tail))
    word = tail
    for k in range(1, n):
        word = word.compose(gen[k])
        pairs.append((ALPHA * Q ** (n - 1 + k), word))
    return tuple(pairs)


def r_operator(n: int, d: int) -> WordMatrix:
    _check_matrix_bounds(n, d)
    return WordMatrix.from_group_elements(r_elements(n), n, d)


def middle_embedding(inner_matrix: WordMatrix, d: int) -> WordMatrix:
    """Extend a level-(n-1) matrix to level n, fixing the outermost slots."""
    n = inner_matrix.level_in + 1
    _check_matrix_bounds(n, d)
    out = WordMatrix(d, n, n)
    for w in basis_words(n, d):
        head, mid, tail = w[0], w[1:-1], w[-1]
        col: dict[Word, BiPoly] = {}
        for w_mid, c in inner_matrix.cols.get(mid, {}).items():
            col[(head,) + w_mid + (tail,)] = c
        out.cols[w] = col
    return out


# -- vectors -------------------------------------------------------------------


class FockVector:
    """Finite linear combination of words across levels."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms=None):
        self.dim = dim
        self.terms: dict[Word, BiPoly] = {}
        if terms:
            for w, c in terms.items():
                c = as_poly(c)
                if c:
                    if any(not 1 <= letter <= dim for letter in w):
                        raise ValueError(f"letter out of range in word {w!r}")
                    if len(w) % 2:
                        raise ValueError(f"words must have even length: {w!r}")
                    self.terms[tuple(w)] = c

    @classmethod
    def vacuum(cls, dim: int) -> "FockVector":
        return cls(dim, {(): ONE})

    @classmethod
    def basis_word(cls, dim: int, word) -> "FockVector":
        return cls(dim, {tuple(word): ONE})

    @classmethod
    def simple_tensor(cls, vectors_by_position) -> "FockVector":
        """Expand a product of coordinate vectors placed at positions
        -n..-1, 1..n into the word basis."""
        vecs = [vector(v) for v in vectors_by_position]
        dim = len(vecs[0]) if vecs else 1
        if len(vecs) % 2:
            raise ValueError("need an even number of slots")
        terms: dict[Word, BiPoly] = {(): ONE} if not vecs else {}
        if vecs:
            words = [((), Fraction(1))]
            for v in vecs:
                words = [
                    (w + (i,), c * comp)
                    for w, c in words
                    for i, comp in enumerate(v, 1)
                    if comp
                ]
            terms = {w: as_poly(c) for w, c in words}
        return cls(dim, terms)

    def levels(self) -> list[int]:
        return sorted({len(w) // 2 for w in self.terms})

    def restrict(self, level: int) -> "FockVector":
        return FockVector(
            self.dim, {w: c for w, c in self.terms.items() if len(w) == 2 * level}
        )

    def vacuum_amplitude(self) -> BiPoly:
        return self.terms.get((), BiPoly())

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            total = out.get(w, BiPoly()) + c
            if total:
                out[w] = total
            else:
                out.pop(w, None)
        result = FockVector(self.dim)
        result.terms = out
        return result

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, coeff) -> "FockVector":
        coeff = as_poly(coeff)
        result = FockVector(self.dim)
        if coeff:
            result.terms = {w: c * coeff for w, c in self.terms.items()}
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FockVector)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        items = ", ".join(f"{w}: {c!r}" for w, c in sorted(self.terms.items()))
        return f"FockVector(dim={self.dim}, {{{items}}})"


def free_inner(u: FockVector, v: FockVector, gram: Gram | None = None) -> BiPoly:
    """Undeformed slotwise inner product (level-diagonal)."""
    if u.dim != v.dim:
        raise ValueError("dimension mismatch")
    g = as_gram(gram, u.dim)
    total = BiPoly()
    for w, cu in u.terms.items():
        for w2, cv in v.terms.items():
            if len(w) != len(w2):
                continue
            factor = Fraction(1)
            for a, b in zip(w, w2):
                factor *= g[a - 1][b - 1]
                if not factor:
                    break
            if factor:
                total = total + cu * cv * factor
    return total


def deformed_inner(u: FockVector, v: FockVector, gram: Gram | None = None) -> BiPoly:
    """Inner product twisted by the level symmetrizations."""
    if u.dim != v.dim:
        raise ValueError("dimension mismatch")
    g = as_gram(gram, u.dim)
    total = BiPoly()
    for level in set(u.levels()) & set(v.levels()):
        if level > MAX_LEVEL:
            raise ResourceLimitError(
                f"deformed inner product is capped at level {MAX_LEVEL}"
            )
        un, vn = u.restrict(level), v.restrict(level)
        if level == 0:
            total = total + un.vacuum_amplitude() * vn.vacuum_amplitude()
            continue
        for sigma in enumerate_group(level):
            weight = character_weight(sigma)
            for w, cv in vn.terms.items():
                moved = group_action(sigma, w)
                for w2, cu in un.terms.items():
                    factor = Fraction(1)
                    for a, b in zip(w2, moved):
                        factor *= g[a - 1][b - 1]
                        if not factor:
                            break
                    if factor:
                        total = total + weight * cu * cv * factor
    return total


# -- ladder operators ----------------------------------------------------------


class FockOperator:
    """Linear operator defined by its action on single words."""

    __slots__ = ("dim", "shift", "_action")

    def __init__(self, dim: int, shift: int | None, action):
        self.dim = dim
        self.shift = shift
        self._action = action

    def apply(self, vec: FockVector) -> FockVector:
        if vec.dim != self.dim:
            raise ValueError("dimension mismatch")
        out: dict[Word, BiPoly] = {}
        for w, c in vec.terms.items():
            for w2, c2 in self._action(w).items():
                total = out.get(w2, BiPoly()) + c * c2
                if total:
                    out[w2] = total
                else:
                    out.pop(w2, None)
        result = FockVector(self.dim)
        result.terms = out
        return result

    __call__ = apply

    def level_matrix(self, n: int) -> WordMatrix:
        """Materialize the action on level n."""
        _check_matrix_bounds(n, self.dim)
        shift = self.shift if self.shift is not None else 0
        out = WordMatrix(self.dim, n, n + shift)
        for w in basis_words(n, self.dim):
            out.cols[w] = dict(self._action(w))
        return out


def creation(x, y) -> FockOperator:
    """Prepend x on the left half, append y on the right half."""
    xv, yv = vector(x), vector(y)
    if len(xv) != len(yv):
        raise ValueError("the two argument vectors must share a dimension")
    d = len(xv)

    def action(w: Word) -> dict[Word, BiPoly]:
        out = {}
        for i, xi in enumerate(xv, 1):
            if not xi:
                continue
            for j, yj in enumerate(yv, 1):
                if not yj:
                    continue
                out[(i,) + w + (j,)] = as_poly(xi * yj)
        return out

    return FockOperator(d, +1, action)


def annihilation(x, y, gram: Gram | None = None, route: str = "sums") -> FockOperator:
    """Adjoint of :func:`creation` under the deformed inner product.

    Two implementations must agree: ``route="sums"`` uses the explicit
    slot-contraction sums (plain part plus alpha-weighted twisted part);
    ``route="r"`` applies the boundary factor first and then contracts the
    outermost slots.
    """
    xv, yv = vector(x), vector(y)
    if len(xv) != len(yv):
        raise ValueError("the two argument vectors must share a dimension")
    d = len(xv)
    g = as_gram(gram, d)
    lx = _letter_pairings(xv, g)
    ly = _letter_pairings(yv, g)

    if route == "sums":

        def action(w: Word) -> dict[Word, BiPoly]:
            n = len(w) // 2
            out: dict[Word, BiPoly] = {}
            if n == 0:
                return out
            for k in range(1, n + 1):
                left_letter = w[n - k]
                right_letter = w[n + k - 1]
                reduced = w[: n - k] + w[n - k + 1 : n + k - 1] + w[n + k :]
                plain = lx[left_letter - 1] * ly[right_letter - 1]
                if plain:
                    coeff = BiPoly.monomial(0, n - k, plain)
                    total = out.get(reduced, BiPoly()) + coeff
                    if total:
                        out[reduced] = total
                    else:
                        out.pop(reduced, None)
                twisted = lx[right_letter - 1] * ly[left_letter - 1]
                if twisted:
                    coeff = BiPoly.monomial(1, n - 2 + k, twisted)
                    total = out.get(reduced, BiPoly()) + coeff
                    if total:
                        out[reduced] = total
                    else:
                        out.pop(reduced, None)
            return out

    elif route == "r":

        def action(w: Word) -> dict[Word, BiPoly]:
            n = len(w) // 2
            out: dict[Word, BiPoly] = {}
            if n == 0:
                return out
            for coeff, sigma in r_elements(n):
                moved = group_action(sigma, w)
                pairing = lx[moved[0] - 1] * ly[moved[-1] - 1]
                if pairing:
                    reduced = moved[1:-1]
                    total = out.get(reduced, BiPoly()) + coeff * pairing
                    if total:
                        out[reduced] = total
                    else:
                        out.pop(reduced, None)
            return out

    else:
        raise ValueError(f"unknown annihilation route {route!r}")

    return FockOperator(d, -1, action)


def gaussian(x, y, gram: Gram | None = None) -> FockOperator:
    """Sum of creation and annihilation for the same argument pair."""
    create = creation(x, y)
    destroy = annihilation(x, y, gram)

    def action(w: Word) -> dict[Word, BiPoly]:
        out = dict(create._action(w))
        for w2, c in destroy._action(w).items():
            total = out.get(w2, BiPoly()) + c
            if total:
                out[w2] = total
            else:
                out.pop(w2, None)
        return out

    return FockOperator(create.dim, None, action)


def commutator_check(x, y, xi, eta, d: int, n_max: int = 3,
                     gram: Gram | None = None):
    """Deformed commutation relation, checked exactly level by level.

    Builds destroy(x,y) create(xi,eta) - q create(xi,eta) destroy(x,y) on
    levels 0..n_max-1 and subtracts <x,xi><y,eta> I plus the alpha-weighted
    twisted term <x,eta><y,xi> q^(2n) I.  The twisted weight at level n is
    q^(2n) for every n >= 0: destroying a freshly created pair on the
    vacuum already produces the twisted inner product once, so the vacuum
    sees weight q^0 = 1.  Returns (all_zero, residuals by level).
    """
    g = as_gram(gram, d)
    xv, yv, xiv, etav = vector(x), vector(y), vector(xi), vector(eta)
    create = creation(xiv, etav)
    destroy = annihilation(xv, yv, g)
    straight = vec_inner(xv, xiv, g) * vec_inner(yv, etav, g)
    twisted = vec_inner(xv, etav, g) * vec_inner(yv, xiv, g)
    residuals: dict[int, WordMatrix] = {}
    ok = True
    for n in range(n_max):
        down_up = destroy.level_matrix(n + 1).compose(create.level_matrix(n))
        if n == 0:
            up_down = WordMatrix(d, 0, 0, {(): {}})
        else:
            up_down = create.level_matrix(n - 1).compose(destroy.level_matrix(n))
        lhs = down_up - up_down.scale(Q)
        rhs_coeff = as_poly(straight) + ALPHA * BiPoly.monomial(0, 2 * n, twisted)
        residual = lhs - WordMatrix.identity(n, d).scale(rhs_coeff)
        residuals[n] = residual
        ok = ok and residual.is_zero()
    return ok, residuals


# -- norm estimates ------------------------------------------------------------


@dataclass(frozen=True)
class NormEstimate:
    estimate: float
    region: str
    closed_form_lower: float
    closed_form_upper: float


def _norm_region(alpha: float, q: float) -> str:
    if abs(alpha) <= q < 1:
        return "C"
    if 0 <= alpha <= 1 and -1 < q <= 0:
        return "A"
    if -1 <= alpha < 0 and -1 < q <= 0:
        return "B"
    return "D"


def chain_step_ratios(x, y, gram: Gram | None = None, count: int = 8) -> list[BiPoly]:
    """Exact squared norm ratios along the tensor-power chain of (x, y).

    The k-th entry is |b* v_k|^2 / |v_k|^2 for v_k the k-th tensor power
    word, namely (1 + q + .. + q^k)(|x|^2|y|^2 + alpha <x,y>^2 q^k).
    """
    xv, yv = vector(x), vector(y)
    g = as_gram(gram, len(xv))
    xx = vec_inner(xv, xv, g) * vec_inner(yv, yv, g)
    xy2 = vec_inner(xv, yv, g) ** 2
    out = []
    for k in range(count):
        qnum = sum((Q**i for i in range(k + 1)), BiPoly())
        out.append(qnum * (as_poly(xx) + ALPHA * BiPoly.monomial(0, k, xy2)))
    return out


def norm_estimate(x, y, alpha: float, q: float, n_max: int = 8,
                  gram: Gram | None = None, full_levels: int = 2) -> NormEstimate:
    """Truncated operator norm of creation(x, y) under the deformed product.

    Combines exact full-space generalized singular values on the lowest
    levels with the Rayleigh quotients along the tensor-power chain up to
    level ``n_max`` (the chain carries the supremum in the equality
    regimes).  The result approaches the true norm from below.
    """
    if not -1 <= alpha <= 1 or not abs(q) < 1:
        raise ValueError("parameters must satisfy |alpha| <= 1 and |q| < 1")
    from scipy.linalg import eigh

    xv, yv = vector(x), vector(y)
    d = len(xv)
    g = as_gram(gram, d)
    candidates: list[float] = []

    ratios = chain_step_ratios(xv, yv, g, count=n_max)
    for ratio in ratios:
        value = ratio.eval_float(alpha, q)
        if value < -1e-12:
            raise ArithmeticError(
                "deformed chain norms are not positive at this parameter point"
            )
        candidates.append(float(np.sqrt(max(value, 0.0))))

    create = creation(xv, yv)
    for n in range(min(full_levels, n_max)):
        if d ** (2 * (n + 1)) > MAX_MATRIX_SIZE:
            break
        gram_n = _deformed_gram_matrix(n, d, g, alpha, q)
        gram_up = _deformed_gram_matrix(n + 1, d, g, alpha, q)
        cmat = create.level_matrix(n).to_numpy(alpha, q)
        target = cmat.T @ gram_up @ cmat
        try:
            eigs = eigh(target, gram_n, eigvals_only=True)
        except np.linalg.LinAlgError as exc:
            raise ArithmeticError(
                "deformed Gram matrix is not positive at this parameter point"
            ) from exc
        candidates.append(float(np.sqrt(max(eigs.max(), 0.0))))

    nx = float(np.sqrt(float(vec_inner(xv, xv, g))))
    ny = float(np.sqrt(float(vec_inner(yv, yv, g))))
    c = float(vec_inner(xv, yv, g))
    region = _norm_region(alpha, q)
    if region == "A":
        bound = float(np.sqrt(nx * nx * ny * ny + alpha * c * c))
        lower = upper = bound
    elif region == "B":
        lower = nx * ny / np.sqrt(1 - q)
        upper = nx * ny
    elif region == "C":
        lower = upper = nx * ny / np.sqrt(1 - q)
    else:
        lower = nx * ny / np.sqrt(1 - q)
        upper = float(np.sqrt((1 + abs(alpha)) / (1 - q))) * nx * ny
    return NormEstimate(max(candidates), region, float(lower), float(upper))


def _deformed_gram_matrix(n: int, d: int, gram: Gram, alpha: float, q: float) -> np.ndarray:
    """Numeric matrix of the level-n deformed inner product in the word basis."""
    words = basis_words(n, d)
    gf = np.array([[float(v) for v in row] for row in gram])
    size = len(words)
    out = np.zeros((size, size))
    if n == 0:
        out[0, 0] = 1.0
        return out
    idx = {w: i for i, w in enumerate(words)}
    for sigma in enumerate_group(n):
        weight = float(character_weight(sigma).eval_float(alpha, q))
        for w in words:
            moved = group_action(sigma, w)
            j = idx[w]
            for w2 in words:
                factor = 1.0
                for a, b in zip(w2, moved):
                    factor *= gf[a - 1][b - 1]
                    if factor == 0.0:
                        break
                if factor:
                    out[idx[w2], j] += weight * factor
    return out


def symmetrization_eigenvalues(n: int, d: int, alpha: float, q: float) -> np.ndarray:
    """Spectrum of the numeric level-n symmetrization (identity Gram)."""
    arr = symmetrization(n, d).to_numpy(alpha, q)
    return np.linalg.eigvalsh(0.5 * (arr + arr.T))
