"""The Weyl group W(A) acting on the root lattice Z^n.

Conventions used everywhere in the package:

* a root vector is a tuple of ``n`` Python integers, coordinates over the
  simple roots ``e_1..e_n``;
* ``sigma_i(e_j) = e_j - a_ij e_i``;
* a word ``(x_1, ..., x_s)`` denotes ``sigma_{x_s} ... sigma_{x_1}``, so
  ``x_1`` acts first on column vectors.

Python integers are unbounded, so root coordinates never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanMatrix, Matrix
from .errors import CapExceeded, MixedSignRoot, NotPermutation, VertexOutOfRange

RootVector = tuple[int, ...]
Word = tuple[int, ...]


def unit(n: int, i: int) -> RootVector:
    """The simple root ``e_i``."""
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def is_positive(v) -> bool:
    return any(v) and all(c >= 0 for c in v)


def is_negative(v) -> bool:
    return any(v) and all(c <= 0 for c in v)


def _sign(v) -> int:
    """+1 / -1 for a sign-coherent nonzero vector; raises on mixed signs."""
    if is_positive(v):
        return 1
    if is_negative(v):
        return -1
    raise MixedSignRoot(f"image of a simple root has mixed signs: {v}")


@dataclass(frozen=True)
class WeylElement:
    """An element of W(A), stored as its integer matrix on column vectors."""

    matrix: Matrix

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(tuple(unit(n, i) for i in range(1, n + 1)))

    def is_identity(self) -> bool:
        return self == WeylElement.identity(self.n)

    def column(self, j: int) -> RootVector:
        """Image of ``e_j``."""
        return tuple(row[j - 1] for row in self.matrix)

    def apply(self, v) -> RootVector:
        return tuple(sum(r * c for r, c in zip(row, v)) for row in self.matrix)

    def __matmul__(self, other: WeylElement) -> WeylElement:
        cols = list(zip(*other.matrix))
        return WeylElement(
            tuple(
                tuple(sum(r * c for r, c in zip(row, col)) for col in cols)
                for row in self.matrix
            )
        )

    def __pow__(self, m: int) -> WeylElement:
        if m < 0:
            return self.inverse() ** (-m)
        result = WeylElement.identity(self.n)
        base = self
        while m:
            if m & 1:
                result = result @ base
            base = base @ base
            m >>= 1
        return result

    def inverse(self) -> WeylElement:
        """Exact inverse; Weyl elements are unimodular so it is integral."""
        n = self.n
        aug = [
            [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.matrix)
        ]
        for k in range(n):
            piv = next(i for i in range(k, n) if aug[i][k] != 0)
            aug[k], aug[piv] = aug[piv], aug[k]
            p = aug[k][k]
            aug[k] = [x / p for x in aug[k]]
            for i in range(n):
                if i != k and aug[i][k] != 0:
                    f = aug[i][k]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
        inv = tuple(tuple(row[n:]) for row in aug)
        if any(x.denominator != 1 for row in inv for x in row):
            raise ValueError("matrix is not invertible over the integers")
        return WeylElement(tuple(tuple(int(x) for x in row) for row in inv))

    def lines(self) -> list[str]:
        return [" ".join(str(x) for x in row) for row in self.matrix]


def _check_letter(a: CartanMatrix, i) -> None:
    if not isinstance(i, int) or not 1 <= i <= a.n:
        raise VertexOutOfRange(f"letter {i!r} not in 1..{a.n}")


def reflect(a: CartanMatrix, i: int, v) -> RootVector:
    """``sigma_i(v) = v - (sum_j a_ij v_j) e_i``."""
    _check_letter(a, i)
    row = a.a[i - 1]
    c = sum(x * y for x, y in zip(row, v))
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def simple_reflection(a: CartanMatrix, i: int) -> WeylElement:
    _check_letter(a, i)
    n = a.n
    return WeylElement(
        tuple(
            tuple((int(r == c) - a.a[r][c]) if r == i - 1 else int(r == c) for c in range(n))
            for r in range(n)
        )
    )


def _left_mul(a: CartanMatrix, i: int, m: list[list[int]]) -> None:
    # sigma_i * M only changes row i
    row = a.a[i - 1]
    n = len(m)
    m[i - 1] = [m[i - 1][c] - sum(row[k] * m[k][c] for k in range(n)) for c in range(n)]


def _right_mul(a: CartanMatrix, i: int, m: list[list[int]]) -> None:
    # column j of M*sigma_i is M e_j - a_ij M e_i
    row = a.a[i - 1]
    for r in m:
        pivot = r[i - 1]
        for j, aij in enumerate(row):
            if j == i - 1:
                r[j] = -pivot
            elif aij:
                r[j] -= aij * pivot


def element_of(a: CartanMatrix, word) -> WeylElement:
    """Matrix of ``sigma_{x_s} ... sigma_{x_1}`` for ``word = (x_1, ..., x_s)``."""
    m = [list(r) for r in WeylElement.identity(a.n).matrix]
    for x in word:
        _check_letter(a, x)
        _left_mul(a, x, m)
    return WeylElement(tuple(tuple(r) for r in m))


def is_reduced(a: CartanMatrix, word) -> bool:
    """Whether ``sigma_{x_s} ... sigma_{x_1}`` has length exactly ``s``.

    The product is grown from the left end of the expression: with
    ``P = sigma_{x_s} ... sigma_{x_{j+1}}`` the word stays reduced after
    appending ``sigma_{x_j}`` iff ``P(e_{x_j})`` is a positive root.
    """
    word = tuple(word)
    for x in word:
        _check_letter(a, x)
    m = [list(r) for r in WeylElement.identity(a.n).matrix]
    for x in reversed(word):
        image = tuple(r[x - 1] for r in m)
        if _sign(image) < 0:
            return False
        _right_mul(a, x, m)
    return True


def default_length_cap(n: int, word_len: int = 0) -> int:
    return 10 * n * (word_len + 1)


def reduced_word(a: CartanMatrix, e: WeylElement, cap: int) -> Word:
    """A reduced word for ``e`` found by right descents, least index first.

    Raises ``CapExceeded`` if more than ``cap`` descents are needed or if a
    non-identity matrix has no descent at all (so it is not in W).
    """
    m = [list(r) for r in e.matrix]
    ident = [list(r) for r in WeylElement.identity(a.n).matrix]
    letters = []
    while m != ident:
        if len(letters) >= cap:
            raise CapExceeded(f"length exceeds cap {cap}")
        for i in range(1, a.n + 1):
            if _sign(tuple(r[i - 1] for r in m)) < 0:
                break
        else:
            raise CapExceeded("no descent found; matrix is not a Weyl group element")
        _right_mul(a, i, m)
        letters.append(i)
    # e = sigma_{i_1} ... sigma_{i_k}, so x_1 = i_k acts first
    return tuple(reversed(letters))


def length(a: CartanMatrix, e: WeylElement, cap: int) -> int:
    """Length of ``e``: the number of right descents peeled off to reach 1."""
    return len(reduced_word(a, e, cap))


def word_length(a: CartanMatrix, word, cap: int | None = None) -> int:
    word = tuple(word)
    if cap is None:
        cap = default_length_cap(a.n, len(word))
    return length(a, element_of(a, word), cap)


def check_permutation(n: int, perm) -> Word:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise NotPermutation(f"{perm} is not a permutation of 1..{n}")
    return perm


def coxeter_element(a: CartanMatrix, perm) -> WeylElement:
    """``c = sigma_{v_n} ... sigma_{v_1}`` for ``perm = (v_1, ..., v_n)``."""
    return element_of(a, check_permutation(a.n, perm))


def coxeter_power_lengths(a: CartanMatrix, perm, max_m: int) -> list[int]:
    """``[l(c), l(c^2), ..., l(c^max_m)]``."""
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    c = coxeter_element(a, perm)
    cap = max_m * a.n + 1
    out = []
    power = WeylElement.identity(a.n)
    for _ in range(max_m):
        power = power @ c
        out.append(length(a, power, cap))
    return out
