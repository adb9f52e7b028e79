"""Message-class enumeration and dense linear algebra over F_q^n.

A k-row generator set spans a code whose nonzero codewords split into
proportionality classes of size q-1; the class is what carries the
support, so weight enumeration only ever needs one representative per
class.  There are (q^k - 1)/(q - 1) classes.

Enumeration order (fixed so traces are comparable across runs):
representatives are grouped by the position of their first nonzero
message coordinate, ascending; within a group the trailing coordinates
walk the base-q reflected Gray order with the last coordinate moving
fastest.  Consecutive representatives therefore differ in a single
message coordinate, and the running codeword is updated with one
scalar-row operation, O(n) work per codeword.

For q = 2 rows are packed into Python ints (bit j = coordinate j) and
weights come from popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

from .field import FieldSpec

# q^k must fit the message-index width used by the enumerators.
MESSAGE_INDEX_BITS = 64


def projective_class_count(q: int, k: int) -> int:
    """Number of proportionality classes of nonzero vectors in F_q^k."""
    return (q**k - 1) // (q - 1)


def hamming_weight(vec: Sequence[int]) -> int:
    return sum(1 for x in vec if x)


def pack_rows(rows: Sequence[Sequence[int]]) -> list[int]:
    """Pack binary rows into ints, bit j = coordinate j."""
    out = []
    for row in rows:
        acc = 0
        for j, x in enumerate(row):
            if x:
                acc |= 1 << j
        out.append(acc)
    return out


def rank_of_bitrows(rows: Sequence[int]) -> int:
    """Rank over F_2 of rows packed as ints."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
    return len(basis)


def rank_of_rows(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    """Gaussian-elimination rank of row vectors over the given field."""
    if field.q == 2:
        return rank_of_bitrows(pack_rows(rows))
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    n = len(mat[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


@dataclass
class GeneratorSet:
    """k row vectors in F_q^n; rank is computed lazily and cached."""

    field: FieldSpec
    rows: tuple[tuple[int, ...], ...]
    _rank: int | None = dc_field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        self.rows = tuple(tuple(r) for r in self.rows)
        if self.rows:
            n = len(self.rows[0])
            if any(len(r) != n for r in self.rows):
                raise ValueError("rows must share a common length")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = rank_of_rows(self.field, self.rows)
        return self._rank

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.k


def rank(gen: GeneratorSet) -> int:
    return gen.rank


def gray_steps(radix: int, ndigits: int) -> Iterator[tuple[int, int, int]]:
    """Steps of the reflected base-`radix` Gray walk over `ndigits` digits.

    Yields (digit, old, new) per step, starting from the all-zero word and
    visiting every word exactly once; digit 0 moves fastest.  Loopless
    focus-pointer formulation.
    """
    if ndigits == 0:
        return
    a = [0] * ndigits
    f = list(range(ndigits + 1))
    o = [1] * ndigits
    while True:
        j = f[0]
        f[0] = 0
        if j == ndigits:
            return
        old = a[j]
        a[j] = old + o[j]
        yield j, old, a[j]
        if a[j] == 0 or a[j] == radix - 1:
            o[j] = -o[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1


def projective_representatives(field: FieldSpec, k: int) -> Iterator[tuple[int, ...]]:
    """One message vector per proportionality class, first nonzero entry 1.

    Yielded in the fixed enumeration order described in the module
    docstring; span_weights visits codeword classes in the same order.
    """
    q = field.q
    if k < 1:
        raise ValueError("k must be >= 1")
    if q**k > (1 << MESSAGE_INDEX_BITS):
        raise ValueError(f"q^k exceeds the {MESSAGE_INDEX_BITS}-bit message index width")
    for lead in range(k):
        vec = [0] * k
        vec[lead] = 1
        yield tuple(vec)
        t = k - 1 - lead
        for digit, _, new in gray_steps(q, t):
            vec[k - 1 - digit] = new
            yield tuple(vec)


def span_weights(gen: GeneratorSet) -> list[int]:
    """Hamming weights of one codeword per proportionality class.

    Rank-deficient generator sets are allowed; classes whose codeword is
    zero contribute weight 0.  The result aligns index-by-index with
    projective_representatives(field, k).
    """
    q = gen.field.q
    k = gen.k
    if k < 1:
        raise ValueError("need at least one generator row")
    if q**k > (1 << MESSAGE_INDEX_BITS):
        raise ValueError(f"q^k exceeds the {MESSAGE_INDEX_BITS}-bit message index width")
    if q == 2:
        return _span_weights_packed(pack_rows(gen.rows), k)
    return _span_weights_generic(gen.field, gen.rows, k)


def span_weights_packed(bitrows: Sequence[int], k: int) -> list[int]:
    """q = 2 fast path on pre-packed rows."""
    return _span_weights_packed(list(bitrows), k)


def _span_weights_packed(rows: list[int], k: int) -> list[int]:
    out = []
    for lead in range(k):
        c = rows[lead]
        out.append(c.bit_count())
        for digit, _, _ in gray_steps(2, k - 1 - lead):
            c ^= rows[k - 1 - digit]
            out.append(c.bit_count())
    return out


def _span_weights_generic(field: FieldSpec, rows: tuple[tuple[int, ...], ...], k: int) -> list[int]:
    q = field.q
    n = len(rows[0])
    out = []
    for lead in range(k):
        c = list(rows[lead])
        out.append(hamming_weight(c))
        for digit, old, new in gray_steps(q, k - 1 - lead):
            delta = field.sub(new, old)
            row = rows[k - 1 - digit]
            for i in range(n):
                c[i] = field.add(c[i], field.mul(delta, row[i]))
            out.append(hamming_weight(c))
    return out
