"""(0,1)-matrices stored column-wise as row-subset bitmasks.

A column is an int whose bit ``i`` is set when the column has a 1 in row
``i``.  A matrix is its row count plus an ordered tuple of such columns.
Column order is kept for display and witnesses; no predicate depends on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product as iproduct
from typing import Iterable, Sequence

import numpy as np

MAX_ROWS = 62
CANONICAL_MAX_ROWS = 10
BERGE_FAMILY_MAX_ZEROS = 20


def popcount(x: int) -> int:
    return x.bit_count()


def bits(x: int) -> list[int]:
    """Indices of set bits of ``x`` in increasing order."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def mask(rows: Iterable[int]) -> int:
    m = 0
    for r in rows:
        m |= 1 << r
    return m


@dataclass(frozen=True)
class BitMatrix:
    """Immutable (0,1)-matrix with ``rows`` rows and columns given as masks."""

    rows: int
    cols: tuple[int, ...] = ()

    def __post_init__(self):
        if not 0 <= self.rows <= MAX_ROWS:
            raise ValueError(f"row count {self.rows} outside 0..{MAX_ROWS}")
        cols = tuple(int(c) for c in self.cols)
        full = (1 << self.rows) - 1
        for c in cols:
            if c < 0 or c & ~full:
                raise ValueError(f"column {c:#x} has entries outside {self.rows} rows")
        object.__setattr__(self, "cols", cols)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str]) -> "BitMatrix":
        """Build from row-major data, e.g. ``["110", "101", "011"]``."""
        data = [[int(ch) for ch in r] for r in rows]
        if not data:
            return cls(0, ())
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        cols = []
        for j in range(width):
            c = 0
            for i, r in enumerate(data):
                if r[j] not in (0, 1):
                    raise ValueError(f"entry {r[j]!r} is not 0/1")
                if r[j]:
                    c |= 1 << i
            cols.append(c)
        return cls(len(data), tuple(cols))

    @classmethod
    def from_sets(cls, rows: int, sets: Iterable[Iterable[int]]) -> "BitMatrix":
        return cls(rows, tuple(mask(s) for s in sets))

    @classmethod
    def from_array(cls, arr) -> "BitMatrix":
        a = np.asarray(arr)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_rows(a.astype(int).tolist())

    @classmethod
    def parse_literal(cls, text: str) -> "BitMatrix":
        """Columns as top-to-bottom bit strings joined by commas: ``"110,101,011"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty matrix literal")
        rows = len(parts[0])
        if any(len(p) != rows for p in parts) or any(set(p) - {"0", "1"} for p in parts):
            raise ValueError(f"malformed matrix literal {text!r}")
        return cls(rows, tuple(int(p[::-1], 2) for p in parts))

    @classmethod
    def parse_text(cls, text: str) -> "BitMatrix":
        """Parse the text format: ``"<rows> <cols>"`` then one 0/1 string per row."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        try:
            r, c = (int(x) for x in lines[0].split())
        except ValueError:
            raise ValueError(f"bad header line {lines[0]!r}") from None
        body = [ln.replace(" ", "") for ln in lines[1:]]
        if len(body) != r or any(len(b) != c for b in body):
            raise ValueError(f"matrix body does not match header {r}x{c}")
        if r == 0:
            return cls(0, (0,) * c)
        return cls.from_rows(body)

    # -- views ------------------------------------------------------------
    @property
    def ncols(self) -> int:
        return len(self.cols)

    def __len__(self) -> int:
        return len(self.cols)

    def entry(self, i: int, j: int) -> int:
        return (self.cols[j] >> i) & 1

    def row_sums(self) -> list[int]:
        return [sum((c >> i) & 1 for c in self.cols) for i in range(self.rows)]

    def col_sums(self) -> list[int]:
        return [popcount(c) for c in self.cols]

    def to_rows(self) -> list[str]:
        return ["".join(str((c >> i) & 1) for c in self.cols) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.rows, self.ncols), dtype=np.uint8)
        for j, c in enumerate(self.cols):
            for i in bits(c):
                arr[i, j] = 1
        return arr

    def to_text(self) -> str:
        return "\n".join([f"{self.rows} {self.ncols}", *self.to_rows()]) + "\n"

    def to_literal(self) -> str:
        return ",".join(format(c, f"0{self.rows}b")[::-1] if self.rows else "" for c in self.cols)

    def column_sets(self) -> list[tuple[int, ...]]:
        return [tuple(bits(c)) for c in self.cols]

    def __str__(self) -> str:
        return "\n".join(" ".join(r) for r in self.to_rows()) if self.ncols else f"<{self.rows}x0>"


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def identity(k: int) -> BitMatrix:
    return BitMatrix(k, tuple(1 << i for i in range(k)))


def ones(a: int, b: int = 0) -> BitMatrix:
    """The single column 1_a 0_b."""
    return BitMatrix(a + b, ((1 << a) - 1,))


def zeros(k: int, t: int = 1) -> BitMatrix:
    return BitMatrix(k, (0,) * t)


def K(k: int, ell: int | None = None) -> BitMatrix:
    """``K(k, l)`` is all columns with ``l`` ones; ``K(k)`` is all 2^k columns by layer."""
    if ell is not None:
        return BitMatrix(k, tuple(mask(s) for s in combinations(range(k), ell)))
    cols: list[int] = []
    for l in range(k + 1):
        cols.extend(mask(s) for s in combinations(range(k), l))
    return BitMatrix(k, tuple(cols))


def triangular(k: int) -> BitMatrix:
    """Upper triangular T_k: entry (i,j) is 1 iff i <= j."""
    return BitMatrix(k, tuple((1 << (j + 1)) - 1 for j in range(k)))


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def is_simple(A: BitMatrix) -> bool:
    return len(set(A.cols)) == len(A.cols)


def concat(*mats: BitMatrix) -> BitMatrix:
    if not mats:
        raise ValueError("nothing to concatenate")
    rows = mats[0].rows
    for M in mats[1:]:
        if M.rows != rows:
            raise ValueError(f"row count mismatch: {rows} vs {M.rows}")
    return BitMatrix(rows, tuple(c for M in mats for c in M.cols))


def repeat(A: BitMatrix, t: int) -> BitMatrix:
    """t·A, the concatenation of t copies of A."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return BitMatrix(A.rows, A.cols * t)


def product(*mats: BitMatrix) -> BitMatrix:
    """Stack every column of each factor on top of every column of the next."""
    if not mats:
        raise ValueError("empty product")
    total = sum(M.rows for M in mats)
    if total > MAX_ROWS:
        raise ValueError(f"product has {total} rows, limit is {MAX_ROWS}")
    cols = [0]
    shift = 0
    for M in mats:
        cols = [c | (d << shift) for c in cols for d in M.cols]
        shift += M.rows
    return BitMatrix(total, tuple(cols))


def complement(A: BitMatrix) -> BitMatrix:
    full = (1 << A.rows) - 1
    return BitMatrix(A.rows, tuple(full ^ c for c in A.cols))


def reduce_r(F: BitMatrix) -> BitMatrix:
    """r(F): drop every column of sum 0 or 1."""
    return BitMatrix(F.rows, tuple(c for c in F.cols if popcount(c) >= 2))


def strict_subcolumns(A: BitMatrix) -> BitMatrix:
    """One column per distinct proper subset of some column of A, sorted by (size, mask)."""
    seen: set[int] = set()
    for c in A.cols:
        sub = c
        while True:
            if sub != c:
                seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & c
    return BitMatrix(A.rows, tuple(sorted(seen, key=lambda s: (popcount(s), s))))


def pad_rows(A: BitMatrix, extra: int) -> BitMatrix:
    """Append ``extra`` rows of zeros."""
    return BitMatrix(A.rows + extra, A.cols)


def restrict_rows(A: BitMatrix, rows: Sequence[int]) -> BitMatrix:
    """A|_S with rows taken in the given order."""
    cols = []
    for c in A.cols:
        d = 0
        for new, old in enumerate(rows):
            if (c >> old) & 1:
                d |= 1 << new
        cols.append(d)
    return BitMatrix(len(rows), tuple(cols))


def strip_zero_rows(A: BitMatrix) -> BitMatrix:
    used = 0
    for c in A.cols:
        used |= c
    return restrict_rows(A, bits(used))


def relabel(col: int, perm: Sequence[int]) -> int:
    """Move bit ``i`` of ``col`` to position ``perm[i]``."""
    out = 0
    i = 0
    while col:
        if col & 1:
            out |= 1 << perm[i]
        col >>= 1
        i += 1
    return out


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def _row_classes(A: BitMatrix) -> list[list[int]]:
    """Colour refinement on the row/column incidence structure.

    Returns the rows grouped into classes, classes ordered by colour.  The
    colouring is isomorphism invariant, so permuting only within classes
    still reaches a canonical representative.
    """
    k = A.rows
    row_col = [0] * k
    col_col = [0] * A.ncols
    n_classes = -1
    while True:
        col_sig = [
            (col_col[j], tuple(sorted(row_col[i] for i in bits(c))))
            for j, c in enumerate(A.cols)
        ]
        keys = sorted(set(col_sig))
        col_col = [keys.index(s) for s in col_sig]
        row_sig = [
            (row_col[i], tuple(sorted(col_col[j] for j, c in enumerate(A.cols) if (c >> i) & 1)))
            for i in range(k)
        ]
        keys = sorted(set(row_sig))
        row_col = [keys.index(s) for s in row_sig]
        if len(keys) == n_classes:
            break
        n_classes = len(keys)
    classes: list[list[int]] = [[] for _ in range(n_classes)]
    for i in range(k):
        classes[row_col[i]].append(i)
    return classes


def canonical_form(A: BitMatrix) -> BitMatrix:
    """Canonical representative of A under row and column permutations.

    Rows are first split into colour-refinement classes (an isomorphism
    invariant ordering); within classes every permutation is tried and the
    least sorted column tuple wins.  Columns come out sorted.
    """
    if A.rows > CANONICAL_MAX_ROWS:
        raise ValueError(f"canonical_form supports at most {CANONICAL_MAX_ROWS} rows")
    classes = _row_classes(A)
    slots = []
    start = 0
    for cl in classes:
        slots.append(range(start, start + len(cl)))
        start += len(cl)
    best = None
    for choice in iproduct(*(permutations(s) for s in slots)):
        perm = [0] * A.rows
        for cl, targets in zip(classes, choice):
            for old, new in zip(cl, targets):
                perm[old] = new
        cand = tuple(sorted(relabel(c, perm) for c in A.cols))
        if best is None or cand < best:
            best = cand
    return BitMatrix(A.rows, best if best is not None else ())


def same_up_to_permutation(A: BitMatrix, B: BitMatrix) -> bool:
    return A.rows == B.rows and A.ncols == B.ncols and canonical_form(A) == canonical_form(B)


def same_column_set(A: BitMatrix, B: BitMatrix) -> bool:
    """Equal as matrices up to column order only (rows fixed)."""
    return A.rows == B.rows and sorted(A.cols) == sorted(B.cols)


def berge_family(F: BitMatrix, dedupe: bool = True) -> list[BitMatrix]:
    """All matrices B with F <= B entrywise; deduplicated up to isomorphism by default."""
    zero_cells = [(j, i) for j, c in enumerate(F.cols) for i in range(F.rows) if not (c >> i) & 1]
    if len(zero_cells) > BERGE_FAMILY_MAX_ZEROS:
        raise ValueError(f"{len(zero_cells)} zero entries; limit is {BERGE_FAMILY_MAX_ZEROS}")
    out: list[BitMatrix] = []
    seen: set[BitMatrix] = set()
    for flips in range(1 << len(zero_cells)):
        cols = list(F.cols)
        for b, (j, i) in enumerate(zero_cells):
            if (flips >> b) & 1:
                cols[j] |= 1 << i
        B = BitMatrix(F.rows, tuple(cols))
        if dedupe:
            key = canonical_form(B)
            if key in seen:
                continue
            seen.add(key)
        out.append(B)
    return out
