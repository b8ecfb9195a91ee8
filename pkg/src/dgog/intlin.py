"""Exact integer linear algebra: Smith normal form, cokernels and kernel ranks.

Matrices are dense lists of rows of Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass

Matrix = list[list[int]]


def as_matrix(rows) -> Matrix:
    out = [list(r) for r in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows have different lengths")
    for r in out:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"matrix entry {x!r} is not an integer")
    return out


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(c: int, a: Matrix) -> Matrix:
    return [[c * x for x in r] for r in a]


def absolute(a: Matrix) -> Matrix:
    return [[abs(x) for x in r] for r in a]


def block(rows_of_blocks: list[list[Matrix]]) -> Matrix:
    out: Matrix = []
    for brow in rows_of_blocks:
        for i in range(len(brow[0])):
            out.append([x for b in brow for x in b[i]])
    return out


def det(a: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n, m = shape(a)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [r[:] for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(a: Matrix, pivot: str = "min") -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``a = U·D·V``, ``U``, ``V`` unimodular and ``D`` in Smith form.

    ``pivot`` picks the first pivot at each stage: ``"min"`` takes the entry of
    least absolute value (row-major ties), ``"first"`` the first non-zero entry
    in row-major order. Both give the same ``D``.
    """
    d = as_matrix(a)
    rows, cols = shape(d)
    u, v = identity(rows), identity(cols)

    # Every operation on D is mirrored by its inverse on U (columns) or V (rows),
    # so that U·D·V stays equal to the input throughout.
    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        v[i], v[j] = v[j], v[i]

    def add_row(dst, src, c):  # row dst += c * row src
        d[dst] = [x + c * y for x, y in zip(d[dst], d[src])]
        for r in u:
            r[src] -= c * r[dst]

    def add_col(dst, src, c):  # col dst += c * col src
        for r in d:
            r[dst] += c * r[src]
        v[src] = [x - c * y for x, y in zip(v[src], v[dst])]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        for r in u:
            r[i] = -r[i]

    for t in range(min(rows, cols)):
        cells = [(i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]]
        if not cells:
            break
        if pivot == "min":
            pi, pj = min(cells, key=lambda c: abs(d[c[0]][c[1]]))
        elif pivot == "first":
            pi, pj = cells[0]
        else:
            raise ValueError(f"unknown pivot rule {pivot!r}")
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            changed = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // d[t][t]))
                    if d[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // d[t][t]))
                    if d[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if d[i][j] % d[t][t]), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if d[t][t] < 0:
            negate_row(t)
    return u, d, v


def diagonal(d: Matrix) -> list[int]:
    rows, cols = shape(d)
    return [d[i][i] for i in range(min(rows, cols))]


def invariant_factors(a: Matrix) -> list[int]:
    return diagonal(smith_normal_form(a)[1])


def rank(a: Matrix) -> int:
    return sum(1 for x in invariant_factors(a) if x)


def kernel_rank(a: Matrix) -> int:
    """Rank of the (free) kernel of ``a`` acting on column vectors."""
    return shape(a)[1] - rank(a)


@dataclass(frozen=True)
class AbelianInvariants:
    """ℤ^free_rank ⊕ ℤ/t1 ⊕ ... ⊕ ℤ/tk with t1 | t2 | ... and every ti ≥ 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0 or any(x < 2 for x in t) or \
                any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"not a canonical invariant-factor list: {self.free_rank}, {t}")

    @classmethod
    def free(cls, n: int) -> "AbelianInvariants":
        return cls(n, ())

    def direct_sum(self, other: "AbelianInvariants") -> "AbelianInvariants":
        # regroup the combined elementary divisors into an invariant-factor chain
        return invariants_of_cyclics(self.torsion + other.torsion,
                                     self.free_rank + other.free_rank)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}


def invariants_of_cyclics(orders, free_rank: int = 0) -> AbelianInvariants:
    """Invariant factors of ℤ/o1 ⊕ ℤ/o2 ⊕ ... (orders ≥ 1)."""
    orders = [o for o in orders if o > 1]
    if not orders:
        return AbelianInvariants(free_rank, ())
    diag = invariant_factors([[o if i == j else 0 for j in range(len(orders))]
                              for i, o in enumerate(orders)])
    return AbelianInvariants(free_rank, tuple(x for x in diag if x > 1))


def cokernel(a: Matrix) -> AbelianInvariants:
    """ℤ^rows / (column span of ``a``)."""
    rows, _ = shape(a)
    diag = invariant_factors(a)
    nonzero = [x for x in diag if x]
    return AbelianInvariants(rows - len(nonzero), tuple(x for x in nonzero if x > 1))

