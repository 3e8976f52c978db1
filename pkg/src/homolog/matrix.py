"""Dense matrices over a Euclidean domain and the Smith normal form.

Everything downstream (kernels, cokernels, cohomology, homotopies, lifts)
reduces to :func:`smith_form` and :func:`solve_linear`.
"""

from __future__ import annotations

import contextvars
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from .rings import Ring, Poly
from .errors import CoefficientOverflow

#: Optional cap on the bit size of any coefficient produced by the Smith form.
entry_bit_cap: contextvars.ContextVar[Optional[int]] = contextvars.ContextVar(
    "entry_bit_cap", default=None
)


class Matrix:
    """Immutable ``rows x cols`` matrix with entries in ``ring``.

    Zero-row and zero-column matrices are legal; they are the maps to and
    from the zero module.
    """

    __slots__ = ("ring", "rows", "cols", "_e", "_hash")

    def __init__(self, ring: Ring, entries: Iterable[Iterable] = (), shape=None):
        self.ring = ring
        data = tuple(tuple(ring.coerce(x) for x in row) for row in entries)
        if shape is None:
            if not data:
                raise ValueError("shape is required for a matrix without rows")
            shape = (len(data), len(data[0]))
        r, c = shape
        if len(data) != r or any(len(row) != c for row in data):
            if r * c == 0 and not any(data):
                data = tuple(() for _ in range(r))
            else:
                raise ValueError(f"entries do not match shape {shape}")
        self.rows, self.cols = r, c
        self._e = data
        self._hash = None

    @classmethod
    def _raw(cls, ring, data, rows, cols) -> "Matrix":
        m = cls.__new__(cls)
        m.ring, m.rows, m.cols = ring, rows, cols
        m._e = tuple(tuple(row) for row in data)
        m._hash = None
        return m

    # -- constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        z = ring.zero
        return cls._raw(ring, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls._raw(ring, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, ring: Ring, diag: Sequence, rows=None, cols=None) -> "Matrix":
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[ring.zero] * cols for _ in range(rows)]
        for k, d in enumerate(diag):
            out[k][k] = ring.coerce(d)
        return cls._raw(ring, out, rows, cols)

    @classmethod
    def column(cls, ring: Ring, values: Sequence) -> "Matrix":
        return cls(ring, [[v] for v in values], shape=(len(values), 1))

    @classmethod
    def block(cls, ring: Ring, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix; every block row must agree in height."""
        out: List[list] = []
        cols = None
        for brow in blocks:
            h = brow[0].rows if brow else 0
            if any(b.rows != h for b in brow):
                raise ValueError("block row heights disagree")
            w = sum(b.cols for b in brow)
            if cols is None:
                cols = w
            elif cols != w:
                raise ValueError("block column widths disagree")
            for i in range(h):
                row = []
                for b in brow:
                    row.extend(b._e[i])
                out.append(row)
        return cls._raw(ring, out, len(out), cols or 0)

    # -- basic access -------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._e[i][j]

    def tolist(self) -> list:
        return [list(row) for row in self._e]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self._e)

    def rows_list(self):
        return self._e

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.ring, [[self._e[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def take_rows(self, start: int, stop: int) -> "Matrix":
        return self.submatrix(range(start, stop), range(self.cols))

    def take_cols(self, start: int, stop: int) -> "Matrix":
        return self.submatrix(range(self.rows), range(start, stop))

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.ring, [list(c) for c in zip(*self._e)] if self.rows else
                           [[] for _ in range(self.cols)], self.cols, self.rows)

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(x == z for row in self._e for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic ---------------------------------------------------------
    def _check_same(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return Matrix._raw(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)],
                           self.rows, self.cols)

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return Matrix._raw(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)],
                           self.rows, self.cols)

    def __neg__(self):
        return Matrix._raw(self.ring, [[-a for a in r] for r in self._e], self.rows, self.cols)

    def scale(self, c) -> "Matrix":
        c = self.ring.coerce(c)
        return Matrix._raw(self.ring, [[c * a for a in r] for r in self._e], self.rows, self.cols)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.ring.zero
        cols = list(zip(*other._e)) if other.rows else [()] * other.cols
        out = []
        for row in self._e:
            out.append([sum((a * b for a, b in zip(row, c) if a != z), z) for c in cols])
        return Matrix._raw(self.ring, out, self.rows, other.cols)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; index (i, k) of the result row is i * other.rows + k."""
        out = []
        for r in self._e:
            for s in other._e:
                out.append([a * b for a in r for b in s])
        return Matrix._raw(self.ring, out, self.rows * other.rows, self.cols * other.cols)

    def hstack(self, *others: "Matrix") -> "Matrix":
        return Matrix.block(self.ring, [[self, *others]])

    def vstack(self, *others: "Matrix") -> "Matrix":
        mats = [self, *others]
        cols = self.cols
        if any(m.cols != cols for m in mats):
            raise ValueError("vstack width mismatch")
        data = [row for m in mats for row in m._e]
        return Matrix._raw(self.ring, data, len(data), cols)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self._e == other._e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.tag, self.rows, self.cols, self._e))
        return self._hash

    def __repr__(self):
        f = self.ring.format
        body = "; ".join(", ".join(f(x) for x in row) for row in self._e)
        return f"Matrix[{self.rows}x{self.cols}]({self.ring.tag}: [{body}])"

    def max_entry_bits(self) -> int:
        return max((_bits(x) for row in self._e for x in row), default=0)


def _bits(x) -> int:
    if isinstance(x, int):
        return abs(x).bit_length()
    if isinstance(x, Poly):
        return max((max(abs(c.numerator).bit_length(), c.denominator.bit_length())
                    for c in x.coeffs), default=0)
    return max(abs(x.numerator).bit_length(), x.denominator.bit_length())


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular.

    ``U_inv`` and ``V_inv`` are the exact inverses, ``diag`` the nonzero
    invariant factors ``d_1 | d_2 | ...`` (unit-normalized).
    """

    U: "Matrix"
    D: "Matrix"
    V: "Matrix"
    U_inv: "Matrix"
    V_inv: "Matrix"
    diag: tuple

    @property
    def rank(self) -> int:
        return len(self.diag)


def smith_form(A: Matrix) -> SmithForm:
    """Smith normal form with both transforms and their inverses.

    Pivots are the nonzero entries of least Euclidean size, ties broken by
    the lowest (row, col); the result is a deterministic function of ``A``.
    """
    R = A.ring
    z = R.zero
    m, n = A.rows, A.cols
    D = A.tolist()
    U = Matrix.identity(R, m).tolist()
    Ui = Matrix.identity(R, m).tolist()
    V = Matrix.identity(R, n).tolist()
    Vi = Matrix.identity(R, n).tolist()

    def swap_rows(i, j):
        if i == j:
            return
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for row in Ui:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]
        for row in Ui:
            row[src] = row[src] - q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in D:
            row[dst] = row[dst] + q * row[src]
        for row in V:
            row[dst] = row[dst] + q * row[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = D[i][j]
                if x != z:
                    key = (R.norm(x), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            clean = True
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t] != z:
                    q, r = R.divmod(D[i][t], p)
                    add_row(i, t, -q)
                    if r != z:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j] != z:
                    q, r = R.divmod(D[t][j], p)
                    add_col(j, t, -q)
                    if r != z:
                        clean = False
            if not clean:
                best = None
                for i in range(t, m):
                    if D[i][t] != z:
                        key = (R.norm(D[i][t]), i, t)
                        if best is None or key < best:
                            best = key
                for j in range(t + 1, n):
                    if D[t][j] != z:
                        key = (R.norm(D[t][j]), t, j)
                        if best is None or key < best:
                            best = key
                _, pi, pj = best
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] != z and not R.divides(p, D[i][j]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, R.one)
        u = R.unit_part(D[t][t])
        if u != R.one:
            w = R.unit_inverse(u)
            D[t] = [w * a for a in D[t]]
            U[t] = [w * a for a in U[t]]
            for row in Ui:
                row[t] = row[t] * u
        diag.append(D[t][t])
        t += 1

    out = SmithForm(
        U=Matrix._raw(R, U, m, m),
        D=Matrix._raw(R, D, m, n),
        V=Matrix._raw(R, V, n, n),
        U_inv=Matrix._raw(R, Ui, m, m),
        V_inv=Matrix._raw(R, Vi, n, n),
        diag=tuple(diag),
    )
    cap = entry_bit_cap.get()
    if cap is not None:
        worst = max(out.U.max_entry_bits(), out.V.max_entry_bits(),
                    out.U_inv.max_entry_bits(), out.V_inv.max_entry_bits())
        if worst > cap:
            raise CoefficientOverflow(f"coefficient of {worst} bits exceeds the cap of {cap} bits")
    return out


def snf(A: Matrix):
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` in Smith normal form."""
    s = smith_form(A)
    return s.U, s.D, s.V


def solve_linear(A: Matrix, B: Matrix) -> Optional[Matrix]:
    """Some ``X`` with ``A @ X == B`` over the ring, or ``None``."""
    if A.rows != B.rows:
        raise ValueError(f"solve_linear: A has {A.rows} rows but B has {B.rows}")
    if A.ring != B.ring:
        raise ValueError("solve_linear: ring mismatch")
    R = A.ring
    s = smith_form(A)
    C = s.U @ B
    r = s.rank
    Y = [[R.zero] * B.cols for _ in range(A.cols)]
    for i in range(A.rows):
        row = C.row(i)
        if i < r:
            d = s.diag[i]
            for k, x in enumerate(row):
                q, rem = R.divmod(x, d)
                if rem != R.zero:
                    return None
                Y[i][k] = q
        elif any(x != R.zero for x in row):
            return None
    return s.V @ Matrix._raw(R, Y, A.cols, B.cols)


def kernel_basis(A: Matrix) -> Matrix:
    """Columns form a basis of ``{x : A @ x == 0}`` (a saturated sublattice)."""
    s = smith_form(A)
    return s.V.take_cols(s.rank, A.cols)


def image_basis(A: Matrix) -> Matrix:
    """Columns form a basis of the column span of ``A``."""
    s = smith_form(A)
    R = A.ring
    cols = [[s.U_inv[i, k] * s.diag[k] for k in range(s.rank)] for i in range(A.rows)]
    return Matrix._raw(R, cols, A.rows, s.rank)


def rank(A: Matrix) -> int:
    return smith_form(A).rank


def det(A: Matrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    if not A.is_square():
        raise ValueError("determinant of a non-square matrix")
    R = A.ring
    n = A.rows
    if n == 0:
        return R.one
    M = A.tolist()
    sign = R.one
    prev = R.one
    for k in range(n - 1):
        if M[k][k] == R.zero:
            for i in range(k + 1, n):
                if M[i][k] != R.zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return R.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = R.exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_unimodular(A: Matrix) -> bool:
    return A.is_square() and A.ring.is_unit(det(A))
