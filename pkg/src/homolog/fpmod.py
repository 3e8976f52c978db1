"""Finitely presented modules over a Euclidean domain.

A module with ``n`` generators and an ``m x n`` presentation matrix ``P`` is
``R^n / (row span of P)``.  Elements are column vectors of length ``n``; the
relation submodule is spanned by the columns of ``P.T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

from .errors import IllDefinedMap
from .matrix import Matrix, image_basis, kernel_basis, smith_form, solve_linear
from .rings import Ring


@dataclass(frozen=True)
class InvariantFactors:
    """Free rank plus torsion ``d_1 | d_2 | ...`` (unit-normalized, non-units)."""

    ring: Ring
    free_rank: int
    torsion: Tuple = ()

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        sym = self.ring.tag
        parts = []
        if self.free_rank == 1:
            parts.append(sym)
        elif self.free_rank > 1:
            parts.append(f"{sym}^{self.free_rank}")
        for d in self.torsion:
            parts.append(f"{sym}/({self.ring.format(d)})" if sym == "Qt" else f"{sym}/{self.ring.format(d)}")
        return " + ".join(parts) if parts else "0"


class FpModule:
    """``R^generators / rowspace(presentation)``."""

    def __init__(self, ring: Ring, generators: int, presentation: Optional[Matrix] = None):
        if presentation is None:
            presentation = Matrix.zeros(ring, 0, generators)
        if not isinstance(presentation, Matrix):
            presentation = Matrix(ring, presentation, shape=(len(presentation), generators))
        if presentation.cols != generators:
            raise ValueError(
                f"presentation has {presentation.cols} columns for {generators} generators")
        self.ring = ring
        self.generators = generators
        self.presentation = presentation

    # -- constructors -------------------------------------------------------
    @classmethod
    def free(cls, ring: Ring, rank: int) -> "FpModule":
        return cls(ring, rank)

    @classmethod
    def cyclic(cls, ring: Ring, order) -> "FpModule":
        return cls(ring, 1, Matrix(ring, [[order]]))

    @classmethod
    def zero(cls, ring: Ring) -> "FpModule":
        return cls(ring, 0)

    @classmethod
    def from_invariants(cls, ring: Ring, free_rank: int, torsion=()) -> "FpModule":
        n = free_rank + len(torsion)
        rows = []
        for k, d in enumerate(torsion):
            row = [ring.zero] * n
            row[free_rank + k] = ring.coerce(d)
            rows.append(row)
        return cls(ring, n, Matrix(ring, rows, shape=(len(rows), n)))

    # -- structure ----------------------------------------------------------
    @property
    def relations(self) -> Matrix:
        """Relation vectors as columns (``generators x m``)."""
        return self.presentation.T

    @cached_property
    def _smith(self):
        return smith_form(self.presentation)

    def normal_form(self) -> InvariantFactors:
        R = self.ring
        s = self._smith
        torsion = tuple(d for d in s.diag if not R.is_unit(d))
        return InvariantFactors(R, self.generators - s.rank, torsion)

    def is_zero(self) -> bool:
        return self.normal_form().is_zero()

    def is_free(self) -> bool:
        return not self.normal_form().torsion

    def contains_zero(self, vectors: Matrix) -> bool:
        """True if every column of ``vectors`` is zero in the module."""
        if vectors.cols == 0:
            return True
        return solve_linear(self.relations, vectors) is not None

    def simplified(self):
        """Isomorphic module on a minimal diagonal presentation.

        Returns ``(S, to_s, from_s)`` with ``to_s: self -> S`` and
        ``from_s: S -> self`` mutually inverse isomorphisms.
        """
        R = self.ring
        s = self._smith
        n = self.generators
        keep = [k for k in range(n) if k >= s.rank or not R.is_unit(s.diag[k])]
        diag = [s.diag[k] for k in keep if k < s.rank]
        S = FpModule(R, len(keep), Matrix(R, [[d if c == r else R.zero for c in range(len(keep))]
                                              for r, d in enumerate(diag)], shape=(len(diag), len(keep))))
        # x |-> V^T x sends the relations of self onto those of the diagonal form
        to_mat = s.V.T.submatrix(keep, range(n))
        from_mat = s.V_inv.T.submatrix(range(n), keep)
        return S, ModuleMap(self, S, to_mat), ModuleMap(S, self, from_mat)

    def direct_sum(self, other: "FpModule") -> "FpModule":
        return direct_sum(self, other)

    def __eq__(self, other):
        if not isinstance(other, FpModule):
            return NotImplemented
        return (self.ring == other.ring and self.generators == other.generators
                and self.presentation == other.presentation)

    def __hash__(self):
        return hash((self.ring, self.generators, self.presentation))

    def __repr__(self):
        return f"FpModule({self.normal_form()}; {self.generators} gens, {self.presentation.rows} rels)"

    def __str__(self):
        return str(self.normal_form())


def direct_sum(*mods: FpModule) -> FpModule:
    ring = mods[0].ring
    n = sum(M.generators for M in mods)
    rows = []
    off = 0
    for M in mods:
        for r in M.presentation.rows_list():
            rows.append([ring.zero] * off + list(r) + [ring.zero] * (n - off - M.generators))
        off += M.generators
    return FpModule(ring, n, Matrix(ring, rows, shape=(len(rows), n)))


class ModuleMap:
    """Homomorphism given on generators: column ``j`` is the image of generator ``j``.

    Well-definedness is checked at construction; the certificate ``Y`` with
    ``matrix @ source.relations == target.relations @ Y`` is kept in
    :attr:`witness`.
    """

    __slots__ = ("source", "target", "matrix", "witness")

    def __init__(self, source: FpModule, target: FpModule, matrix, check: bool = True):
        ring = source.ring
        if not isinstance(matrix, Matrix):
            matrix = Matrix(ring, matrix, shape=(target.generators, source.generators))
        if matrix.shape != (target.generators, source.generators):
            raise ValueError(
                f"map matrix has shape {matrix.shape}, expected {(target.generators, source.generators)}")
        self.source, self.target, self.matrix = source, target, matrix
        self.witness = None
        if check:
            img = matrix @ source.relations
            w = solve_linear(target.relations, img)
            if w is None:
                raise IllDefinedMap("map does not send source relations into target relations")
            self.witness = w

    @property
    def ring(self):
        return self.source.ring

    @classmethod
    def identity(cls, M: FpModule) -> "ModuleMap":
        return cls(M, M, Matrix.identity(M.ring, M.generators), check=False)

    @classmethod
    def zero(cls, M: FpModule, N: FpModule) -> "ModuleMap":
        return cls(M, N, Matrix.zeros(M.ring, N.generators, M.generators), check=False)

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix, check=False)

    def __add__(self, other):
        return ModuleMap(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        return ModuleMap(self.source, self.target, self.matrix - other.matrix, check=False)

    def __neg__(self):
        return ModuleMap(self.source, self.target, -self.matrix, check=False)

    def is_zero(self) -> bool:
        return self.target.contains_zero(self.matrix)

    def equals(self, other: "ModuleMap") -> bool:
        return (self - other).is_zero()

    def __repr__(self):
        return f"ModuleMap({self.source} -> {self.target}, {self.matrix!r})"


def normal_form(M: FpModule) -> InvariantFactors:
    return M.normal_form()


def subquotient(gens: Matrix, rels: Matrix):
    """Present ``span(gens) / span(rels)`` inside a free module.

    ``rels`` must lie in the span of ``gens``.  Returns ``(module, basis)``
    where the columns of ``basis`` are a basis of ``span(gens)`` and the
    module's generators are those basis vectors.
    """
    basis = image_basis(gens)
    coords = solve_linear(basis, rels)
    if coords is None:
        raise ValueError("relations do not lie in the span of the generators")
    return FpModule(gens.ring, basis.cols, coords.T), basis


def preimage_generators(f: ModuleMap) -> Matrix:
    """Generators (columns) of ``{x in R^n : f(x) = 0 in the target}``."""
    F, rel = f.matrix, f.target.relations
    K = kernel_basis(F.hstack(-rel))
    return K.take_rows(0, f.source.generators)


def kernel(f: ModuleMap):
    """Return ``(K, incl)`` with ``incl: K -> source`` a monomorphism onto ``ker f``."""
    G = preimage_generators(f)
    K, basis = subquotient(G, f.source.relations)
    return K, ModuleMap(K, f.source, basis)


def cokernel(f: ModuleMap):
    """Return ``(C, proj)``; ``C`` keeps the target's generators."""
    N = f.target
    C = FpModule(f.ring, N.generators, N.presentation.vstack(f.matrix.T))
    return C, ModuleMap(N, C, Matrix.identity(f.ring, N.generators), check=False)


def image(f: ModuleMap):
    """Return ``(I, incl)`` presenting the image of ``f`` as a submodule of the target."""
    G = f.matrix
    I, basis = subquotient(G.hstack(f.target.relations), f.target.relations)
    return I, ModuleMap(I, f.target, basis)


def _hom_system(M: FpModule, N: FpModule):
    R = M.ring
    PM, PN = M.presentation, N.presentation
    nM, nN = M.generators, N.generators
    # vec is column-major: F[b, a] sits at a * nN + b
    left = PM.kron(Matrix.identity(R, nN))
    right = Matrix.identity(R, PM.rows).kron(PN.T)
    G = kernel_basis(left.hstack(-right)).take_rows(0, nM * nN)
    zero_maps = Matrix.identity(R, nM).kron(PN.T)
    return G, zero_maps


def hom_module(M: FpModule, N: FpModule, with_basis: bool = False):
    """``Hom(M, N)`` as a finitely presented module.

    With ``with_basis=True`` also returns the matrix whose columns are the
    generating homomorphisms, vectorized column-major.
    """
    if M.ring != N.ring:
        raise ValueError("ring mismatch")
    G, Z = _hom_system(M, N)
    H, basis = subquotient(G, Z)
    return (H, basis) if with_basis else H


def unvec(v, rows: int, cols: int, ring) -> Matrix:
    """Inverse of column-major vectorization."""
    return Matrix(ring, [[v[a * rows + b] for a in range(cols)] for b in range(rows)], shape=(rows, cols))


def tensor_module(M: FpModule, N: FpModule) -> FpModule:
    """``M ⊗ N``; generator ``(i, j)`` has index ``i * N.generators + j``."""
    if M.ring != N.ring:
        raise ValueError("ring mismatch")
    R = M.ring
    P = M.presentation.kron(Matrix.identity(R, N.generators)).vstack(
        Matrix.identity(R, M.generators).kron(N.presentation))
    return FpModule(R, M.generators * N.generators, P)


def is_iso(f: ModuleMap) -> bool:
    return kernel(f)[0].is_zero() and cokernel(f)[0].is_zero()


def inverse(f: ModuleMap) -> Optional[ModuleMap]:
    """Two-sided inverse of an isomorphism, or ``None``."""
    M, N = f.source, f.target
    # g with f g = 1_N modulo N's relations: F G - rel_N Y = I
    A = f.matrix.hstack(-N.relations)
    sol = solve_linear(A, Matrix.identity(f.ring, N.generators))
    if sol is None:
        return None
    try:
        g = ModuleMap(N, M, sol.take_rows(0, M.generators))
    except IllDefinedMap:
        return None
    if not (g @ f).equals(ModuleMap.identity(M)):
        return None
    return g
