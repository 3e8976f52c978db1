"""Bounded cochain complexes, chain maps and their calculus.

Sign conventions (one set, used everywhere):

* translation ``X[k]^i = X^{i+k}`` with differential ``(-1)^k d``; a chain map
  shifts without sign, ``f[k]^i = f^{i+k}``;
* mapping cone ``cone(a)^i = L^{i+1} ⊕ M^i`` with differential
  ``[[-d_L, 0], [a, d_M]]``;
* Hom complex ``d(f) = d_N f - (-1)^i f d_M`` for ``f`` of degree ``i``;
* tensor totalization ``d = d_M ⊗ 1 + (-1)^p 1 ⊗ d_N`` on ``M^p ⊗ N^q``.

Totalization bases are ordered by source degree, then source index, then
target index (``hom_complex``) or by ``p``, then the index pair
(``tensor_complex``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from . import fpmod
from .fpmod import FpModule, ModuleMap, subquotient
from .matrix import Matrix, kernel_basis, smith_form, solve_linear
from .rings import Ring


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _span(*ranges):
    pts = [r for r in ranges if r is not None]
    if not pts:
        return None
    return min(p[0] for p in pts), max(p[1] for p in pts)


class FreeComplex:
    """Bounded cochain complex of finite-rank free modules.

    ``ranks`` maps degree to rank; ``differentials`` maps ``i`` to the matrix
    of ``d^i: X^i -> X^{i+1}`` (shape ``rank(i+1) x rank(i)``).  Missing
    differentials are zero.
    """

    def __init__(self, ring: Ring, ranks: Dict[int, int], differentials: Optional[dict] = None):
        self.ring = ring
        self._ranks = {int(i): int(r) for i, r in ranks.items() if r}
        if any(r < 0 for r in self._ranks.values()):
            raise ValueError("negative rank")
        self._d: Dict[int, Matrix] = {}
        for i, m in (differentials or {}).items():
            if not isinstance(m, Matrix):
                m = Matrix(ring, m, shape=(self.rank(i + 1), self.rank(i)))
            expected = (self.rank(i + 1), self.rank(i))
            if m.shape != expected:
                raise ValueError(f"differential d^{i} has shape {m.shape}, expected {expected}")
            if m.rows and m.cols:
                self._d[i] = m

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_maps(cls, ring: Ring, start: int, maps) -> "FreeComplex":
        """Complex ``X^start -> X^{start+1} -> ...`` from its differentials."""
        maps = [m if isinstance(m, Matrix) else Matrix(ring, m) for m in maps]
        ranks = {start: maps[0].cols}
        for k, m in enumerate(maps):
            ranks[start + k + 1] = m.rows
        return cls(ring, ranks, {start + k: m for k, m in enumerate(maps)})

    @classmethod
    def single(cls, ring: Ring, rank: int = 1, degree: int = 0) -> "FreeComplex":
        return cls(ring, {degree: rank})

    @classmethod
    def zero(cls, ring: Ring) -> "FreeComplex":
        return cls(ring, {})

    # -- access -------------------------------------------------------------
    def rank(self, i: int) -> int:
        return self._ranks.get(i, 0)

    def d(self, i: int) -> Matrix:
        m = self._d.get(i)
        if m is None:
            return Matrix.zeros(self.ring, self.rank(i + 1), self.rank(i))
        return m

    @property
    def ranks(self) -> Dict[int, int]:
        return dict(sorted(self._ranks.items()))

    @property
    def differentials(self) -> Dict[int, Matrix]:
        return dict(sorted(self._d.items()))

    def support(self):
        if not self._ranks:
            return None
        return min(self._ranks), max(self._ranks)

    def degrees(self):
        s = self.support()
        return range(s[0], s[1] + 1) if s else range(0)

    def is_zero(self) -> bool:
        return not self._ranks

    def validate(self) -> bool:
        """True when ``d^{i+1} d^i == 0`` for every ``i``."""
        return all((self.d(i + 1) @ self.d(i)).is_zero() for i in self.degrees())

    def __eq__(self, other):
        if not isinstance(other, FreeComplex):
            return NotImplemented
        return self.ring == other.ring and self._ranks == other._ranks and self._d == other._d

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self._ranks.items())), tuple(sorted(self._d.items()))))

    def __repr__(self):
        parts = [f"{self.rank(i)}@{i}" for i in self.degrees()]
        return f"FreeComplex({self.ring.tag}; {' '.join(parts) or '0'})"

    def as_module_complex(self) -> "ModuleComplex":
        mods = {i: FpModule.free(self.ring, r) for i, r in self._ranks.items()}
        return ModuleComplex(self.ring, mods, dict(self._d), check=False)


class ModuleComplex:
    """Bounded cochain complex of finitely presented modules."""

    def __init__(self, ring: Ring, modules: Dict[int, FpModule], differentials: Optional[dict] = None,
                 check: bool = True):
        self.ring = ring
        self._mods = {int(i): M for i, M in modules.items() if M.generators}
        self._d: Dict[int, ModuleMap] = {}
        for i, f in (differentials or {}).items():
            src, tgt = self.module(i), self.module(i + 1)
            mat = f.matrix if isinstance(f, ModuleMap) else f
            if not isinstance(mat, Matrix):
                mat = Matrix(ring, mat, shape=(tgt.generators, src.generators))
            if mat.shape != (tgt.generators, src.generators):
                raise ValueError(f"differential d^{i} has shape {mat.shape}, "
                                 f"expected {(tgt.generators, src.generators)}")
            if mat.rows and mat.cols:
                self._d[i] = ModuleMap(src, tgt, mat, check=check)

    @classmethod
    def concentrated(cls, M: FpModule, degree: int = 0) -> "ModuleComplex":
        return cls(M.ring, {degree: M})

    def module(self, i: int) -> FpModule:
        M = self._mods.get(i)
        return M if M is not None else FpModule.zero(self.ring)

    def d(self, i: int) -> ModuleMap:
        f = self._d.get(i)
        return f if f is not None else ModuleMap.zero(self.module(i), self.module(i + 1))

    @property
    def modules(self):
        return dict(sorted(self._mods.items()))

    def support(self):
        if not self._mods:
            return None
        return min(self._mods), max(self._mods)

    def degrees(self):
        s = self.support()
        return range(s[0], s[1] + 1) if s else range(0)

    def is_free(self) -> bool:
        return all(M.presentation.rows == 0 for M in self._mods.values())

    def as_free_complex(self) -> FreeComplex:
        if not self.is_free():
            raise ValueError("complex has relations; resolve it first")
        return FreeComplex(self.ring, {i: M.generators for i, M in self._mods.items()},
                           {i: f.matrix for i, f in self._d.items()})

    def validate(self) -> bool:
        return all((self.d(i + 1) @ self.d(i)).is_zero() for i in self.degrees())

    def __repr__(self):
        parts = [f"{self.module(i)}@{i}" for i in self.degrees()]
        return f"ModuleComplex({self.ring.tag}; {', '.join(parts) or '0'})"


Complex = Union[FreeComplex, ModuleComplex]


def as_module_complex(X) -> ModuleComplex:
    if isinstance(X, ModuleComplex):
        return X
    if isinstance(X, FreeComplex):
        return X.as_module_complex()
    if isinstance(X, FpModule):
        return ModuleComplex.concentrated(X)
    raise TypeError(f"cannot view {type(X).__name__} as a complex of modules")


def _term_size(X, i) -> int:
    return X.rank(i) if isinstance(X, FreeComplex) else X.module(i).generators


def _d_matrix(X, i) -> Matrix:
    return X.d(i) if isinstance(X, FreeComplex) else X.d(i).matrix


# ---------------------------------------------------------------------------
# chain maps and homotopies
# ---------------------------------------------------------------------------


class ChainMap:
    """Degreewise matrices ``f^i: source^i -> target^i`` on generators.

    Works for both free complexes and complexes of finitely presented
    modules; in the latter case equalities hold modulo relations.
    """

    def __init__(self, source: Complex, target: Complex, components: Optional[dict] = None):
        self.source, self.target = source, target
        self.ring = source.ring
        self._c: Dict[int, Matrix] = {}
        for i, m in (components or {}).items():
            shape = (_term_size(target, i), _term_size(source, i))
            if not isinstance(m, Matrix):
                m = Matrix(self.ring, m, shape=shape)
            if m.shape != shape:
                raise ValueError(f"component {i} has shape {m.shape}, expected {shape}")
            if m.rows and m.cols:
                self._c[i] = m

    @classmethod
    def identity(cls, X: Complex) -> "ChainMap":
        return cls(X, X, {i: Matrix.identity(X.ring, _term_size(X, i)) for i in X.degrees()})

    @classmethod
    def zero(cls, X: Complex, Y: Complex) -> "ChainMap":
        return cls(X, Y, {})

    def __getitem__(self, i: int) -> Matrix:
        m = self._c.get(i)
        if m is None:
            return Matrix.zeros(self.ring, _term_size(self.target, i), _term_size(self.source, i))
        return m

    component = __getitem__

    @property
    def components(self):
        return dict(sorted(self._c.items()))

    @property
    def is_free(self) -> bool:
        return isinstance(self.source, FreeComplex) and isinstance(self.target, FreeComplex)

    def degrees(self):
        s = _span(self.source.support(), self.target.support())
        return range(s[0], s[1] + 1) if s else range(0)

    def _vanishes(self, i, mat: Matrix) -> bool:
        if isinstance(self.target, FreeComplex):
            return mat.is_zero()
        return self.target.module(i).contains_zero(mat)

    def is_chain_map(self) -> bool:
        """``d_N f^i == f^{i+1} d_M`` in every degree (modulo relations)."""
        S, T = self.source, self.target
        for i in self.degrees():
            diff = _d_matrix(T, i) @ self[i] - self[i + 1] @ _d_matrix(S, i)
            if not self._vanishes(i + 1, diff):
                return False
        if not isinstance(S, FreeComplex):
            for i in S.degrees():
                try:
                    ModuleMap(S.module(i), T.module(i), self[i])
                except fpmod.IllDefinedMap:
                    return False
        return True

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        if not isinstance(other, ChainMap):
            return NotImplemented
        degs = other.source.degrees()
        return ChainMap(other.source, self.target, {i: self[i] @ other[i] for i in degs})

    def _combine(self, other, op):
        degs = self.degrees()
        return ChainMap(self.source, self.target, {i: op(self[i], other[i]) for i in degs})

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        return ChainMap(self.source, self.target, {i: -m for i, m in self._c.items()})

    def scale(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target, {i: m.scale(c) for i, m in self._c.items()})

    def equals(self, other: "ChainMap") -> bool:
        diff = self - other
        return all(diff._vanishes(i, diff[i]) for i in self.degrees())

    def shift(self, k: int) -> "ChainMap":
        return ChainMap(shift(self.source, k), shift(self.target, k),
                        {i - k: m for i, m in self._c.items()})

    def is_degreewise_iso(self) -> bool:
        """Every component is an invertible square matrix (free complexes)."""
        from .matrix import is_unimodular
        return all(_term_size(self.source, i) == _term_size(self.target, i) and is_unimodular(self[i])
                   for i in self.degrees())

    def __repr__(self):
        return f"ChainMap({self.source!r} -> {self.target!r})"


class Homotopy:
    """Components ``h^i: source^i -> target^{i-1}``."""

    def __init__(self, source: FreeComplex, target: FreeComplex, components: Optional[dict] = None):
        self.source, self.target = source, target
        self.ring = source.ring
        self._c: Dict[int, Matrix] = {}
        for i, m in (components or {}).items():
            shape = (target.rank(i - 1), source.rank(i))
            if m.shape != shape:
                raise ValueError(f"homotopy component {i} has shape {m.shape}, expected {shape}")
            if m.rows and m.cols:
                self._c[i] = m

    def __getitem__(self, i: int) -> Matrix:
        m = self._c.get(i)
        if m is None:
            return Matrix.zeros(self.ring, self.target.rank(i - 1), self.source.rank(i))
        return m

    @property
    def components(self):
        return dict(sorted(self._c.items()))

    def boundary(self) -> ChainMap:
        """The chain map ``d h + h d``."""
        S, T = self.source, self.target
        degs = _span(S.support(), T.support())
        comps = {}
        if degs:
            for i in range(degs[0], degs[1] + 1):
                comps[i] = T.d(i - 1) @ self[i] + self[i + 1] @ S.d(i)
        return ChainMap(S, T, comps)

    def witnesses(self, f: ChainMap) -> bool:
        """True when ``f == d h + h d`` exactly."""
        return f.equals(self.boundary())


# ---------------------------------------------------------------------------
# basic constructions
# ---------------------------------------------------------------------------


def validate(X: Complex) -> bool:
    return X.validate()


def shift(X: Complex, k: int) -> Complex:
    """``X[k]``: degree ``i`` holds ``X^{i+k}``, differential ``(-1)^k d``."""
    s = _sign(k)
    if isinstance(X, FreeComplex):
        return FreeComplex(X.ring, {i - k: r for i, r in X.ranks.items()},
                           {i - k: (m if s == 1 else -m) for i, m in X.differentials.items()})
    return ModuleComplex(X.ring, {i - k: M for i, M in X.modules.items()},
                         {i - k: (X.d(i).matrix if s == 1 else -X.d(i).matrix) for i in X.degrees()},
                         check=False)


def cone(alpha: ChainMap):
    """Mapping cone with its standard triangle maps.

    Returns ``(N, beta, gamma)`` where ``N^i = L^{i+1} ⊕ M^i``,
    ``beta = [0; 1]: M -> N`` and ``gamma = [1, 0]: N -> L[1]``.
    """
    L, M = alpha.source, alpha.target
    R = alpha.ring
    sl = L.support()
    span = _span((sl[0] - 1, sl[1] - 1) if sl else None, M.support())
    degs = range(span[0], span[1] + 1) if span else range(0)
    sizes = {i: (_term_size(L, i + 1), _term_size(M, i)) for i in range(degs.start, degs.stop + 1)} \
        if span else {}

    def block(i):
        a, b = sizes[i]
        a2, b2 = sizes[i + 1]
        return Matrix.block(R, [
            [-_d_matrix(L, i + 1), Matrix.zeros(R, a2, b)],
            [alpha[i + 1], _d_matrix(M, i)],
        ])

    free = isinstance(L, FreeComplex) and isinstance(M, FreeComplex)
    diffs = {i: block(i) for i in degs}
    if free:
        N = FreeComplex(R, {i: sum(sizes[i]) for i in degs}, diffs)
    else:
        mods = {i: fpmod.direct_sum(as_module_complex(L).module(i + 1), as_module_complex(M).module(i))
                for i in degs}
        N = ModuleComplex(R, mods, diffs, check=False)
    Lsh = shift(L, 1)
    beta, gamma = {}, {}
    for i in degs:
        a, b = sizes[i]
        beta[i] = Matrix.zeros(R, a, b).vstack(Matrix.identity(R, b))
        gamma[i] = Matrix.identity(R, a).hstack(Matrix.zeros(R, a, b))
    return N, ChainMap(M, N, beta), ChainMap(N, Lsh, gamma)


def stupid_truncate(X: FreeComplex, lo: int, hi: int) -> FreeComplex:
    """Keep degrees ``lo..hi`` (inclusive); an empty window gives the zero complex."""
    ranks = {i: r for i, r in X.ranks.items() if lo <= i <= hi}
    diffs = {i: m for i, m in X.differentials.items() if lo <= i and i + 1 <= hi}
    return FreeComplex(X.ring, ranks, diffs)


def smart_truncate_le(X: FreeComplex, i: int):
    """``smt^{<=i}``: degree ``i`` replaced by its cocycles (free, with basis).

    Returns ``(T, incl)`` where ``incl: T -> X`` induces isomorphisms on
    ``H^j`` for ``j <= i``.
    """
    R = X.ring
    K = kernel_basis(X.d(i))
    ranks = {j: r for j, r in X.ranks.items() if j < i}
    ranks[i] = K.cols
    diffs = {j: m for j, m in X.differentials.items() if j < i - 1}
    if X.rank(i - 1):
        dd = solve_linear(K, X.d(i - 1))
        diffs[i - 1] = dd
    T = FreeComplex(R, ranks, diffs)
    comps = {j: Matrix.identity(R, r) for j, r in ranks.items() if j < i}
    comps[i] = K
    return T, ChainMap(T, X, comps)


def smart_truncate_ge(X: FreeComplex, i: int):
    """``smt^{>=i}``: degree ``i`` replaced by ``Y^i = coker(d^{i-1})``.

    Returns ``(T, proj)`` with ``T`` a :class:`ModuleComplex` and
    ``proj: X -> T`` inducing isomorphisms on ``H^j`` for ``j >= i``.
    """
    R = X.ring
    mods = {j: FpModule.free(R, r) for j, r in X.ranks.items() if j > i}
    mods[i] = FpModule(R, X.rank(i), X.d(i - 1).T)
    diffs = {j: m for j, m in X.differentials.items() if j >= i}
    T = ModuleComplex(R, mods, diffs)
    comps = {j: Matrix.identity(R, X.rank(j)) for j in X.degrees() if j >= i}
    return T, ChainMap(X, T, comps)


# ---------------------------------------------------------------------------
# Hom and tensor totalizations
# ---------------------------------------------------------------------------


def _hom_layout(M: FreeComplex, N: FreeComplex, i: int):
    """Blocks ``(j, rank M^j, rank N^{j+i}, offset)`` of ``Hom(M, N)^i``."""
    out, off = [], 0
    for j in M.degrees():
        a, b = M.rank(j), N.rank(j + i)
        if a and b:
            out.append((j, a, b, off))
            off += a * b
    return out, off


def _hom_degrees(M: FreeComplex, N: FreeComplex):
    sm, sn = M.support(), N.support()
    if not sm or not sn:
        return range(0)
    return range(sn[0] - sm[1], sn[1] - sm[0] + 1)


def _place(target: list, block: Matrix, r0: int, c0: int):
    for a, row in enumerate(block.rows_list()):
        trow = target[r0 + a]
        for b, x in enumerate(row):
            if x != 0:
                trow[c0 + b] = trow[c0 + b] + x


def hom_complex(M: FreeComplex, N: FreeComplex) -> FreeComplex:
    """The complex ``Hom(M, N)`` with ``d(f) = d_N f - (-1)^i f d_M``.

    A degree-``i`` element is a family ``f^j: M^j -> N^{j+i}``; inside each
    block ``f^j`` is vectorized column-major, so entry ``f^j[b, a]`` has
    coordinate ``offset + a * rank(N^{j+i}) + b``.
    """
    R = M.ring
    I = lambda n: Matrix.identity(R, n)
    degs = _hom_degrees(M, N)
    layouts = {i: _hom_layout(M, N, i) for i in range(degs.start - 1, degs.stop + 1)} if degs else {}
    ranks = {i: layouts[i][1] for i in degs}
    diffs = {}
    for i in degs:
        src, ns = layouts[i]
        dst, nd = layouts[i + 1]
        if not ns or not nd:
            continue
        where = {j: off for (j, a, b, off) in dst}
        out = [[R.zero] * ns for _ in range(nd)]
        sg = -_sign(i)
        for (j, a, b, off) in src:
            if j in where and N.rank(j + i + 1):
                _place(out, I(a).kron(N.d(j + i)), where[j], off)
            if j - 1 in where and M.rank(j - 1):
                _place(out, M.d(j - 1).T.kron(I(b)).scale(sg), where[j - 1], off)
        diffs[i] = Matrix(R, out, shape=(nd, ns))
    return FreeComplex(R, ranks, diffs)


def hom_element(M: FreeComplex, N: FreeComplex, i: int, maps: dict) -> Matrix:
    """Coordinates in ``Hom(M, N)^i`` of the family ``{j: f^j}``."""
    R = M.ring
    layout, total = _hom_layout(M, N, i)
    v = [R.zero] * total
    for (j, a, b, off) in layout:
        f = maps.get(j)
        if f is None:
            continue
        if f.shape != (b, a):
            raise ValueError(f"component {j} has shape {f.shape}, expected {(b, a)}")
        for x in range(a):
            for y in range(b):
                v[off + x * b + y] = f[y, x]
    return Matrix.column(R, v)


def hom_maps(M: FreeComplex, N: FreeComplex, i: int, vec) -> Dict[int, Matrix]:
    """Inverse of :func:`hom_element`; ``vec`` is a column matrix or sequence."""
    R = M.ring
    if isinstance(vec, Matrix):
        vec = vec.col(0)
    layout, total = _hom_layout(M, N, i)
    if len(vec) != total:
        raise ValueError("vector length does not match the Hom degree")
    return {j: Matrix(R, [[vec[off + x * b + y] for x in range(a)] for y in range(b)], shape=(b, a))
            for (j, a, b, off) in layout}


def chain_map_from_cocycle(M: FreeComplex, N: FreeComplex, vec) -> ChainMap:
    return ChainMap(M, N, hom_maps(M, N, 0, vec))


def _tensor_layout(M: FreeComplex, N: FreeComplex, i: int):
    out, off = [], 0
    for p in M.degrees():
        a, b = M.rank(p), N.rank(i - p)
        if a and b:
            out.append((p, a, b, off))
            off += a * b
    return out, off


def tensor_complex(M: FreeComplex, N: FreeComplex) -> FreeComplex:
    """Direct-sum totalization with ``d = d_M ⊗ 1 + (-1)^p 1 ⊗ d_N``.

    Basis element ``e_a ⊗ f_b`` of ``M^p ⊗ N^q`` has coordinate
    ``offset(p) + a * rank(N^q) + b``.
    """
    R = M.ring
    I = lambda n: Matrix.identity(R, n)
    sm, sn = M.support(), N.support()
    if not sm or not sn:
        return FreeComplex.zero(R)
    degs = range(sm[0] + sn[0], sm[1] + sn[1] + 1)
    layouts = {i: _tensor_layout(M, N, i) for i in range(degs.start, degs.stop + 1)}
    ranks = {i: layouts[i][1] for i in degs}
    diffs = {}
    for i in degs:
        src, ns = layouts[i]
        dst, nd = layouts[i + 1]
        if not ns or not nd:
            continue
        where = {p: off for (p, a, b, off) in dst}
        out = [[R.zero] * ns for _ in range(nd)]
        for (p, a, b, off) in src:
            q = i - p
            if p + 1 in where:
                _place(out, M.d(p).kron(I(b)), where[p + 1], off)
            if p in where and N.rank(q + 1):
                _place(out, I(a).kron(N.d(q)).scale(_sign(p)), where[p], off)
        diffs[i] = Matrix(R, out, shape=(nd, ns))
    return FreeComplex(R, ranks, diffs)


# ---------------------------------------------------------------------------
# cohomology
# ---------------------------------------------------------------------------


@dataclass
class CohomologyData:
    """``H^i`` with the cocycle basis it is presented on.

    ``basis`` columns are cocycle representatives of the generators;
    ``boundaries`` spans the submodule quotiented out in ``X^i``.
    """

    module: FpModule
    basis: Matrix
    boundaries: Matrix


def cohomology_data(X: Complex, i: int) -> CohomologyData:
    R = X.ring
    if isinstance(X, FreeComplex):
        Z = kernel_basis(X.d(i))
        B = X.d(i - 1)
        coords = solve_linear(Z, B)
        if coords is None:
            raise ValueError(f"image of d^{i - 1} is not inside the cocycles: not a complex")
        return CohomologyData(FpModule(R, Z.cols, coords.T), Z, B)
    Xi = X.module(i)
    G = fpmod.preimage_generators(X.d(i))
    rel = Xi.relations.hstack(X.d(i - 1).matrix)
    H, basis = subquotient(G.hstack(rel), rel)
    return CohomologyData(H, basis, rel)


def cohomology(X: Complex, i: int) -> FpModule:
    """``H^i(X) = Z^i / B^i`` as a finitely presented module."""
    return cohomology_data(X, i).module


def cohomology_table(X: Complex) -> Dict[int, FpModule]:
    return {i: cohomology(X, i) for i in X.degrees()}


def is_acyclic(X: Complex) -> bool:
    if isinstance(X, FreeComplex):
        R = X.ring
        forms = {i: smith_form(X.d(i)) for i in range(X.degrees().start - 1, X.degrees().stop)} \
            if X.support() else {}
        for i in X.degrees():
            below, here = forms[i - 1], forms[i]
            if X.rank(i) - here.rank != below.rank:
                return False
            if not all(R.is_unit(d) for d in below.diag):
                return False
        return True
    return all(cohomology(X, i).is_zero() for i in X.degrees())


def induced_map(f: ChainMap, i: int) -> ModuleMap:
    """``H^i(f): H^i(source) -> H^i(target)``."""
    src = cohomology_data(f.source, i)
    tgt = cohomology_data(f.target, i)
    img = f[i] @ src.basis
    A = tgt.basis.hstack(tgt.boundaries)
    sol = solve_linear(A, img)
    if sol is None:
        raise ValueError("image of a cocycle is not a cocycle: not a chain map")
    return ModuleMap(src.module, tgt.module, sol.take_rows(0, tgt.basis.cols))


def is_null_homotopic(f: ChainMap) -> Optional[Homotopy]:
    """A homotopy ``h`` with ``f = d h + h d``, or ``None``.

    Solved as one linear system: ``f`` must be the Hom-complex boundary of
    some degree ``-1`` element.
    """
    M, N = f.source, f.target
    H = hom_complex(M, N)
    v = hom_element(M, N, 0, {j: f[j] for j in M.degrees()})
    if H.rank(0) == 0:
        return Homotopy(M, N, {})
    x = solve_linear(H.d(-1), v)
    if x is None:
        return None
    return Homotopy(M, N, hom_maps(M, N, -1, x))


def is_quasi_iso(f: ChainMap) -> bool:
    """True when the cone of ``f`` is acyclic."""
    return is_acyclic(cone(f)[0])


def is_quasi_iso_via_cohomology(f: ChainMap) -> bool:
    """Independent route: every ``H^i(f)`` is an isomorphism."""
    return all(fpmod.is_iso(induced_map(f, i)) for i in f.degrees())


def first_nonzero_cohomology(X: Complex):
    for i in X.degrees():
        H = cohomology(X, i)
        if not H.is_zero():
            return i, H
    return None


# ---------------------------------------------------------------------------
# the turning lemma
# ---------------------------------------------------------------------------


@dataclass
class TurnedTriangle:
    """Data comparing ``L[1]`` with ``cone(beta)`` for ``beta: M -> cone(alpha)``.

    ``rho: L[1] -> P`` and ``chi: P -> L[1]`` are mutually inverse up to
    the homotopy ``theta`` (``1_P - rho chi = d theta + theta d``).
    """

    rho: ChainMap
    chi: ChainMap
    theta: Homotopy
    P: FreeComplex
    certificates: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.certificates.values())


def turn_triangle(alpha: ChainMap) -> TurnedTriangle:
    L, M = alpha.source, alpha.target
    R = alpha.ring
    N, beta, gamma = cone(alpha)
    P, phi, psi = cone(beta)
    Lsh = shift(L, 1)
    Z = lambda r, c: Matrix.zeros(R, r, c)
    I = lambda n: Matrix.identity(R, n)
    rho, chi, theta = {}, {}, {}
    for i in P.degrees():
        m1, l1, m0 = M.rank(i + 1), L.rank(i + 1), M.rank(i)
        # P^i = M^{i+1} ⊕ L^{i+1} ⊕ M^i
        rho[i] = Matrix.block(R, [[-alpha[i + 1]], [I(l1)], [Z(m0, l1)]])
        chi[i] = Matrix.block(R, [[Z(l1, m1), I(l1), Z(l1, m0)]])
        # theta^i: P^i -> P^{i-1} = M^i ⊕ L^i ⊕ M^{i-1}; only M^i -> M^i is nonzero
        mm, ll = M.rank(i - 1), L.rank(i)
        theta[i] = Matrix.block(R, [
            [Z(m0, m1), Z(m0, l1), I(m0)],
            [Z(ll, m1), Z(ll, l1), Z(ll, m0)],
            [Z(mm, m1), Z(mm, l1), Z(mm, m0)],
        ])
    rho_m = ChainMap(Lsh, P, rho)
    chi_m = ChainMap(P, Lsh, chi)
    th = Homotopy(P, P, theta)
    one_P = ChainMap.identity(P)
    certs = {
        "rho_is_chain_map": rho_m.is_chain_map(),
        "chi_is_chain_map": chi_m.is_chain_map(),
        "chi_rho_is_identity": (chi_m @ rho_m).equals(ChainMap.identity(Lsh)),
        "rho_chi_homotopic_to_identity": th.witnesses(one_P - rho_m @ chi_m),
        "chi_phi_equals_gamma": (chi_m @ phi).equals(gamma),
        "psi_rho_equals_minus_alpha_shift": (psi @ rho_m).equals(-alpha.shift(1)),
    }
    return TurnedTriangle(rho_m, chi_m, th, P, certs)
