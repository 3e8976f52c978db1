"""Free resolutions of bounded complexes and lifting through quasi-isomorphisms."""

from __future__ import annotations

from dataclasses import dataclass

from . import fpmod
from .complexes import (
    ChainMap,
    FreeComplex,
    Homotopy,
    ModuleComplex,
    _hom_layout,
    as_module_complex,
    cone,
    cohomology,
    hom_complex,
    hom_element,
    hom_maps,
    is_quasi_iso,
)
from .errors import LiftError, NotQuasiIsomorphism
from .fpmod import FpModule, ModuleMap
from .matrix import Matrix, kernel_basis, smith_form, solve_linear


@dataclass
class Resolution:
    """A bounded free complex with a quasi-isomorphism onto ``target``."""

    complex: FreeComplex
    augmentation: ChainMap
    target: ModuleComplex

    def chain_map(self) -> ChainMap:
        """The augmentation as a map of free complexes (target must be free)."""
        T = self.target.as_free_complex()
        return ChainMap(self.complex, T, self.augmentation.components)

    def is_quasi_iso(self) -> bool:
        return is_quasi_iso(self.augmentation)


def _lead_unit_inverse(R, column):
    for x in column:
        if x != R.zero:
            return R.unit_inverse(R.unit_part(x))
    return R.one


def free_resolution(M) -> Resolution:
    """Resolve a bounded complex of finitely presented modules.

    Works downward from the top degree.  In degree ``i`` the new free term
    covers ``ker(M^i ⊕ Z^{i+1}(P) -> M^{i+1}, (m, z) |-> d m - zeta z)`` with
    the generators of its minimal presentation.  One degree below the lowest
    nonzero cohomology the cover is cut down to a complement of its kernel,
    which is possible because submodules of free modules over a PID are
    free; the result has length at most the input span plus one.
    """
    X = as_module_complex(M)
    R = X.ring
    lows = [i for i in X.degrees() if not cohomology(X, i).is_zero()]
    if not lows:
        P = FreeComplex.zero(R)
        return Resolution(P, ChainMap(P, X, {}), X)
    bottom = lows[0] - 1
    top = X.support()[1]

    ranks, diffs, zeta = {}, {}, {}
    Z = Matrix.zeros(R, 0, 0)          # basis of Z^{i+1}(P) inside P^{i+1}
    zeta_above = Matrix.zeros(R, 0, 0)  # zeta^{i+1} on the generators of P^{i+1}
    for i in range(top, bottom - 1, -1):
        Mi, Mi1 = X.module(i), X.module(i + 1)
        k = Z.cols
        amb = fpmod.direct_sum(Mi, FpModule.free(R, k))
        f = ModuleMap(amb, Mi1, X.d(i).matrix.hstack(-(zeta_above @ Z)), check=False)
        N, incl = fpmod.kernel(f)
        _, _, from_min = N.simplified()
        cover = incl.matrix @ from_min.matrix
        m_part = cover.take_rows(0, Mi.generators)
        d = Z @ cover.take_rows(Mi.generators, Mi.generators + k)
        if i == bottom:
            s = smith_form(d)
            W = s.V.take_cols(0, s.rank)
            W = W @ Matrix.diagonal(R, [_lead_unit_inverse(R, c) for c in (d @ W).T.rows_list()])
            d, m_part = d @ W, m_part @ W
        ranks[i] = d.cols
        diffs[i] = d
        zeta[i] = m_part
        Z = kernel_basis(d)
        zeta_above = m_part
    P = FreeComplex(R, ranks, diffs)
    return Resolution(P, ChainMap(P, X, zeta), X)


def lift_through_qis(f: ChainMap, s: ChainMap):
    """Lift ``f: P -> N`` through the quasi-isomorphism ``s: M -> N``.

    Returns ``(g, h)`` with ``g: P -> M`` a chain map and
    ``s g - f = d h + h d``.  Both conditions are solved as one linear
    system in the components of ``g`` and ``h``.
    """
    P, N = f.source, f.target
    M = s.source
    if s.target != N:
        raise ValueError("f and s must share their target")
    C = cone(s)[0]
    if not is_quasi_iso(s):
        for i in C.degrees():
            H = cohomology(C, i)
            if not H.is_zero():
                raise NotQuasiIsomorphism(i, H)
    R = f.ring
    HPM = hom_complex(P, M)
    HPN = hom_complex(P, N)
    g_lay, ng = _hom_layout(P, M, 0)
    h_lay, nh = _hom_layout(P, N, -1)
    e_lay, ne = _hom_layout(P, N, 0)
    # post-composition with s: Hom(P, M)^0 -> Hom(P, N)^0, blockwise I ⊗ s^j
    S = [[R.zero] * ng for _ in range(ne)]
    where = {j: off for (j, a, b, off) in e_lay}
    for (j, a, b, off) in g_lay:
        if j in where:
            blk = Matrix.identity(R, a).kron(s[j])
            for r, row in enumerate(blk.rows_list()):
                S[where[j] + r][off:off + len(row)] = list(row)
    S = Matrix(R, S, shape=(ne, ng))
    D0 = HPM.d(0)
    Dm1 = HPN.d(-1)
    A = Matrix.block(R, [
        [D0, Matrix.zeros(R, D0.rows, nh)],
        [S, -Dm1],
    ])
    rhs = Matrix.zeros(R, D0.rows, 1).vstack(hom_element(P, N, 0, {j: f[j] for j in P.degrees()}))
    x = solve_linear(A, rhs)
    if x is None:
        raise LiftError("lifting system through a quasi-isomorphism is insoluble")
    g = ChainMap(P, M, hom_maps(P, M, 0, x.take_rows(0, ng)))
    h = Homotopy(P, N, hom_maps(P, N, -1, x.take_rows(ng, ng + nh)))
    return g, h
