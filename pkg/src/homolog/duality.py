"""Dualizing complexes over a Euclidean domain.

The ring is regular, so a bounded complex ``R`` with finitely generated
cohomology is dualizing exactly when ``A -> RHom(R, R)`` is an isomorphism;
that is the test applied by :func:`verify_dualizing`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

from .complexes import (
    ChainMap,
    FreeComplex,
    _hom_layout,
    cohomology,
    cohomology_data,
    hom_complex,
    hom_element,
    is_quasi_iso,
)
from .derived import resolve_complex, rhom
from .errors import NotDualizing
from .fpmod import InvariantFactors
from .matrix import Matrix, solve_linear


@dataclass(frozen=True)
class DualizingCandidate:
    complex: object


@dataclass
class DualizingReport:
    is_dualizing: bool
    reason: str
    cohomology: Dict[int, InvariantFactors] = field(default_factory=dict)
    identity_generates: Optional[bool] = None

    def __bool__(self):
        return self.is_dualizing


def _unwrap(R):
    return R.complex if isinstance(R, DualizingCandidate) else R


def _free(R) -> FreeComplex:
    R = _unwrap(R)
    return R if isinstance(R, FreeComplex) else resolve_complex(R)


def verify_dualizing(R) -> DualizingReport:
    """Check that ``H^*(RHom(R, R))`` is free of rank one in degree 0, generated by ``1_R``."""
    P = _free(R)
    ring = P.ring
    if P.support() is None:
        return DualizingReport(False, "R is acyclic, so RHom(R, R) = 0")
    H = hom_complex(P, P)
    forms = {i: cohomology(H, i).normal_form() for i in H.degrees()}
    forms = {i: nf for i, nf in forms.items() if not nf.is_zero()}
    h0 = forms.get(0, InvariantFactors(ring, 0))
    if h0 != InvariantFactors(ring, 1):
        return DualizingReport(False, f"H^0 RHom(R, R) is {h0}, not free of rank 1", forms)
    stray = sorted(i for i in forms if i != 0)
    if stray:
        return DualizingReport(False, f"RHom(R, R) has cohomology in degree {stray[0]}: {forms[stray[0]]}",
                               forms)
    data = cohomology_data(H, 0)
    one = hom_element(P, P, 0, {j: Matrix.identity(ring, P.rank(j)) for j in P.degrees()})
    coords = solve_linear(data.basis, one)
    _, to_min, _ = data.module.simplified()
    y = (to_min.matrix @ coords)[0, 0]
    if not ring.is_unit(y):
        return DualizingReport(False, "the identity class does not generate H^0 RHom(R, R)", forms, False)
    return DualizingReport(True, "ok", forms, True)


def _require(R, which="R") -> DualizingReport:
    rep = verify_dualizing(R)
    if not rep.is_dualizing:
        raise NotDualizing(rep, which)
    return rep


def dual(M, R) -> FreeComplex:
    """``D_R(M) = RHom(M, R)``."""
    _require(R)
    return hom_complex(resolve_complex(M), _free(R))


def kl_sign(k: int, l: int) -> int:
    return -1 if (k * l) % 2 else 1


def biduality_components(P: FreeComplex, R: FreeComplex,
                         sign: Callable[[int, int], int] = kl_sign) -> ChainMap:
    """Evaluation map ``P -> Hom(Hom(P, R), R)``, ``m |-> (f |-> sign(k, l) f(m))``.

    ``k`` is the degree of ``m`` and ``l`` the degree of ``f``.
    """
    ring = P.ring
    D = hom_complex(P, R)
    DD = hom_complex(D, R)
    comps = {}
    for k in P.degrees():
        pk = P.rank(k)
        if not pk or not DD.rank(k):
            continue
        out = [[ring.zero] * pk for _ in range(DD.rank(k))]
        dd_layout, _ = _hom_layout(D, R, k)
        for (l, dim_l, r, off_dd) in dd_layout:
            d_layout, _ = _hom_layout(P, R, l)
            for (j, pj, rj, off_d) in d_layout:
                if j != k:
                    continue
                sg = sign(k, l)
                for a in range(pk):
                    for y in range(r):
                        col = off_d + a * rj + y     # coordinate of e_a -> e_y in D^l
                        out[off_dd + col * r + y][a] = ring.coerce(sg)
        comps[k] = Matrix(ring, out, shape=(DD.rank(k), pk))
    return ChainMap(P, DD, comps)


@dataclass
class Biduality:
    theta: ChainMap
    qis: bool
    chain_iso: bool


def biduality_map(M, R) -> Biduality:
    """``theta: P -> D_R(D_R(M))`` for the resolution ``P`` of ``M``."""
    _require(R)
    P = resolve_complex(M)
    theta = biduality_components(P, _free(R))
    if not theta.is_chain_map():
        raise AssertionError("biduality map is not a chain map")
    return Biduality(theta, is_quasi_iso(theta), theta.is_degreewise_iso())


def classify_dualizing(R, R2) -> int:
    """The shift ``n`` with ``R2 ≅ R[n]``."""
    _require(R, "R")
    _require(R2, "R'")
    X = rhom(_free(R), _free(R2))
    nonzero = {i: cohomology(X, i).normal_form() for i in X.degrees()}
    nonzero = {i: nf for i, nf in nonzero.items() if not nf.is_zero()}
    if len(nonzero) != 1:
        raise AssertionError("RHom(R, R') is not concentrated in one degree")
    (deg, nf), = nonzero.items()
    if nf != InvariantFactors(X.ring, 1):
        raise AssertionError(f"RHom(R, R') is {nf} in degree {deg}, not invertible")
    return -deg
