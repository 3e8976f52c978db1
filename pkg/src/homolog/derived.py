"""Derived functors and morphisms of the derived category.

Objects of the derived category are represented by bounded complexes
(:class:`FpModule`, :class:`ModuleComplex` or :class:`FreeComplex`); every
derived functor replaces its arguments by canonical free resolutions and
returns an explicit free complex.  Morphisms are roofs ``a ∘ s^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from .complexes import (
    ChainMap,
    FreeComplex,
    cohomology,
    cohomology_table,
    hom_complex,
    is_null_homotopic,
    is_quasi_iso,
    shift,
    tensor_complex,
)
from .errors import NotQuasiIsomorphism
from .fpmod import FpModule
from .resolve import free_resolution, lift_through_qis


def resolve_complex(X) -> FreeComplex:
    return free_resolution(X).complex


def rhom(M, N) -> FreeComplex:
    """``RHom(M, N)`` computed as ``Hom(P, Q)`` for free resolutions ``P, Q``."""
    return hom_complex(resolve_complex(M), resolve_complex(N))


def derived_tensor(M, N) -> FreeComplex:
    return tensor_complex(resolve_complex(M), resolve_complex(N))


def ext(M, N, i: int) -> FpModule:
    return cohomology(rhom(M, N), i)


def tor(M, N, i: int) -> FpModule:
    return cohomology(derived_tensor(M, N), -i)


def ext_table(M, N) -> Dict[int, FpModule]:
    """All ``Ext^i`` that can be nonzero (the window comes from the supports)."""
    return cohomology_table(rhom(M, N))


def tor_table(M, N) -> Dict[int, FpModule]:
    return {-i: H for i, H in cohomology_table(derived_tensor(M, N)).items()}


def derived_hom_group(M, N, i: int) -> FpModule:
    """``Hom_D(M, N[i])``: chain maps ``P -> Q[i]`` modulo homotopy."""
    P, Q = resolve_complex(M), resolve_complex(N)
    return cohomology(hom_complex(P, shift(Q, i)), 0)


# ---------------------------------------------------------------------------
# roofs
# ---------------------------------------------------------------------------


@dataclass
class Roof:
    """The morphism ``a ∘ s^{-1}`` from ``s.target`` to ``a.target``.

    ``apex`` is a bounded free complex and ``s`` a quasi-isomorphism.
    """

    apex: FreeComplex
    s: ChainMap
    a: ChainMap

    def __post_init__(self):
        if self.s.source != self.apex or self.a.source != self.apex:
            raise ValueError("both legs of a roof must start at the apex")
        if not is_quasi_iso(self.s):
            raise NotQuasiIsomorphism(*_cone_witness(self.s))

    @property
    def source(self) -> FreeComplex:
        return self.s.target

    @property
    def target(self) -> FreeComplex:
        return self.a.target


def _cone_witness(s: ChainMap):
    from .complexes import cone
    C = cone(s)[0]
    for i in C.degrees():
        H = cohomology(C, i)
        if not H.is_zero():
            return i, H
    return None, None


def identity_roof(X: FreeComplex) -> Roof:
    one = ChainMap.identity(X)
    return Roof(X, one, one)


def plain_roof(a: ChainMap) -> Roof:
    """``Q(a)``: the roof ``(1, a)``."""
    return Roof(a.source, ChainMap.identity(a.source), a)


def inverse_roof(s: ChainMap) -> Roof:
    """``Q(s)^{-1}``: the roof ``(s, 1)``."""
    return Roof(s.source, s, ChainMap.identity(s.source))


def roof_compose(r2: Roof, r1: Roof) -> Roof:
    """``r2 ∘ r1``.

    The Ore square is filled by lifting ``r1.a`` through ``r2.s``; the
    apex of ``r1`` is bounded free, so the lift exists.
    """
    if r1.target != r2.source:
        raise ValueError("roofs are not composable")
    c, _ = lift_through_qis(r1.a, r2.s)
    return Roof(r1.apex, r1.s, r2.a @ c)


def normalize_roof(r: Roof) -> Roof:
    """Equivalent roof whose apex is the canonical resolution of the source."""
    res = free_resolution(r.source)
    pi = res.chain_map()
    t, _ = lift_through_qis(pi, r.s)
    return Roof(res.complex, pi, r.a @ t)


def roof_eq(r1: Roof, r2: Roof) -> bool:
    """Equality in the derived category.

    Both roofs are brought to the common denominator given by the
    canonical resolution of the source; the numerators must then be
    homotopic.
    """
    if r1.source != r2.source or r1.target != r2.target:
        raise ValueError("roofs have different endpoints")
    n1, n2 = normalize_roof(r1), normalize_roof(r2)
    return is_null_homotopic(n1.a - n2.a) is not None
