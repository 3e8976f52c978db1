"""Seeded random complexes and the triangulated-structure property checks.

These back the ``axioms-check`` command and the property test-suites.
"""

from __future__ import annotations

import random
from typing import Dict, Tuple

from .complexes import (
    ChainMap,
    FreeComplex,
    ModuleComplex,
    chain_map_from_cocycle,
    cohomology,
    cone,
    hom_complex,
    hom_element,
    induced_map,
    is_acyclic,
    is_null_homotopic,
    turn_triangle,
)
from .fpmod import ModuleMap
from .matrix import Matrix, kernel_basis
from .rings import ZZ, QQt, Poly, Ring


def random_element(rng: random.Random, ring: Ring, bound: int = 5):
    if ring is QQt:
        deg = rng.randint(0, 2)
        return Poly(rng.randint(-bound, bound) for _ in range(deg + 1))
    return ring.coerce(rng.randint(-bound, bound))


def _in_range(ring, x, bound) -> bool:
    if ring is QQt:
        return all(abs(c) <= bound and c.denominator == 1 for c in x.coeffs) and x.deg <= 3
    return abs(x) <= bound


def random_matrix(rng, ring, rows, cols, bound=5) -> Matrix:
    return Matrix(ring, [[random_element(rng, ring, bound) for _ in range(cols)] for _ in range(rows)],
                  shape=(rows, cols))


def random_free_complex(rng: random.Random, ring: Ring = ZZ, start: int = 0, length: int = 4,
                        max_rank: int = 3, bound: int = 5) -> FreeComplex:
    """Random bounded complex in degrees ``start .. start+length-1``.

    Each differential has entries in ``[-bound, bound]``; rows of ``d^{i+1}``
    are drawn from the left kernel of ``d^i`` so that ``d∘d = 0``.
    """
    ranks = {start + k: rng.randint(0, max_rank) for k in range(length)}
    diffs = {}
    prev = None
    for k in range(length - 1):
        i = start + k
        rows, cols = ranks[i + 1], ranks[i]
        if prev is None or prev.rows == 0 or prev.cols == 0:
            d = random_matrix(rng, ring, rows, cols, bound)
        else:
            left = kernel_basis(prev.T)    # columns y with y^T prev = 0
            out = []
            for _ in range(rows):
                row = [ring.zero] * cols
                for _attempt in range(20):
                    coeffs = [random_element(rng, ring, 2) for _ in range(left.cols)]
                    cand = [sum((coeffs[c] * left[r, c] for c in range(left.cols)), ring.zero)
                            for r in range(cols)]
                    if all(_in_range(ring, x, bound) for x in cand):
                        row = cand
                        break
                out.append(row)
            d = Matrix(ring, out, shape=(rows, cols))
        diffs[i] = d
        prev = d
    return FreeComplex(ring, ranks, diffs)


def random_chain_map(rng: random.Random, L: FreeComplex, M: FreeComplex, terms: int = 3) -> ChainMap:
    """Random small combination of a basis of ``Z^0 Hom(L, M)``."""
    ring = L.ring
    H = hom_complex(L, M)
    if H.rank(0) == 0:
        return ChainMap.zero(L, M)
    K = kernel_basis(H.d(0))
    vec = Matrix.zeros(ring, H.rank(0), 1)
    for _ in range(terms):
        if K.cols == 0:
            break
        c = rng.randrange(K.cols)
        vec = vec + K.take_cols(c, c + 1).scale(rng.choice([-1, 1, 2]))
    return chain_map_from_cocycle(L, M, vec)


def random_graded_map(rng: random.Random, L: FreeComplex, M: FreeComplex, bound: int = 2) -> ChainMap:
    """Degree-0 family of matrices, not necessarily commuting with ``d``."""
    ring = L.ring
    return ChainMap(L, M, {i: random_matrix(rng, ring, M.rank(i), L.rank(i), bound) for i in L.degrees()})


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


def check_cone_of_identity(X: FreeComplex) -> bool:
    N, _, _ = cone(ChainMap.identity(X))
    if not N.validate() or not is_acyclic(N):
        return False
    return is_null_homotopic(ChainMap.identity(N)) is not None


def _exact_at(f: ModuleMap, g: ModuleMap) -> bool:
    if not (g @ f).is_zero():
        return False
    X = ModuleComplex(f.ring, {0: f.source, 1: f.target, 2: g.target}, {0: f.matrix, 1: g.matrix},
                      check=False)
    return cohomology(X, 1).is_zero()


def check_long_exact_sequence(alpha: ChainMap) -> bool:
    """``H^i L -> H^i M -> H^i cone -> H^i L[1] -> H^i M[1]`` is exact at the inner terms."""
    N, beta, gamma = cone(alpha)
    a1 = alpha.shift(1)
    degs = [d for X in (alpha.source, alpha.target, N) for d in X.degrees()]
    if not degs:
        return True
    for i in range(min(degs) - 1, max(degs) + 2):
        f1, f2 = induced_map(alpha, i), induced_map(beta, i)
        f3, f4 = induced_map(gamma, i), induced_map(a1, i)
        if not (_exact_at(f1, f2) and _exact_at(f2, f3) and _exact_at(f3, f4)):
            return False
    return True


def check_turning(alpha: ChainMap) -> bool:
    return turn_triangle(alpha).ok


def check_cocycle_bijection(rng: random.Random, M: FreeComplex, N: FreeComplex, samples: int = 5) -> bool:
    """0-cocycles of ``Hom(M, N)`` are exactly the chain maps ``M -> N``."""
    H = hom_complex(M, N)
    D0 = H.d(0)
    for c in range(kernel_basis(D0).cols):
        f = chain_map_from_cocycle(M, N, kernel_basis(D0).take_cols(c, c + 1))
        if not f.is_chain_map():
            return False
    for _ in range(samples):
        phi = random_graded_map(rng, M, N)
        v = hom_element(M, N, 0, phi.components)
        if phi.is_chain_map() != (D0 @ v).is_zero():
            return False
        f = random_chain_map(rng, M, N)
        if not f.is_chain_map() or not (D0 @ hom_element(M, N, 0, f.components)).is_zero():
            return False
    return True


CHECKS = ("cone_of_identity", "long_exact_sequence", "turning_lemma", "cocycle_bijection")


def run_axioms(seed: int = 0, trials: int = 100, ring: Ring = ZZ) -> Dict[str, Tuple[int, int]]:
    """Run every check on ``trials`` seeded random inputs; returns ``{name: (passed, total)}``."""
    rng = random.Random(seed)
    passed = {name: 0 for name in CHECKS}
    for _ in range(trials):
        L = random_free_complex(rng, ring)
        M = random_free_complex(rng, ring)
        alpha = random_chain_map(rng, L, M)
        passed["cone_of_identity"] += check_cone_of_identity(L)
        passed["long_exact_sequence"] += check_long_exact_sequence(alpha)
        passed["turning_lemma"] += check_turning(alpha)
        passed["cocycle_bijection"] += check_cocycle_bijection(rng, L, M)
    return {name: (passed[name], trials) for name in CHECKS}
