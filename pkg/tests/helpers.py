"""Small builders shared by the test modules."""

from __future__ import annotations

import random

from homolog import QQt, ZZ, Poly, ChainMap, FpModule, FreeComplex, Matrix, ModuleComplex
from homolog.checks import random_element, random_free_complex
from homolog.complexes import _hom_layout, _tensor_layout
from homolog.matrix import smith_form


def cyc(n, ring=ZZ, degree=0):
    """``(R/n)[-degree]`` as a module complex."""
    return ModuleComplex.concentrated(FpModule.cyclic(ring, n), degree)


def free_mod(rank=1, ring=ZZ, degree=0):
    return ModuleComplex.concentrated(FpModule.free(ring, rank), degree)


def line(ring=ZZ, degree=0, rank=1):
    return FreeComplex.single(ring, rank, degree)


def two_term(a, ring=ZZ, start=-1):
    """``[R -a-> R]`` in degrees ``start, start+1``."""
    return FreeComplex.from_maps(ring, start, [Matrix(ring, [[a]])])


def finite_group(rng, r_max=4, n_max=60, k_max=3):
    """``Z^r + Z/n_1 + ...`` as a presented module, plus its parameters."""
    r = rng.randint(0, r_max)
    ns = [rng.randint(2, n_max) for _ in range(rng.randint(0, k_max))]
    rows = []
    for k, n in enumerate(ns):
        row = [0] * (r + len(ns))
        row[r + k] = n
        rows.append(row)
    M = FpModule(ZZ, r + len(ns), Matrix(ZZ, rows, shape=(len(rows), r + len(ns))))
    return M, r, ns


def random_unimodular(rng, ring, n, steps=6):
    """Random product of elementary matrices together with its inverse."""
    U = Matrix.identity(ring, n)
    U_inv = Matrix.identity(ring, n)
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        c = random_element(rng, ring, 2)
        E = [[ring.one if r == s else ring.zero for s in range(n)] for r in range(n)]
        Ei = [row[:] for row in E]
        E[i][j], Ei[i][j] = c, -c
        U = Matrix(ring, E) @ U
        U_inv = U_inv @ Matrix(ring, Ei)
    if n and rng.random() < 0.5:
        k = rng.randrange(n)
        S = Matrix.diagonal(ring, [-ring.one if r == k else ring.one for r in range(n)])
        U, U_inv = S @ U, U_inv @ S
    return U, U_inv


def perturb(rng, P: FreeComplex, contractible: int = 1) -> FreeComplex:
    """A homotopy-equivalent copy of ``P``.

    Each degree gets a random change of basis, then ``contractible`` copies
    of ``[R -1-> R]`` are added in random positions.
    """
    R = P.ring
    bases = {i: random_unimodular(rng, R, P.rank(i)) for i in P.degrees()}
    ranks = dict(P.ranks)
    diffs = {}
    for i in P.degrees():
        if P.rank(i) and P.rank(i + 1):
            diffs[i] = bases[i + 1][0] @ P.d(i) @ bases[i][1]
    X = FreeComplex(R, ranks, diffs)
    lo = P.support()[0] if P.support() else 0
    for _ in range(contractible):
        j = lo + rng.randint(-1, 2)
        X = _add_contractible(X, j)
    return X


def _add_contractible(X: FreeComplex, j: int) -> FreeComplex:
    R = X.ring
    ranks = dict(X.ranks)
    ranks[j] = X.rank(j) + 1
    ranks[j + 1] = X.rank(j + 1) + 1
    diffs = {}
    for i in set(X.degrees()) | {j - 1, j, j + 1}:
        rows, cols = ranks.get(i + 1, 0), ranks.get(i, 0)
        if not rows or not cols:
            continue
        old = X.d(i)
        out = [[R.zero] * cols for _ in range(rows)]
        for r in range(old.rows):
            for c in range(old.cols):
                out[r][c] = old[r, c]
        if i == j:
            out[rows - 1][cols - 1] = R.one
        diffs[i] = Matrix(R, out, shape=(rows, cols))
    return FreeComplex(R, ranks, diffs)


def small_complex(rng, ring=ZZ, length=3, max_rank=2):
    start = rng.randint(-2, 1)
    return random_free_complex(rng, ring, start=start, length=length, max_rank=max_rank, bound=4)


# -- explicit comparison isomorphisms --------------------------------------


def block_permutation(src_layout, dst_layout, key_src, key_dst, sign, ring, shape):
    """Matrix sending each block of ``src`` to the matching block of ``dst``."""
    rows, cols = shape
    out = [[ring.zero] * cols for _ in range(rows)]
    where = {key_dst(entry): entry for entry in dst_layout}
    for entry in src_layout:
        k = key_src(entry)
        dst = where[k]
        size = entry[1] * entry[2]
        assert dst[1] * dst[2] == size
        s = ring.coerce(sign(entry))
        for x in range(size):
            out[dst[3] + x][entry[3] + x] = s
    return Matrix(ring, out, shape=shape)


def hom_source_shift_iso(M, N, k, Hs, Ht):
    """``Hom(M[k], N) -> Hom(M, N)[-k]``, sign ``(-1)^{k i}`` in degree ``i``."""
    from homolog import shift
    R = M.ring
    Mk = shift(M, k)
    comps = {}
    for i in Hs.degrees():
        src, _ = _hom_layout(Mk, N, i)
        dst, _ = _hom_layout(M, N, i - k)
        if not src:
            continue
        comps[i] = block_permutation(src, dst, lambda e: e[0] + k, lambda e: e[0],
                                     lambda e: -1 if (k * i) % 2 else 1, R, (Ht.rank(i), Hs.rank(i)))
    return ChainMap(Hs, Ht, comps)


def tensor_right_shift_iso(M, N, k, Ts, Tt):
    """``M ⊗ N[k] -> (M ⊗ N)[k]``, sign ``(-1)^{k p}`` on the ``M^p`` component."""
    from homolog import shift
    R = M.ring
    Nk = shift(N, k)
    comps = {}
    for i in Ts.degrees():
        src, _ = _tensor_layout(M, Nk, i)
        dst, _ = _tensor_layout(M, N, i + k)
        if not src:
            continue
        comps[i] = block_permutation(src, dst, lambda e: e[0], lambda e: e[0],
                                     lambda e: -1 if (k * e[0]) % 2 else 1, R, (Tt.rank(i), Ts.rank(i)))
    return ChainMap(Ts, Tt, comps)


def tensor_assoc_iso(M, N, L, left, right):
    """``(M ⊗ N) ⊗ L -> M ⊗ (N ⊗ L)``, ``(x ⊗ y) ⊗ z |-> x ⊗ (y ⊗ z)``, no sign."""
    R = M.ring
    from homolog import tensor_complex
    MN = tensor_complex(M, N)
    NL = tensor_complex(N, L)
    comps = {}
    for i in left.degrees():
        n = left.rank(i)
        if not n:
            continue
        out = [[R.zero] * n for _ in range(right.rank(i))]
        for (pq, ab, c, off1) in _tensor_layout(MN, L, i)[0]:
            for (p, a, b, off2) in _tensor_layout(M, N, pq)[0]:
                q = pq - p
                for x in range(a):
                    for y in range(b):
                        for z in range(c):
                            src = off1 + (off2 + x * b + y) * c + z
                            dst = _assoc_target(M, N, L, NL, i, p, q, x, y, z)
                            out[dst][src] = R.one
        comps[i] = Matrix(R, out, shape=(right.rank(i), n))
    return ChainMap(left, right, comps)


def _assoc_target(M, N, L, NL, i, p, q, x, y, z):
    outer = {pp: (a, b, off) for (pp, a, b, off) in _tensor_layout(M, NL, i)[0]}
    a, b_nl, off_outer = outer[p]
    inner = {qq: (bb, cc, off) for (qq, bb, cc, off) in _tensor_layout(N, L, i - p)[0]}
    b, c, off_inner = inner[q]
    return off_outer + x * b_nl + off_inner + y * c + z


def perturb_with_map(rng, N: FreeComplex, contractible: int = 1):
    """``(M, s)`` with ``s: M -> N`` a homotopy equivalence built by hand.

    ``M`` is ``N`` in new coordinates plus contractible summands, and ``s``
    undoes the coordinate change and projects the summands away.
    """
    R = N.ring
    bases = {i: random_unimodular(rng, R, N.rank(i)) for i in N.degrees()}
    diffs = {i: bases[i + 1][0] @ N.d(i) @ bases[i][1] for i in N.degrees()
             if N.rank(i) and N.rank(i + 1)}
    M = FreeComplex(R, dict(N.ranks), diffs)
    comps = {i: bases[i][1] for i in N.degrees()}
    lo = N.support()[0] if N.support() else 0
    for _ in range(contractible):
        j = lo + rng.randint(-1, 2)
        M = _add_contractible(M, j)
        comps = {i: _pad_cols(R, comps.get(i), N.rank(i), M.rank(i)) for i in M.degrees()}
    return M, ChainMap(M, N, comps)


def _pad_cols(R, m, rows, cols):
    out = [[R.zero] * cols for _ in range(rows)]
    if m is not None:
        for r in range(m.rows):
            for c in range(m.cols):
                out[r][c] = m[r, c]
    return Matrix(R, out, shape=(rows, cols))


def reduce_mod(X: FreeComplex, n) -> ModuleComplex:
    """Termwise ``X ⊗ R/n``, a complex of torsion modules."""
    R = X.ring
    mods = {i: FpModule(R, X.rank(i), Matrix.identity(R, X.rank(i)).scale(n)) for i in X.degrees()}
    return ModuleComplex(R, mods, {i: X.d(i) for i in X.degrees()})


def random_module_complex(rng, ring=ZZ):
    """Bounded complex of finitely presented modules, usually with torsion."""
    from homolog import smart_truncate_ge
    X = small_complex(rng, ring, length=3, max_rank=2)
    kind = rng.randrange(3)
    if kind == 0:
        n = rng.choice([2, 3, 4, 6]) if ring is ZZ else Poly(rng.choice([[0, 1], [1, 0, 1], [-1, 1]]))
        return reduce_mod(X, n)
    if kind == 1 and X.support():
        return smart_truncate_ge(X, rng.choice(list(X.degrees())))[0]
    return X.as_module_complex()
