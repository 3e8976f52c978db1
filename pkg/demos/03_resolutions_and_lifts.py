# Bounded free resolutions of complexes and lifting through quasi-isomorphisms
from homolog import ZZ, ChainMap, FpModule, FreeComplex, Matrix, ModuleComplex
from homolog import cohomology_table, free_resolution, lift_through_qis

Z4 = FpModule.cyclic(ZZ, 4)
X = ModuleComplex(ZZ, {0: Z4, 1: Z4}, {0: Matrix(ZZ, [[2]])})   # Z/4 -2-> Z/4

res = free_resolution(X)
P = res.complex
print("resolution ranks:", dict(sorted(P.ranks.items())))
for i in P.degrees():
    if P.rank(i) and P.rank(i + 1):
        print(f"  d^{i} =", P.d(i).rows_list())
print("augmentation is a quasi-isomorphism:", res.is_quasi_iso())
print("H(P) =", {i: str(H.normal_form()) for i, H in cohomology_table(P).items() if not H.is_zero()})

# lift f = 3: Z -> (Z -6-> Z) through the comparison map from its resolution
N = FreeComplex.from_maps(ZZ, -1, [Matrix(ZZ, [[6]])])
s = free_resolution(N).chain_map()
Z = FreeComplex.single(ZZ, 1, 0)
f = ChainMap(Z, N, {0: Matrix(ZZ, [[3]])})
g, h = lift_through_qis(f, s)
print("lift g:", {i: m.rows_list() for i, m in g.components.items()})
print("s g - f is null-homotopic via h:", h.witnesses(s @ g - f))
