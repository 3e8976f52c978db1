# Mapping cones, truncations and the turning of a standard triangle
import random

from homolog import ZZ, ChainMap, FreeComplex, Matrix
from homolog import cone, cohomology_table, is_acyclic, smart_truncate_ge, turn_triangle
from homolog.complexes import as_module_complex
from homolog.checks import random_chain_map, random_free_complex


def show(name, X):
    groups = {i: str(H.normal_form()) for i, H in cohomology_table(X).items() if not H.is_zero()}
    terms = {i: str(m.normal_form()) for i, m in as_module_complex(X).modules.items()}
    print(f"{name}: terms {terms}  cohomology {groups}")


P = FreeComplex.from_maps(ZZ, -1, [Matrix(ZZ, [[2]])])   # Z -2-> Z, a model of Z/2
show("P", P)

two = ChainMap(P, P, {i: Matrix(ZZ, [[2]]) for i in (-1, 0)})
N, beta, gamma = cone(two)
show("cone(2 on P)", N)

N1, _, _ = cone(ChainMap.identity(P))
print("cone of the identity is acyclic:", is_acyclic(N1))

X = FreeComplex.from_maps(ZZ, 0, [Matrix(ZZ, [[2]])])
T, proj = smart_truncate_ge(X, 1)
show("smart truncation >= 1 of [Z -2-> Z]", T)

# turning a triangle on a random chain map gives explicit certificates
rng = random.Random(3)
L = random_free_complex(rng, ZZ, start=-1)
M = random_free_complex(rng, ZZ, start=-1)
alpha = random_chain_map(rng, L, M)
tt = turn_triangle(alpha)
for name, ok in tt.certificates.items():
    print(f"  {name:36s} {ok}")
