# Dualizing complexes over Z and Q[t]: duals, biduality, uniqueness up to shift
import random

from homolog import ZZ, QQt, FpModule, FreeComplex, ModuleComplex
from homolog import biduality_map, classify_dualizing, cohomology_table, dual, shift, verify_dualizing


def groups(X):
    return {i: str(H.normal_form()) for i, H in cohomology_table(X).items() if not H.is_zero()}


R = FreeComplex.single(ZZ, 1, 0)
print("Z[0] dualizing:", verify_dualizing(R).is_dualizing)
rep = verify_dualizing(ModuleComplex.concentrated(FpModule.cyclic(ZZ, 2)))
print("Z/2 dualizing:", rep.is_dualizing, "-", rep.reason)

# G = Z^r + finite group: H^0 of the dual is Hom(G, Z), H^1 is the dual of the torsion
rng = random.Random(0)
for _ in range(4):
    r = rng.randint(0, 3)
    ns = tuple(sorted(rng.randint(2, 60) for _ in range(rng.randint(0, 2))))
    G = ModuleComplex.concentrated(FpModule.from_invariants(ZZ, r, ns) if ns else FpModule.free(ZZ, r))
    b = biduality_map(G, R)
    print(f"G = Z^{r} + {ns}:  dual {groups(dual(G, R))}  biduality qis={b.qis} iso={b.chain_iso}")

for n in (-2, 0, 3):
    print(f"classify(Z[0], Z[{n}]) =", classify_dualizing(R, shift(R, n)))

C = ModuleComplex.concentrated(FpModule.cyclic(QQt, QQt.t))
R1 = shift(FreeComplex.single(QQt, 1, 0), 1)
print("dual of Q[t]/(t) into Q[t][1]:", groups(dual(C, R1)))
