# Ext, Tor and RHom over Z and Q[t]
from homolog import ZZ, QQt, FpModule, ModuleComplex
from homolog import cohomology_table, derived_hom_group, derived_tensor, ext, rhom, tor


def cyc(n, ring=ZZ):
    return ModuleComplex.concentrated(FpModule.cyclic(ring, n))


def groups(X):
    return {i: str(H.normal_form()) for i, H in cohomology_table(X).items() if not H.is_zero()}


Z = ModuleComplex.concentrated(FpModule.free(ZZ, 1))
print("RHom(Z/6, Z):", groups(rhom(cyc(6), Z)))
print("Z/4 (x)^L Z/6:", groups(derived_tensor(cyc(4), cyc(6))))

for m, n in [(4, 6), (2, 3), (6, 9)]:
    print(f"m={m} n={n}:",
          "Ext^0 =", ext(cyc(m), cyc(n), 0).normal_form(),
          " Ext^1 =", ext(cyc(m), cyc(n), 1).normal_form(),
          " Tor_0 =", tor(cyc(m), cyc(n), 0).normal_form(),
          " Tor_1 =", tor(cyc(m), cyc(n), 1).normal_form())

# morphisms in the derived category agree with Ext
print("Hom_D(Z/2, Z/2[1]) =", derived_hom_group(cyc(2), cyc(2), 1).normal_form())
print("Hom_D(Z/2, Z/3[1]) =", derived_hom_group(cyc(2), cyc(3), 1).normal_form())

t = QQt.t
C = cyc(t, QQt)
B = ModuleComplex.concentrated(FpModule.free(QQt, 1))
print("Ext^j(Q[t]/(t), Q[t]):", {j: str(ext(C, B, j).normal_form()) for j in range(0, 3)})
