# Smith normal form and finitely presented modules over Z and Q[t]
from homolog import ZZ, QQt, Matrix, FpModule, ModuleMap, smith_form
from homolog import hom_module, tensor_module, kernel, cokernel, is_iso

A = Matrix(ZZ, [[2, 4], [6, 8]])
S = smith_form(A)
print("A =", A.rows_list())
print("invariant factors:", S.diag)
# the transforms are kept, so U A V == D can be checked directly
print("U A V == D:", S.U @ A @ S.V == S.D)

t = QQt.t
print("SNF of [t, t^2] over Q[t]:", [QQt.format(d) for d in smith_form(Matrix(QQt, [[t, t * t]])).diag])

# Z^2 modulo the rows (2,0), (0,4), (2,4); the third row is redundant
M = FpModule(ZZ, 2, Matrix(ZZ, [[2, 0], [0, 4], [2, 4]]))
print("Z^2 / <(2,0),(0,4),(2,4)> =", M.normal_form())

Z4, Z6 = FpModule.cyclic(ZZ, 4), FpModule.cyclic(ZZ, 6)
print("Hom(Z/4, Z/6) =", hom_module(Z4, Z6).normal_form())
print("Z/4 (x) Z/6  =", tensor_module(Z4, Z6).normal_form())

two = ModuleMap(Z4, Z4, Matrix(ZZ, [[2]]))
K, _ = kernel(two)
C, _ = cokernel(two)
print("ker(2 on Z/4) =", K.normal_form(), "  coker =", C.normal_form())
print("5 on Z/6 is an isomorphism:", is_iso(ModuleMap(Z6, Z6, Matrix(ZZ, [[5]]))))
