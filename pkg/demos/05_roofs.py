# Morphisms in the derived category as roofs X <-s- M -a-> Y
from homolog import ZZ, ChainMap, FpModule, FreeComplex, Matrix, ModuleComplex, Roof
from homolog import free_resolution, identity_roof, inverse_roof, plain_roof, roof_compose, roof_eq

P = free_resolution(ModuleComplex.concentrated(FpModule.cyclic(ZZ, 2))).complex
two = ChainMap(P, P, {i: Matrix.identity(ZZ, P.rank(i)).scale(2) for i in P.degrees()})
zero = ChainMap.zero(P, P)

# 2 and 0 are homotopic on the resolution of Z/2, so the roofs agree
print("(1, 2) ~ (1, 0):", roof_eq(plain_roof(two), plain_roof(zero)))
print("(1, 1) ~ (1, 0):", roof_eq(identity_roof(P), plain_roof(zero)))

# a roof whose left leg is a genuine quasi-isomorphism, not the identity
Q = FreeComplex.from_maps(ZZ, -2, [Matrix(ZZ, [[1], [0]]), Matrix(ZZ, [[0, 2]])])
s = ChainMap(Q, P, {-1: Matrix(ZZ, [[0, 1]]), 0: Matrix(ZZ, [[1]])})
r = Roof(Q, s, s)
print("(s, s) ~ identity:", roof_eq(r, identity_roof(P)))
print("s^-1 after s ~ identity of Q:", roof_eq(roof_compose(inverse_roof(s), plain_roof(s)), identity_roof(Q)))
