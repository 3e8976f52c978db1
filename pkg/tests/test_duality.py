import random

import pytest

from homolog import (
    QQt, ZZ, FpModule, FreeComplex, Matrix, ModuleComplex, biduality_map, classify_dualizing,
    cohomology_table, dual, shift, verify_dualizing,
)
from homolog.duality import DualizingCandidate, biduality_components
from homolog.errors import NotDualizing
from homolog.fpmod import direct_sum

import oracles
from helpers import cyc, free_mod, line, perturb, random_module_complex, two_term


def table(X):
    return {i: str(H.normal_form()) for i, H in cohomology_table(X).items() if not H.is_zero()}


def test_verify_dualizing_examples():
    assert verify_dualizing(line()).is_dualizing
    assert verify_dualizing(DualizingCandidate(free_mod())).is_dualizing
    rep = verify_dualizing(cyc(2))
    assert not rep.is_dualizing
    assert str(rep.cohomology[0]) == "Z/2"
    assert len(oracles.hom_cyclic(2, 2)) == 2
    assert verify_dualizing(shift(line(), 5)).is_dualizing


def test_verify_dualizing_rejections():
    assert not verify_dualizing(FreeComplex.zero(ZZ)).is_dualizing
    assert not verify_dualizing(FreeComplex.single(ZZ, 2)).is_dualizing
    # Z + Z[1] has a two-dimensional endomorphism complex
    X = FreeComplex(ZZ, {0: 1, -1: 1})
    assert not verify_dualizing(X).is_dualizing
    assert verify_dualizing(perturb(random.Random(1), line(), 2)).is_dualizing


def test_dual_examples():
    for r in range(1, 4):
        assert table(dual(free_mod(r), line())) == {0: f"Z^{r}" if r > 1 else "Z"}
    assert table(dual(cyc(6), line())) == {1: "Z/6"}
    assert table(dual(FreeComplex.zero(ZZ), line())) == {}


def test_dual_rejects_non_dualizing():
    with pytest.raises(NotDualizing) as err:
        dual(free_mod(), cyc(2))
    assert err.value.which == "R"


def test_biduality_on_unit():
    b = biduality_map(free_mod(), line())
    assert b.qis and b.chain_iso
    assert b.theta[0].shape == (1, 1)


def test_biduality_mixed_module():
    M = ModuleComplex.concentrated(FpModule.from_invariants(ZZ, 1, (6,)))
    D = dual(M, line())
    assert table(D) == {0: "Z", 1: "Z/6"}
    assert table(dual(D, line())) == {0: "Z + Z/6"}
    b = biduality_map(M, line())
    assert b.qis and b.theta.is_chain_map()


def test_biduality_random_polynomial():
    rng = random.Random(150)
    B = FreeComplex.single(QQt, 1, 0)
    for _ in range(8):
        M = random_module_complex(rng, QQt)
        b = biduality_map(M, B)
        assert b.theta.is_chain_map() and b.qis


def test_biduality_qis_without_chain_iso():
    # an oversized dualizing complex separates the two flags
    R = perturb(random.Random(4), line(), 1)
    b = biduality_map(free_mod(), R)
    assert b.qis and not b.chain_iso


def test_additive_sign_is_not_a_chain_map():
    # evaluation with (-1)^(k+l) fails the chain-map check; (-1)^(kl) passes
    P, R = two_term(2), line()
    additive = biduality_components(P, R, sign=lambda k, l: -1 if (k + l) % 2 else 1)
    assert not additive.is_chain_map()
    assert biduality_components(P, R).is_chain_map()


def test_dual_shift_equivariance():
    rng = random.Random(9)
    for _ in range(8):
        M = random_module_complex(rng)
        k = rng.randint(-2, 2)
        Mk = shift(M, k)
        assert table(dual(Mk, line())) == table(shift(dual(M, line()), -k))


def test_classify_examples():
    assert classify_dualizing(line(), shift(line(), 3)) == 3
    B = FreeComplex.single(QQt, 1, 0)
    assert classify_dualizing(B, shift(B, -2)) == -2
    with pytest.raises(NotDualizing) as err:
        classify_dualizing(line(), cyc(2))
    assert err.value.which == "R'"


def test_classify_self_is_zero():
    rng = random.Random(2)
    for n in range(-2, 3):
        R = perturb(rng, shift(line(), n), 1)
        assert classify_dualizing(R, R) == 0


def test_polynomial_slice_dual():
    t = QQt.t
    C = ModuleComplex.concentrated(FpModule.cyclic(QQt, t))
    B1 = shift(FreeComplex.single(QQt, 1, 0), 1)
    assert table(dual(C, B1)) == {0: "Qt/(t)"}
