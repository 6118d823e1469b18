import pytest

from oracles import brute_force_ext1, small_corpus
from fimhom.category import build_category, semisimple_quotient_module
from fimhom.errors import UsageError
from fimhom.homological import (
    ext1,
    ext_stabilization,
    free_cover,
    inverse_nakayama,
    is_injective_trunc,
    is_torsion,
    kernel_nu_check,
    nakayama,
    syzygy,
    torsion_free_part,
    torsion_submodule,
    upbound_coordinate,
)
from fimhom.modules import (
    concentrated_module,
    coregular_module,
    direct_sum,
    free_module,
    injective_module,
    iso_verdict,
    validate,
    zero_module,
)


def test_presentation_example():
    V = concentrated_module((1,), (2,))
    P = syzygy(free_cover(V))
    assert P.F.dim_vector() == [0, 1, 2]
    assert P.K.dim_vector() == [0, 0, 2]
    assert P.cover.is_valid() and P.incl.is_valid()
    assert not validate(P.K)
    assert (P.cover * P.incl).is_zero()


def test_presentation_rank_nullity():
    for V in small_corpus((2,)):
        P = syzygy(free_cover(V))
        for S in V.cat.objects:
            assert P.K.dims[S] + V.dims[S] == P.F.dims[S]


def test_free_cover_of_zero():
    P = free_cover(zero_module((2,)))
    assert P.F.is_zero() and P.objects == []


def test_ext1_free_source_vanishes():
    t = (2,)
    for S in build_category(t).objects:
        for W in small_corpus(t):
            assert ext1(free_module(S, t), W).dim == 0


def test_ext1_negative_control():
    t = (2,)
    assert ext1(concentrated_module((1,), t), free_module((1,), t)).dim == 1
    Q = semisimple_quotient_module(build_category(t).algebra())
    assert ext1(Q, free_module((1,), t)).dim == 1
    assert not is_injective_trunc(free_module((1,), t))


def test_ext1_into_coregular_vanishes():
    for t in [(1,), (2,), (3,), (1, 1)]:
        DA = coregular_module(t)
        assert is_injective_trunc(DA)
        for V in small_corpus(t) if t != (3,) else []:
            assert ext1(V, DA).dim == 0


@pytest.mark.parametrize("t", [(1,), (2,), (1, 1)])
def test_ext1_matches_brute_force(t):
    mods = [V for V in small_corpus(t) if V.total_dim() <= 6]
    for V in mods:
        for W in mods:
            assert ext1(V, W).dim == brute_force_ext1(V, W), (V, W)


def test_ext1_truncation_mismatch():
    with pytest.raises(UsageError):
        ext1(free_module((0,), (1,)), free_module((0,), (2,)))


def test_ext_stabilization():
    out = ext_stabilization(
        lambda t: concentrated_module((1,), t),
        lambda t: free_module((1,), t),
        [(2,), (3,), (4,)],
    )
    assert [d for _, d in out["table"]] == [1, 0, 0]
    assert out["stable"] and out["value"] == 0


def test_torsion_examples():
    t = (3,)
    assert is_torsion(concentrated_module((1,), t))
    assert not is_torsion(free_module((1,), t))
    U, incl, stable = torsion_submodule(free_module((1,), t))
    assert U.is_zero() and stable
    # the top object cannot be detected
    assert not is_torsion(concentrated_module((3,), t))
    D, _, _ = direct_sum(free_module((1,), t), concentrated_module((2,), t, "sign"))
    U, incl, _ = torsion_submodule(D)
    assert U.dim_vector() == [0, 0, 1, 0]
    assert incl.is_valid() and not validate(U)
    Q, p = torsion_free_part(D)
    assert Q.dim_vector() == free_module((1,), t).dim_vector()


def test_torsion_idempotent():
    t = (3,)
    for V in small_corpus(t):
        U, _, _ = torsion_submodule(V)
        U2, _, _ = torsion_submodule(U)
        assert U2.dims == U.dims
        Q, _ = torsion_free_part(V)
        Z, _, _ = torsion_submodule(Q)
        assert Z.is_zero()


def test_nakayama_of_free_is_injective():
    t = (3,)
    for S in build_category(t).objects:
        nu = nakayama(free_module(S, t))
        I = injective_module(S, t)
        assert not validate(nu)
        assert nu.dims == I.dims
        assert iso_verdict(nu, I) == "true"


def test_nakayama_additive():
    t = (2,)
    A, B = free_module((1,), t), concentrated_module((2,), t, "sign")
    D, _, _ = direct_sum(A, B)
    nA, nB, nD = nakayama(A), nakayama(B), nakayama(D)
    assert nD.dim_vector() == [a + b for a, b in zip(nA.dim_vector(), nB.dim_vector())]


def test_nakayama_kills_torsion():
    t = (3,)
    assert nakayama(concentrated_module((1,), t)).is_zero()
    out = kernel_nu_check(concentrated_module((2,), t, "sign"))
    assert out["nu_zero"] and out["torsion"] and out["agree"]
    out = kernel_nu_check(free_module((1,), t))
    assert not out["nu_zero"] and not out["torsion"] and out["agree"]


def test_inverse_nakayama():
    t = (3,)
    V = free_module((1,), t)
    back = inverse_nakayama(nakayama(V))
    assert back.dims == V.dims and not validate(back)
    assert iso_verdict(back, V) == "true"
    assert upbound_coordinate(injective_module((2,), t)) == 0
    assert upbound_coordinate(V) is None
    with pytest.raises(UsageError):
        inverse_nakayama(V)


def test_inverse_nakayama_of_injectives():
    t = (2,)
    for S in [(0,), (1,)]:
        P = inverse_nakayama(injective_module(S, t))
        assert P.dims == free_module(S, t).dims
        assert iso_verdict(P, free_module(S, t)) == "true"
