import random

import pytest

from fimhom import linalg as la
from fimhom.category import build_category, semisimple_quotient_module
from fimhom.combinatorics import Injection, enumerate_mor
from fimhom.errors import UsageError
from fimhom.functors import (
    BarElement,
    adjunction_check,
    bar_action,
    bar_hom,
    coind_definitional,
    coind_free_formula,
    decompose_shift_free,
    pullback,
    pullback_hom,
    pushforward,
    shift,
    shift_hom,
    theta,
)
from fimhom.modules import (
    HomSpace,
    concentrated_module,
    coregular_module,
    direct_sum,
    external_tensor,
    free_module,
    hom_dim,
    identity_hom,
    iso_check,
    kernel,
    quotient,
    submodule_span,
    validate,
    zero_module,
)


def test_pullback_pushforward_examples():
    V = free_module((1,), (3,))
    P = pullback(V, (2,))
    assert P.dim_vector() == [0, 1, 2] and not validate(P)
    W = pushforward(P, (3,))
    assert W.dim_vector() == [0, 1, 2, 0] and not validate(W)
    assert pullback(W, (2,)).dims == P.dims
    with pytest.raises(UsageError):
        pullback(V, (4,))
    with pytest.raises(UsageError):
        pushforward(V, (2,))
    h = pullback_hom(identity_hom(V), (2,))
    assert h.is_valid()


def test_pushforward_pullback_adjunction():
    # j^* is left adjoint to j_* on these examples
    t, u = (3,), (2,)
    for V in [free_module((0,), t), free_module((1,), t), coregular_module(t)]:
        for W in [free_module((1,), u), concentrated_module((2,), u, "sign"), coregular_module(u)]:
            assert hom_dim(pullback(V, u), W) == hom_dim(V, pushforward(W, t))


def test_shift_examples():
    V = free_module((1,), (3,))
    S = shift(V, 0)
    assert S.t == (2,)
    assert S.dim_vector() == [1, 2, 3]
    assert not validate(S)
    assert shift(free_module((0,), (2,)), 0).dim_vector() == [1, 1]
    assert shift(concentrated_module((0,), (2,)), 0).is_zero()
    with pytest.raises(UsageError):
        shift(free_module((0,), (0,)), 0)
    with pytest.raises(UsageError):
        shift(V, 1)
    X = shift(free_module((1, 0), (2, 2)), 1)
    assert X.t == (2, 1) and not validate(X)


def test_shift_is_exact():
    t = (3,)
    D, inj, proj = direct_sum(free_module((1,), t), coregular_module(t))
    U, incl = submodule_span(D, [((1,), la.unit(D.dims[(1,)], 0))])
    Q, p = quotient(D, incl)
    sU, sD, sQ = shift(U, 0), shift(D, 0), shift(Q, 0)
    si, sp = shift_hom(incl, 0), shift_hom(p, 0)
    assert si.is_valid() and sp.is_valid()
    K, _ = kernel(si)
    assert K.is_zero()
    for S in sD.cat.objects:
        assert sU.dims[S] + sQ.dims[S] == sD.dims[S]
    assert (sp * si).is_zero()


@pytest.mark.parametrize("S,i,t", [((1,), 0, (3,)), ((2,), 0, (2,)), ((0,), 0, (2,)), ((1, 1), 0, (2, 2)), ((1, 2), 1, (2, 2))])
def test_decompose_shift_free(S, i, t):
    P, D, fwd, bwd = decompose_shift_free(S, i, t)
    assert fwd.is_valid() and bwd.is_valid()
    assert (bwd * fwd).equals(identity_hom(P))
    assert (fwd * bwd).equals(identity_hom(D))


def test_decompose_shift_free_dims():
    P, D, _, _ = decompose_shift_free((2,), 0, (3,))
    # Σ M([2]) ≅ M([1]) ⊕ M([1]) ⊕ M([2]), and Σ M([2])([n]) counts injections [2] -> [n+1]
    target = [(n + 1) * n for n in range(4)]
    summed = [sum(x) for x in zip(*(free_module(S, (3,)).dim_vector() for S in [(1,), (1,), (2,)]))]
    assert P.dim_vector() == D.dim_vector() == summed == target


def test_coind_examples():
    C = coind_definitional(free_module((0,), (3,)), 0)
    assert C.dim_vector() == [1, 2, 3, 4]
    assert not validate(C)
    C1 = coind_definitional(free_module((1,), (3,)), 0)
    assert C1.dims[(2,)] == 4
    assert not validate(C1)
    assert coind_definitional(zero_module((2,)), 0).is_zero()
    with pytest.raises(UsageError):
        coind_definitional(free_module((0,), (2,)), 0, t_out=(4,))


def test_coind_bigraded():
    V = free_module((1, 0), (2, 1))
    for i in (0, 1):
        C = coind_definitional(V, i)
        assert not validate(C)


def test_coind_truncation_stable():
    # values at small objects do not change when the truncation grows
    for V3, V4 in [(free_module((1,), (3,)), free_module((1,), (4,))),
                   (concentrated_module((1,), (3,), "sign"), concentrated_module((1,), (4,), "sign"))]:
        C3 = coind_definitional(V3, 0)
        C4 = coind_definitional(V4, 0)
        for S in [(0,), (1,), (2,)]:
            assert C3.dims[S] == C4.dims[S]


@pytest.mark.parametrize("S,t", [((0,), (3,)), ((1,), (3,)), ((1,), (2,)), ((0, 1), (1, 2))])
def test_coind_free_formula(S, t):
    D, C, h = coind_free_formula(S, 0, t)
    assert h.is_valid()
    assert iso_check(h)


def _bar_cases():
    t = (3,)
    yield free_module((1,), t)
    yield concentrated_module((2,), t, "sign")
    yield semisimple_quotient_module(build_category(t).algebra())


def test_bar_action_matches_coinduced_action():
    rng = random.Random(3)
    for V in _bar_cases():
        C = coind_definitional(V, 0)
        for S in C.cat.objects:
            for x in range(1, S[0] + 2):
                d = V.dims[(S[0] if x == S[0] + 1 else S[0] - 1,)]
                if d == 0:
                    continue
                v = la.column([rng.randint(-3, 3) for _ in range(d)])
                b = BarElement(S, x, v)
                before = bar_hom(b, C)
                for T in C.cat.objects:
                    for alpha in enumerate_mor(S, T):
                        out = bar_action(alpha, b, V, 0)
                        total = la.zeros(C.dims[T], 1)
                        for c in out:
                            total += bar_hom(c, C)
                        assert total == C.action(alpha) * before


def test_bar_action_cases():
    V = free_module((0,), (3,))
    one = la.column([1])
    # a non-star element goes to the single bar at its image
    out = bar_action((Injection((2,), 2),), BarElement((1,), 1, one), V, 0)
    assert [(c.S, c.x) for c in out] == [((2,), 2)]
    # the star goes to the sum over everything outside the image plus the new star
    out = bar_action((Injection((2,), 3),), BarElement((1,), 2, one), V, 0)
    assert [c.x for c in out] == [1, 3, 4]
    with pytest.raises(UsageError):
        bar_action((Injection((1,), 1),), BarElement((2,), 1, one), V, 0)


def test_theta_is_iso():
    V = free_module((1,), (2,))
    W = free_module((1,), (2,))
    left, right, h = theta(V, W)
    assert h.is_valid() and iso_check(h)
    assert left.dims[((2, 1))] == right.dims[(2, 1)]
    assert left.dims[(2, 1)] == 4
    assert left.dims[(2, 2)] == 8


def test_theta_independent_of_splitting():
    V = concentrated_module((1,), (2,), "trivial")
    W = coregular_module((1,))
    _, _, h1 = theta(V, W)
    _, _, h2 = theta(V, W, reverse=True)
    assert h1.equals(h2)
    assert h1.is_valid()


def test_theta_requires_fi_module():
    with pytest.raises(UsageError):
        theta(free_module((0, 0), (1, 1)), free_module((0,), (1,)))


def test_adjunction_examples():
    # Hom(Σ M([0]), W) = W([0])
    W = coregular_module((2,))
    out = adjunction_check(free_module((0,), (3,)), W, 0, with_ext=True)
    assert out["hom_shift"] == W.dims[(0,)]
    assert out["hom_agree"] and out["ext1_agree"]
    V = free_module((1, 1), (2, 2))
    W = concentrated_module((1, 1), (2, 1), "trivial")
    out = adjunction_check(V, W, 1)
    # Σ_2 M([1],[1]) ≅ M([1],[0]) ⊕ M([1],[1]), so Hom picks up W([1],[0]) + W([1],[1])
    assert out["hom_agree"] and out["hom_shift"] == W.dims[(1, 0)] + W.dims[(1, 1)]
    with pytest.raises(UsageError):
        adjunction_check(free_module((0,), (3,)), W, 0)


def test_adjunction_corpus():
    t = (3,)
    Vs = [free_module((1,), t), concentrated_module((1,), t), concentrated_module((2,), t, "sign"), coregular_module(t)]
    u = (2,)
    Ws = [free_module((0,), u), concentrated_module((1,), u), coregular_module(u)]
    for V in Vs:
        for W in Ws:
            out = adjunction_check(V, W, 0)
            assert out["hom_agree"], (V, W, out)


def test_coind_hom_space_values():
    C = coind_definitional(free_module((1,), (2,)), 0)
    hs = HomSpace(C, C)
    assert hs.dim >= 2
    X = external_tensor(free_module((0,), (1,)), C)
    assert not validate(X)
