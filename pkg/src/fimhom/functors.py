"""Functors between module categories: truncation, shift, coinduction, and theta.

Truncated bookkeeping: a module over ``t`` shifts to a module over
``t - e_i``, since the value at ``S`` needs ``V`` at ``S + e_i``.  The
coinduced module over ``t`` uses ``Sigma_i M(S)`` formed from ``M(S)`` over
``t + e_i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .category import build_category, check_truncation
from .combinatorics import (
    Injection,
    MorTuple,
    alpha_inv,
    alpha_y,
    bump,
    compose_tuple,
    epsilon,
    iota_i,
    leq,
    removed_size,
    restore_label,
    source_of,
    target_of,
)
from .errors import UsageError
from .modules import (
    FunctorModule,
    HomSpace,
    ModuleHom,
    direct_sum,
    external_tensor,
    free_hom,
    free_module,
    hom_dim,
)


def _check_coord(t, i):
    if not 0 <= i < len(t):
        raise UsageError(f"coordinate {i} out of range for arity {len(t)}")


# -- truncation -------------------------------------------------------------------

def pullback(V: FunctorModule, t) -> FunctorModule:
    """Restriction ``j^* V`` to the smaller truncation ``t``."""
    t = check_truncation(t)
    if len(t) != V.m or not leq(t, V.t):
        raise UsageError(f"pullback: {t} is not below {V.t}")
    cat = build_category(t)
    dims = {S: V.dims[S] for S in cat.objects}
    actions = {g: V.gen(g) for g in cat.generators()}
    return FunctorModule(t, dims, actions, name=V.name)


def pullback_hom(h: ModuleHom, t) -> ModuleHom:
    V, W = pullback(h.source, t), pullback(h.target, t)
    return ModuleHom(V, W, {S: h.mats[S] for S in V.cat.objects})


def pushforward(W: FunctorModule, t) -> FunctorModule:
    """Extension ``j_* W`` by zero to the larger truncation ``t``."""
    t = check_truncation(t)
    if len(t) != W.m or not leq(W.t, t):
        raise UsageError(f"pushforward: {t} is not above {W.t}")
    cat = build_category(t)
    dims = {S: W.dims.get(S, 0) for S in cat.objects}
    actions = {}
    for g in cat.generators():
        if W.cat.contains(g.target):
            actions[g] = W.gen(g)
        else:
            actions[g] = la.zeros(dims[g.target], dims[g.source])
    return FunctorModule(t, dims, actions, name=W.name)


# -- shift --------------------------------------------------------------------------

def shift(V: FunctorModule, i: int) -> FunctorModule:
    """``Sigma_i V = V ∘ iota_i`` as a module over ``t - e_i``."""
    _check_coord(V.t, i)
    if V.t[i] < 1:
        raise UsageError(f"shift: t[{i}] = 0, nothing to shift")
    t = bump(V.t, i, -1)
    cat = build_category(t)
    dims = {S: V.dims[bump(S, i)] for S in cat.objects}
    actions = {g: V.action(iota_i(g.morphism(), i)) for g in cat.generators()}
    name = f"Σ{i + 1}{V.name}" if V.name else None
    return FunctorModule(t, dims, actions, name=name)


def shift_hom(h: ModuleHom, i: int) -> ModuleHom:
    V, W = shift(h.source, i), shift(h.target, i)
    return ModuleHom(V, W, {S: h.mats[bump(S, i)] for S in V.cat.objects})


def shifted_free(S, i: int, t) -> FunctorModule:
    """``Sigma_i M(S)`` over ``t``, built from ``M(S)`` over ``t + e_i``."""
    t = check_truncation(t)
    _check_coord(t, i)
    return shift(free_module(tuple(S), bump(t, i)), i)


def hat_elements(n: int) -> list[int]:
    """Elements of ``[n]^`` in summand order: ``1..n`` and then the star ``n+1``."""
    return list(range(1, n + 2))


def removed(S, i: int, x: int) -> tuple:
    """The object ``S`` with coordinate ``i`` replaced by ``S_i^x``."""
    return S[:i] + (removed_size(S[i], x),) + S[i + 1:]


def split_shifted(g: MorTuple, i: int) -> tuple[int, MorTuple]:
    """Write ``g: S -> U^`` (hat in coordinate i) as ``iota_i(beta) ∘ eps_x``.

    Returns ``(x, beta)`` with ``x = g_i^{-1}(*)``.
    """
    gi = g[i]
    n, u = gi.source, gi.target - 1
    x = alpha_inv(gi, u + 1)
    beta_i = Injection(tuple(gi(restore_label(n, x, b)) for b in range(1, removed_size(n, x) + 1)), u)
    return x, g[:i] + (beta_i,) + g[i + 1:]


def epsilon_tuple(S, i: int, x: int) -> MorTuple:
    """``eps_x`` in coordinate ``i``, identities elsewhere: ``S -> (S^x)^``."""
    from .combinatorics import identity

    return tuple(epsilon(n, x) if c == i else identity(n) for c, n in enumerate(S))


def decompose_shift_free(S, i: int, t):
    """Explicit isomorphism ``Sigma_i M(S) ≅ ⊕_x M(S^x)`` over ``t``.

    Summands are ordered by ``x = 1..S_i`` and then the star.  Returns
    ``(shifted, summed, fwd, bwd)``.
    """
    S = tuple(S)
    t = check_truncation(t)
    _check_coord(t, i)
    if not leq(S, t):
        raise UsageError(f"decompose_shift_free: {S} is not below {t}")
    P = shifted_free(S, i, t)
    xs = hat_elements(S[i])
    parts = [free_module(removed(S, i, x), t) for x in xs]
    D, _, _ = direct_sum(*parts)
    big = build_category(bump(t, i))
    fwd, bwd = {}, {}
    for U in P.cat.objects:
        M = la.zeros(D.dims[U], P.dims[U])
        offsets, off = {}, 0
        for x, F in zip(xs, parts):
            offsets[x] = off
            off += F.dims[U]
        for k, g in enumerate(big.homs(S, bump(U, i))):
            x, beta = split_shifted(g, i)
            idx = P.cat.hom_index(removed(S, i, x), U)[beta]
            M[offsets[x] + idx, k] = 1
        fwd[U] = M
        bwd[U] = M.transpose()
    return P, D, ModuleHom(P, D, fwd), ModuleHom(D, P, bwd)


# -- coinduction ---------------------------------------------------------------------

class CoinducedModule(FunctorModule):
    """``coind_i(V)`` with the hom-spaces realising its values kept around."""

    base: FunctorModule
    coord: int
    spaces: dict

    def bar_coords(self, b: "BarElement") -> la.Matrix:
        return bar_hom(b, self)


def coind_definitional(V: FunctorModule, i: int, t_out=None) -> CoinducedModule:
    """``coind_i(V)(S) = Hom(Sigma_i M(S), V)`` with ``r · a = (g ↦ a(g r))``.

    ``t_out`` (default ``V.t``) is the truncation of the result; any
    ``t_out <= V.t + e_i`` is allowed, and ``V.t + e_i`` gives the exact right
    adjoint of :func:`shift` on modules over ``V.t + e_i``.
    """
    _check_coord(V.t, i)
    t_out = V.t if t_out is None else check_truncation(t_out)
    if len(t_out) != V.m or not leq(t_out, bump(V.t, i)):
        raise UsageError(f"coind: output truncation {t_out} exceeds {bump(V.t, i)}")
    cat = build_category(t_out)
    big = build_category(bump(V.t, i))
    spaces = {S: HomSpace(shifted_free(S, i, V.t), V) for S in cat.objects}
    dims = {S: spaces[S].dim for S in cat.objects}
    actions = {}
    for r in cat.generators():
        S, T = r.source, r.target
        hs_S, hs_T = spaces[S], spaces[T]
        rm = r.morphism()
        blocks = []
        for U, k in hs_T.gens:
            g = big.homs(T, bump(U, i))[k]
            idx = big.hom_index(S, bump(U, i))[compose_tuple(g, rm)]
            e = la.unit(hs_S.V.dims[U], idx)
            blocks.append(hs_S.apply(U, e))
        vals = la.vstack(blocks, hs_S.dim)
        actions[r] = hs_T.coords(vals)
    out = CoinducedModule(t_out, dims, actions, name=f"coind{i + 1}({V.name or '?'})")
    out.base, out.coord, out.spaces = V, i, spaces
    return out


@dataclass(frozen=True)
class BarElement:
    """``bar(v^x)`` at the object ``S``: the hom sending ``eps_y`` to ``delta_xy v``.

    ``x`` is an element of ``[S_i]^`` and ``v`` lives in ``V(S^x)``.
    """

    S: tuple
    x: int
    v: la.Matrix

    def source_object(self, i: int) -> tuple:
        return removed(self.S, i, self.x)


def bar_hom(b: BarElement, C: CoinducedModule) -> la.Matrix:
    """Coordinates of ``bar(v^x)`` in ``C(S)``."""
    V, i = C.base, C.coord
    hs = C.spaces[b.S]
    n = b.S[i]
    if not 1 <= b.x <= n + 1:
        raise UsageError(f"{b.x} is not an element of [{n}]^")
    if b.v.nrows() != V.dims[b.source_object(i)]:
        raise UsageError("bar element vector has the wrong length")
    big = build_category(bump(V.t, i))
    blocks = []
    for U, k in hs.gens:
        g = big.homs(b.S, bump(U, i))[k]
        x, beta = split_shifted(g, i)
        if x == b.x:
            blocks.append(V.action(beta) * b.v)
        else:
            blocks.append(la.zeros(V.dims[U], 1))
    return hs.coords(la.vstack(blocks, 1))


def bar_action(alpha: MorTuple, b: BarElement, V: FunctorModule, i: int) -> list[BarElement]:
    """``alpha · bar(v^x)`` as a list of bar elements at the target of ``alpha``."""
    if source_of(alpha) != b.S:
        raise UsageError("bar_action: morphism does not start at the bar element's object")
    T = target_of(alpha)
    ai = alpha[i]
    n = b.S[i]

    def restricted(y):
        return alpha[:i] + (alpha_y(ai, y),) + alpha[i + 1:]

    if b.x <= n:
        y = ai(b.x)
        return [BarElement(T, y, V.action(restricted(y)) * b.v)]
    out = []
    for y in hat_elements(T[i]):
        if y not in ai.values:
            out.append(BarElement(T, y, V.action(restricted(y)) * b.v))
    return out


def coind_free_formula(S, i: int, t):
    """``coind_i M(S) ≅ M(S) ⊕ M(S + e_i)`` with an explicit isomorphism.

    The generators go to ``bar(id_S)`` at ``x = *`` in ``C(S)`` and at
    ``x = S_i + 1`` (the old star) in ``C(S + e_i)``.  Returns ``(D, C, iso)``.
    """
    S = tuple(S)
    t = check_truncation(t)
    _check_coord(t, i)
    S2 = bump(S, i)
    if not leq(S2, t):
        raise UsageError(f"coind_free_formula: {S2} leaves the truncation {t}")
    V = free_module(S, t)
    C = coind_definitional(V, i)
    e = la.unit(V.dims[S], 0)
    psi1 = bar_hom(BarElement(S, S[i] + 1, e), C)
    psi2 = bar_hom(BarElement(S2, S[i] + 1, e), C)
    h = free_hom([S, S2], C, [psi1, psi2])
    return h.source, C, h


# -- theta ----------------------------------------------------------------------------

def elementary_split(Cmat: la.Matrix, reverse: bool = False):
    """``C = A B`` with ``A`` having independent columns (left factors ``v_i``, right ``w_i``)."""
    if reverse:
        idx = list(range(Cmat.ncols() - 1, -1, -1))
        A = la.column_space(la.select_columns(Cmat, idx))
    else:
        A = la.column_space(Cmat)
    B = la.LeftInverse(A).coords(Cmat)
    return A, B


def theta(V: FunctorModule, W: FunctorModule, reverse: bool = False):
    """``theta: coind_1(V ⊠ W) -> coind(V) ⊠ W`` for an FI-module ``V``.

    Returns ``(source, target, theta)``.  Each ``phi`` is sent to
    ``sum_x sum_i bar(v_i^x) ⊗ w_i^x`` where ``phi(eps_x ⊗ e_T) = sum_i v_i^x ⊗ w_i^x``.
    """
    if V.m != 1:
        raise UsageError("theta: the first factor must be an FI-module")
    X = external_tensor(V, W)
    left = coind_definitional(X, 0)
    CV = coind_definitional(V, 0)
    right = external_tensor(CV, W)
    big = build_category(bump(X.t, 0))
    mats = {}
    for ST in left.cat.objects:
        S, T = ST[:1], ST[1:]
        hs = left.spaces[ST]
        dW = W.dims[T]
        cols = []
        evals = {}
        for x in hat_elements(S[0]):
            U = removed(ST, 0, x)
            g = epsilon_tuple(ST, 0, x)
            idx = big.hom_index(ST, bump(U, 0))[g]
            evals[x] = hs.apply(U, la.unit(hs.V.dims[U], idx))
        for a in range(hs.dim):
            total = la.zeros(right.dims[ST], 1)
            for x, E in evals.items():
                dV = V.dims[removed(S, 0, x)]
                Cmat = la.reshape(la.col(E, a), dV, dW)
                if la.is_zero(Cmat):
                    continue
                A, B = elementary_split(Cmat, reverse)
                for r in range(A.ncols()):
                    vbar = bar_hom(BarElement(S, x, la.col(A, r)), CV)
                    w = la.row_range(B, r, r + 1).transpose()
                    total += la.kronecker(vbar, w)
            cols.append(total)
        mats[ST] = la.hstack(cols, right.dims[ST])
    return left, right, ModuleHom(left, right, mats)


# -- adjunction --------------------------------------------------------------------------

def adjunction_check(V: FunctorModule, W: FunctorModule, i: int, with_ext: bool = False) -> dict:
    """Compare ``Hom(Sigma_i V, W)`` with ``Hom(V, coind_i W)``.

    ``V`` lives over ``t`` and ``W`` over ``t - e_i``; the coinduced module is
    formed over ``t``.
    """
    _check_coord(V.t, i)
    if V.t[i] < 1:
        raise UsageError("adjunction_check: t_i must be at least 1")
    if W.t != bump(V.t, i, -1):
        raise UsageError(f"adjunction_check: W must live over {bump(V.t, i, -1)}, not {W.t}")
    SV = shift(V, i)
    CW = coind_definitional(W, i, t_out=V.t)
    out = {"hom_shift": hom_dim(SV, W), "hom_coind": hom_dim(V, CW)}
    out["hom_agree"] = out["hom_shift"] == out["hom_coind"]
    if with_ext:
        from .homological import ext1

        out["ext1_shift"] = ext1(SV, W).dim
        out["ext1_coind"] = ext1(V, CW).dim
        out["ext1_agree"] = out["ext1_shift"] == out["ext1_coind"]
    return out
