"""Presentations, Ext^1, injectivity, torsion and the Nakayama functor."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg as la
from .category import build_category, semisimple_quotient_module
from .combinatorics import compose_tuple
from .errors import UsageError
from .modules import (
    FunctorModule,
    HomSpace,
    ModuleHom,
    free_hom,
    injective_module,
    kernel,
    module_from_bases,
    quotient,
)


@dataclass
class Presentation:
    """``0 -> K -> F -> V -> 0`` with ``F = ⊕_j M(S_j)``."""

    V: FunctorModule
    F: FunctorModule
    cover: ModuleHom
    objects: list
    K: FunctorModule | None = None
    incl: ModuleHom | None = None


def free_cover(V: FunctorModule) -> Presentation:
    """Cover by free modules on the generators of ``V`` (standard basis vectors)."""
    objs = [S for S, _ in V.generators]
    images = [la.unit(V.dims[S], k) for S, k in V.generators]
    if not objs:
        from .modules import zero_module

        F = zero_module(V.t)
        return Presentation(V, F, ModuleHom(F, V, {}), [])
    h = free_hom(objs, V, images)
    return Presentation(V, h.source, h, objs)


def syzygy(P: Presentation) -> Presentation:
    K, incl = kernel(P.cover)
    P.K, P.incl = K, incl
    return P


@dataclass
class Ext1Result:
    dim: int
    hom_K: int
    restriction_rank: int
    reps: la.Matrix = field(repr=False)


def restriction_matrix(P: Presentation, W: FunctorModule, hs: HomSpace) -> la.Matrix:
    """Matrix of ``Hom(F, W) -> Hom(K, W)`` in coordinates.

    A hom ``F -> W`` is the stacked list of generator images ``w_j ∈ W(S_j)``.
    """
    cat = W.cat
    sizes = [W.dims[S] for S in P.objects]
    nF = sum(sizes)
    rows = []
    for U, k in P.K.generators:
        z = la.col(P.incl.mats[U], k).entries()
        blocks = [la.zeros(W.dims[U], s) for s in sizes]
        pos = 0
        for j, S in enumerate(P.objects):
            for f in cat.homs(S, U):
                c = z[pos]
                if c:
                    blocks[j] += W.action(f) * c
                pos += 1
        rows.append(la.hstack(blocks, W.dims[U]))
    values = la.vstack(rows, nF)
    return hs.coords(values)


def ext1(V: FunctorModule, W: FunctorModule) -> Ext1Result:
    """``Ext^1(V, W) = Hom(K, W) / im Hom(F, W)`` from one syzygy step."""
    if V.t != W.t:
        raise UsageError(f"ext1: truncations {V.t} and {W.t} differ")
    P = syzygy(free_cover(V))
    hs = HomSpace(P.K, W)
    if hs.dim == 0:
        return Ext1Result(0, 0, 0, la.zeros(0, 0))
    R = restriction_matrix(P, W, hs)
    image = la.column_space(R)
    _, section = la.quotient_coords(hs.dim, image)
    return Ext1Result(hs.dim - image.ncols(), hs.dim, image.ncols(), section)


def is_injective_trunc(E: FunctorModule) -> bool:
    """``Ext^1(A / rad A, E) = 0`` over the category algebra ``A`` of the truncation."""
    Q = semisimple_quotient_module(E.cat.algebra())
    return ext1(Q, E).dim == 0


def ext_stabilization(make_V, make_W, t_range) -> dict:
    """Ext^1 dimensions of recipe modules along a range of truncations.

    ``make_V(t)`` and ``make_W(t)`` build the modules at truncation ``t``.
    ``stable`` is true when the last two entries agree.
    """
    rows = []
    for t in t_range:
        t = tuple(t)
        rows.append((t, ext1(make_V(t), make_W(t)).dim))
    stable = len(rows) >= 2 and rows[-1][1] == rows[-2][1]
    return {"table": rows, "stable": stable, "value": rows[-1][1] if rows else None}


# -- torsion --------------------------------------------------------------------------

def _torsion_bases(V: FunctorModule) -> dict:
    t = V.t
    out = {}
    for S in V.cat.objects:
        if S == t:
            out[S] = la.zeros(V.dims[S], 0)
        else:
            out[S] = la.kernel_basis(V._inclusion_action(S, t))
    return out


def torsion_submodule(V: FunctorModule):
    """``(V_T, incl, stable)``: elements killed by the inclusion into the top object.

    Nothing at the top object can be detected; ``stable`` compares with the
    same computation one step lower in every coordinate, on the objects
    where that one can detect torsion.
    """
    U, incl = module_from_bases(V, _torsion_bases(V), name="tor")
    stable = True
    if all(x >= 1 for x in V.t):
        from .functors import pullback

        lower_t = tuple(x - 1 for x in V.t)
        low = _torsion_bases(pullback(V, lower_t))
        for S, B in low.items():
            if S != lower_t and B.ncols() != U.dims[S]:
                stable = False
    return U, incl, stable


def torsion_free_part(V: FunctorModule):
    U, incl, _ = torsion_submodule(V)
    return quotient(V, incl)


def is_torsion(V: FunctorModule) -> bool:
    U, _, _ = torsion_submodule(V)
    return U.dims == V.dims


# -- Nakayama functor ---------------------------------------------------------------------

def _yoneda_precompose(S, T, alpha, t) -> dict:
    """Matrices of ``M(T) -> M(S)``, ``g ↦ g ∘ alpha``, at every object."""
    cat = build_category(t)
    out = {}
    for U in cat.objects:
        src = cat.homs(T, U)
        idx = cat.hom_index(S, U)
        M = la.zeros(len(idx), len(src))
        for k, g in enumerate(src):
            M[idx[compose_tuple(g, alpha)], k] = 1
        out[U] = M
    return out


def nakayama(V: FunctorModule) -> FunctorModule:
    """``nu(V)(S) = D Hom(V, M(S))``."""
    from .modules import free_module

    cat = V.cat
    spaces = {S: HomSpace(V, free_module(S, V.t)) for S in cat.objects}
    dims = {S: spaces[S].dim for S in cat.objects}
    actions = {}
    for g in cat.generators():
        S, T = g.source, g.target
        hs_S, hs_T = spaces[S], spaces[T]
        Y = _yoneda_precompose(S, T, g.morphism(), V.t)
        blocks = []
        for j, (U, _) in enumerate(hs_T.gens):
            blocks.append(Y[U] * hs_T.slice(j))
        vals = la.vstack(blocks, hs_T.dim)
        P = hs_S.coords(vals)
        actions[g] = P.transpose()
    return FunctorModule(V.t, dims, actions, name=f"ν({V.name or '?'})")


def upbound_coordinate(V: FunctorModule) -> int | None:
    """A coordinate ``c`` with ``V`` vanishing wherever ``S_c = t_c``, if any."""
    for c in range(V.m):
        if all(V.dims[S] == 0 for S in V.cat.objects if S[c] == V.t[c]):
            return c
    return None


def inverse_nakayama(V: FunctorModule) -> FunctorModule:
    """``nu^{-1}(V)(S) = Hom(I(S), V)`` with ``I(S) = D kHom(-, S)``.

    Requires ``V`` to be bounded strictly inside the truncation.
    """
    if upbound_coordinate(V) is None:
        raise UsageError("inverse_nakayama: V needs an upbound strictly below the truncation")
    cat = V.cat
    inj = {S: injective_module(S, V.t) for S in cat.objects}
    spaces = {S: HomSpace(inj[S], V) for S in cat.objects}
    dims = {S: spaces[S].dim for S in cat.objects}
    actions = {}
    for g in cat.generators():
        S, T = g.source, g.target
        alpha = g.morphism()
        hs_S, hs_T = spaces[S], spaces[T]
        blocks = []
        for U, k in hs_T.gens:
            # I(T)(U) -> I(S)(U) is the transpose of f ↦ alpha ∘ f
            idx_T = cat.hom_index(U, T)
            q = la.zeros(inj[S].dims[U], 1)
            target_f = cat.homs(U, T)[k]
            for r, f in enumerate(cat.homs(U, S)):
                if idx_T[compose_tuple(alpha, f)] == idx_T[target_f]:
                    q[r, 0] = 1
            blocks.append(hs_S.apply(U, q))
        vals = la.vstack(blocks, hs_S.dim)
        actions[g] = hs_T.coords(vals)
    return FunctorModule(V.t, dims, actions, name=f"ν⁻¹({V.name or '?'})")


def kernel_nu_check(V: FunctorModule) -> dict:
    """``nu(V) = 0`` against ``V`` being torsion, with the torsion stability flag."""
    nu = nakayama(V)
    U, _, stable = torsion_submodule(V)
    nu_zero = nu.is_zero()
    torsion = U.dims == V.dims
    return {
        "nu_zero": nu_zero,
        "torsion": torsion,
        "agree": nu_zero == torsion,
        "stable": stable,
        "nu_dims": nu.dim_vector(),
    }
