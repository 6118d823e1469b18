"""Independent reference computations used only by the tests.

Both oracles work directly with per-object matrices and never touch the
presentation machinery (generators, covers, HomSpace) of the package.
"""

from __future__ import annotations

import math

from fimhom import linalg as la
from fimhom.category import build_category, semisimple_quotient_module
from fimhom.combinatorics import compose_tuple, factorize, source_of, target_of
from fimhom.modules import concentrated_module, free_module, injective_module


def naive_hom_dim(V, W) -> int:
    """dim Hom(V, W) from the intertwining equations ``X_T V(g) = W(g) X_S``."""
    objs = V.cat.objects
    offsets, off = {}, 0
    for S in objs:
        offsets[S] = off
        off += W.dims[S] * V.dims[S]
    if off == 0:
        return 0
    rows = []
    for g in V.cat.generators():
        S, T = g.source, g.target
        A, B = V.gen(g), W.gen(g)
        # vec(X_T A) = (I ⊗ Aᵀ) vec(X_T),  vec(B X_S) = (B ⊗ I) vec(X_S)  (row-major)
        left = la.kronecker(la.identity(W.dims[T]), A.transpose())
        right = la.kronecker(B, la.identity(V.dims[S]))
        n = left.nrows()
        if n == 0:
            continue
        R = la.zeros(n, off)
        for r in range(n):
            for c in range(left.ncols()):
                x = left[r, c]
                if x:
                    R[r, offsets[T] + c] += x
            for c in range(right.ncols()):
                x = right[r, c]
                if x:
                    R[r, offsets[S] + c] -= x
        rows.append(R)
    if not rows:
        return off
    return off - la.rank(la.vstack(rows, off))


def _word_matrix(M, word, S):
    out = la.identity(M.dims[S])
    for g in word:
        out = M.gen(g) * out
    return out


def brute_force_ext1(V, W) -> int:
    """dim Ext^1(V, W) as cocycles modulo coboundaries of block triangular extensions.

    An extension ``0 -> W -> X -> V -> 0`` is ``X(g) = [[W(g), c_g], [0, V(g)]]``
    on generators.  Functoriality of ``X`` on every composable pair of
    morphisms is a linear condition on the ``c_g``; two extensions are
    equivalent when they differ by ``h_T V(g) - W(g) h_S``.
    """
    cat = V.cat
    gens = cat.generators()
    goff, off = {}, 0
    for g in gens:
        goff[g] = off
        off += W.dims[g.target] * V.dims[g.source]
    if off == 0:
        return 0
    morphisms = [f for S in cat.objects for T in cat.objects for f in cat.homs(S, T)]
    words = {f: factorize(f) for f in morphisms}

    def upper_right(word, S):
        """Linear map ``c -> `` upper right block of ``X(word)``, as (rows, off)."""
        T = S
        for g in word:
            T = g.target
        n = W.dims[T] * V.dims[S]
        out = la.zeros(n, off)
        for l, g in enumerate(word):
            after = _word_matrix(W, word[l + 1:], g.target)
            before = _word_matrix(V, word[:l], S)
            K = la.kronecker(after, before.transpose())
            base = goff[g]
            for r in range(K.nrows()):
                for c in range(K.ncols()):
                    x = K[r, c]
                    if x:
                        out[r, base + c] += x
        return out

    ur = {f: upper_right(words[f], source_of(f)) for f in morphisms}
    rows = []
    for f in morphisms:
        for h in cat.homs(target_of(f), target_of(f)) + [
            k for U in cat.objects for k in cat.homs(target_of(f), U) if U != target_of(f)
        ]:
            hf = compose_tuple(h, f)
            S, T = source_of(f), target_of(h)
            Wh = W.action(h)
            Vf = V.action(f)
            # UR(h∘f) - W(h) UR(f) - UR(h) V(f) = 0
            lhs = ur[hf]
            lhs = lhs - la.kronecker(Wh, la.identity(V.dims[S])) * ur[f]
            lhs = lhs - la.kronecker(la.identity(W.dims[T]), Vf.transpose()) * ur[h]
            if lhs.nrows():
                rows.append(lhs)
    Z = la.kernel_basis(la.vstack(rows, off)) if rows else la.identity(off)

    hoff, hn = {}, 0
    for S in cat.objects:
        hoff[S] = hn
        hn += W.dims[S] * V.dims[S]
    cols = []
    for k in range(hn):
        S = next(U for U in cat.objects if hoff[U] <= k < hoff[U] + W.dims[U] * V.dims[U])
        h = la.zeros(W.dims[S], V.dims[S])
        local = k - hoff[S]
        h[local // V.dims[S], local % V.dims[S]] = 1
        c = la.zeros(off, 1)
        for g in gens:
            if g.source == S or g.target == S:
                block = la.zeros(W.dims[g.target], V.dims[g.source])
                if g.target == S:
                    block += h * V.gen(g)
                if g.source == S:
                    block -= W.gen(g) * h
                flat = block.entries()
                for j, x in enumerate(flat):
                    if x:
                        c[goff[g] + j, 0] += x
        cols.append(c)
    B_rank = la.rank(la.hstack(cols, off)) if cols else 0
    return Z.ncols() - B_rank


def perm_count(a: int, b: int) -> int:
    return math.perm(b, a) if a <= b else 0


def small_corpus(t):
    """Free, concentrated, injective and semisimple modules over ``t``, without repeats."""
    cat = build_category(t)
    out = [free_module(S, t) for S in cat.objects]
    out += [concentrated_module(S, t, rep) for S in cat.objects for rep in ("trivial", "sign")]
    out += [injective_module(S, t) for S in cat.objects]
    out.append(semisimple_quotient_module(cat.algebra()))
    seen, uniq = set(), []
    for V in out:
        key = (tuple(V.dim_vector()), tuple(sorted((str(g), tuple(V.gen(g).entries())) for g in cat.generators())))
        if key not in seen:
            seen.add(key)
            uniq.append(V)
    return uniq
