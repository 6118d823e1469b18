"""Representations of FI^m_{<=t} over the rationals.

A :class:`FunctorModule` stores one dimension per object and one matrix per
generating morphism (adjacent transpositions and standard inclusions).  The
action of any other morphism is the product of generator matrices along its
factorization; :func:`validate` checks that this is independent of the word.
"""

from __future__ import annotations

import random
from functools import cached_property

from . import linalg as la
from .category import TruncatedCategory, build_category, check_truncation
from .combinatorics import (
    FimObject,
    Generator,
    MorTuple,
    bump,
    completing_permutation,
    compose_tuple,
    count_mor,
    leq,
    right_descent,
    source_of,
    target_of,
)
from .errors import InvariantError, UsageError

VALIDATE_ALL_PAIRS_LIMIT = 10_000
VALIDATE_SAMPLE = 2_000


class FunctorModule:
    """A covariant functor ``FI^m_{<=t} -> Vect_Q`` given on generators."""

    def __init__(self, t, dims: dict, gen_actions: dict, name: str | None = None):
        self.t = check_truncation(t)
        self.m = len(self.t)
        self.cat: TruncatedCategory = build_category(self.t)
        self.dims = {S: int(dims.get(S, 0)) for S in self.cat.objects}
        extra = set(dims) - set(self.dims)
        if extra:
            raise UsageError(f"dims given for objects outside t={self.t}: {sorted(extra)}")
        self.gen_actions = dict(gen_actions)
        self.name = name
        self._inc_memo: dict = {}
        self._perm_memo: dict = {}
        self._cover_memo: dict = {}

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FunctorModule{label} t={self.t} dims={self.dim_vector()}>"

    def dim(self, S: FimObject) -> int:
        return self.dims[S]

    def dim_vector(self) -> list[int]:
        return [self.dims[S] for S in self.cat.objects]

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def same_shape(self, other: "FunctorModule") -> bool:
        return self.t == other.t

    def gen(self, g: Generator) -> la.Matrix:
        try:
            return self.gen_actions[g]
        except KeyError:
            raise UsageError(f"no action given for generator {g}") from None

    # -- action of arbitrary morphisms ---------------------------------------

    def action(self, f: MorTuple) -> la.Matrix:
        S, T = source_of(f), target_of(f)
        if not (self.cat.contains(S) and self.cat.contains(T)):
            raise UsageError(f"morphism {S}->{T} leaves the truncation {self.t}")
        perms = tuple(completing_permutation(g) for g in f)
        return self._perm_action(T, perms) * self._inclusion_action(S, T)

    def _inclusion_action(self, S, T) -> la.Matrix:
        key = (S, T)
        out = self._inc_memo.get(key)
        if out is None:
            if S == T:
                out = la.identity(self.dims[S])
            else:
                c = next(k for k in range(self.m) if S[k] < T[k])
                out = self._inclusion_action(bump(S, c), T) * self.gen(Generator("inclusion", S, c))
            self._inc_memo[key] = out
        return out

    def _perm_action(self, T, perms) -> la.Matrix:
        key = (T, perms)
        out = self._perm_memo.get(key)
        if out is None:
            for c, p in enumerate(perms):
                k = right_descent(p)
                if k is not None:
                    q = list(p)
                    q[k - 1], q[k] = q[k], q[k - 1]
                    shorter = perms[:c] + (tuple(q),) + perms[c + 1:]
                    out = self._perm_action(T, shorter) * self.gen(Generator("transposition", T, c, k))
                    break
            else:
                out = la.identity(self.dims[T])
            self._perm_memo[key] = out
        return out

    # -- presentations -------------------------------------------------------

    def aut_closure(self, T: FimObject, M: la.Matrix) -> la.Matrix:
        """Basis of the smallest Aut(T)-stable subspace of ``V(T)`` containing ``M``'s columns."""
        B = la.column_space(M)
        d = self.dims[T]
        trans = [self.gen(g) for g in self.cat.generators_at(T) if g.kind == "transposition"]
        while 0 < B.ncols() < d and trans:
            new = la.column_space(la.hstack([B] + [P * B for P in trans], d))
            if new.ncols() == B.ncols():
                break
            B = new
        return B

    def image_from_below(self, T: FimObject) -> la.Matrix:
        """Span in ``V(T)`` of all images of strictly smaller objects."""
        d = self.dims[T]
        blocks = [
            self.gen(Generator("inclusion", bump(T, c, -1), c))
            for c in range(self.m)
            if T[c] > 0
        ]
        return self.aut_closure(T, la.hstack(blocks, d))

    @cached_property
    def generators(self) -> list[tuple]:
        """Generating set ``[(S, k), ...]``: the standard basis vector ``e_k`` of ``V(S)``.

        Greedy by object order: at each object, basis vectors outside the span
        of the images from below and of the Aut-orbits of earlier choices.
        """
        out = []
        for T in self.cat.objects:
            d = self.dims[T]
            if d == 0:
                continue
            B = self.image_from_below(T)
            k = 0
            while B.ncols() < d:
                e = la.unit(d, k)
                if la.rank(la.hstack([B, e])) > B.ncols():
                    out.append((T, k))
                    B = self.aut_closure(T, la.hstack([B, e]))
                k += 1
        return out

    def cover(self, U: FimObject) -> "CoverData":
        """Matrix of the canonical surjection ``⊕_j M(S_j)(U) -> V(U)``."""
        out = self._cover_memo.get(U)
        if out is None:
            labels, cols = [], []
            for j, (S, k) in enumerate(self.generators):
                for f in self.cat.homs(S, U):
                    labels.append((j, f))
                    A = self.action(f)
                    cols.append(la.col(A, k).entries())
            d = self.dims[U]
            flat = [x for c in cols for x in c]
            C = la.Matrix(len(cols), d, flat).transpose() if cols else la.zeros(d, 0)
            out = CoverData(C, labels)
            if len(out.pivots) != d:
                raise InvariantError(f"generators do not span V{U}")
            self._cover_memo[U] = out
        return out


class CoverData:
    def __init__(self, matrix: la.Matrix, labels: list):
        self.matrix = matrix
        self.labels = labels
        self.pivots = la.independent_columns(matrix)
        self.inv = la.inverse(la.select_columns(matrix, self.pivots))

    def preimage(self, z: la.Matrix) -> list[tuple]:
        """Sparse preimage ``[(label, coeff), ...]`` of ``z`` under the cover."""
        y = self.inv * z
        return [(self.labels[self.pivots[i]], v) for i, v in enumerate(y.entries()) if v]


def validate(V: FunctorModule, seed: int = 0) -> list[str]:
    """List of violations; empty when ``V`` is a genuine functor."""
    problems = []
    cat = V.cat
    for S in cat.objects:
        if V.dims[S] < 0:
            problems.append(f"negative dimension at {S}")
    gens = cat.generators()
    expected = set(gens)
    for g in V.gen_actions:
        if g not in expected:
            problems.append(f"unexpected generator {g}")
    for g in gens:
        A = V.gen_actions.get(g)
        if A is None:
            problems.append(f"missing action for {g}")
            continue
        want = (V.dims[g.target], V.dims[g.source])
        if la.shape(A) != want:
            problems.append(f"{g}: shape {la.shape(A)} but expected {want}")
    if problems:
        return problems

    def check(g: Generator, f: MorTuple):
        lhs = V.action(compose_tuple(g.morphism(), f))
        rhs = V.gen(g) * V.action(f)
        if lhs != rhs:
            problems.append(f"action({g} ∘ {_fmt(f)}) != action({g})·action({_fmt(f)})")

    for g in gens:
        for h in cat.generators_at(g.target):
            check(h, g.morphism())
    # generator ∘ (any morphism) for all morphisms gives every relation
    morphisms = [f for S in cat.objects for T in cat.objects for f in cat.homs(S, T)]
    if cat.hom_count > VALIDATE_ALL_PAIRS_LIMIT:
        morphisms = random.Random(seed).sample(morphisms, VALIDATE_SAMPLE)
    for f in morphisms:
        for g in cat.generators_at(target_of(f)):
            check(g, f)
            if len(problems) > 20:
                return problems
    return problems


def _fmt(f: MorTuple) -> str:
    from .combinatorics import mor_str

    return mor_str(f)


# -- homomorphisms -------------------------------------------------------------

class ModuleHom:
    """A natural transformation given by one matrix per object."""

    def __init__(self, source: FunctorModule, target: FunctorModule, mats: dict):
        if source.t != target.t:
            raise UsageError(f"hom between truncations {source.t} and {target.t}")
        self.source = source
        self.target = target
        self.mats = {S: mats.get(S, la.zeros(target.dims[S], source.dims[S])) for S in source.cat.objects}

    def __repr__(self):
        return f"<ModuleHom {self.source!r} -> {self.target!r}>"

    def violations(self) -> list[str]:
        out = []
        V, W = self.source, self.target
        for S, M in self.mats.items():
            if la.shape(M) != (W.dims[S], V.dims[S]):
                out.append(f"matrix at {S} has shape {la.shape(M)}")
        if out:
            return out
        for g in V.cat.generators():
            if self.mats[g.target] * V.gen(g) != W.gen(g) * self.mats[g.source]:
                out.append(f"does not intertwine {g}")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def __mul__(self, other: "ModuleHom") -> "ModuleHom":
        """Composition ``self ∘ other``."""
        if other.target is not self.source and other.target.t != self.source.t:
            raise UsageError("homs not composable")
        return ModuleHom(other.source, self.target, {S: self.mats[S] * other.mats[S] for S in self.mats})

    def __add__(self, other: "ModuleHom") -> "ModuleHom":
        return ModuleHom(self.source, self.target, {S: self.mats[S] + other.mats[S] for S in self.mats})

    def scale(self, c) -> "ModuleHom":
        c = la.rat(c)
        return ModuleHom(self.source, self.target, {S: M * c for S, M in self.mats.items()})

    def equals(self, other: "ModuleHom") -> bool:
        return all(self.mats[S] == other.mats[S] for S in self.mats)

    def is_zero(self) -> bool:
        return all(la.is_zero(M) for M in self.mats.values())


def identity_hom(V: FunctorModule) -> ModuleHom:
    return ModuleHom(V, V, {S: la.identity(d) for S, d in V.dims.items()})


def zero_hom(V: FunctorModule, W: FunctorModule) -> ModuleHom:
    return ModuleHom(V, W, {})


# -- constructors ---------------------------------------------------------------

def zero_module(t) -> FunctorModule:
    cat = build_category(check_truncation(t))
    return FunctorModule(cat.t, {}, {g: la.zeros(0, 0) for g in cat.generators()}, name="0")


def free_module(S, t) -> FunctorModule:
    """``M(S) = Q Hom(S, -)`` with the canonical morphism basis; generators act by ``g ∘ -``."""
    S = tuple(S)
    cat = build_category(check_truncation(t))
    if len(S) != cat.m or not cat.contains(S):
        raise UsageError(f"free_module: {S} is not an object of FI^{cat.m}_<={cat.t}")
    dims = {T: count_mor(S, T) if leq(S, T) else 0 for T in cat.objects}
    actions = {}
    for g in cat.generators():
        A, B = g.source, g.target
        M = la.zeros(dims[B], dims[A])
        if dims[A]:
            idx = cat.hom_index(S, B)
            gm = g.morphism()
            for k, h in enumerate(cat.homs(S, A)):
                M[idx[compose_tuple(gm, h)], k] = 1
        actions[g] = M
    return FunctorModule(cat.t, dims, actions, name=f"M{S}")


def injective_module(S, t) -> FunctorModule:
    """``I(S) = D Q Hom(-, S)``, the dual of a representable right module."""
    S = tuple(S)
    cat = build_category(check_truncation(t))
    if not cat.contains(S):
        raise UsageError(f"injective_module: {S} outside t={cat.t}")
    dims = {U: count_mor(U, S) if leq(U, S) else 0 for U in cat.objects}
    actions = {}
    for g in cat.generators():
        A, B = g.source, g.target
        M = la.zeros(dims[B], dims[A])
        if dims[B]:
            idx = cat.hom_index(A, S)
            gm = g.morphism()
            for k, h in enumerate(cat.homs(B, S)):
                M[k, idx[compose_tuple(h, gm)]] = 1
        actions[g] = M
    return FunctorModule(cat.t, dims, actions, name=f"I{S}")


def coregular_module(t) -> FunctorModule:
    """``D(A)`` for the category algebra ``A`` of the truncation; injective."""
    cat = build_category(check_truncation(t))
    D, _, _ = direct_sum(*(injective_module(S, cat.t) for S in cat.objects))
    D.name = "DA"
    return D


def concentrated_module(S, t, rep: str = "trivial") -> FunctorModule:
    """A module supported at the single object ``S``.

    ``rep`` is ``"trivial"``, ``"sign"`` (every adjacent transposition acts by
    -1) or ``"regular"`` (the regular representation of Aut(S)).
    """
    S = tuple(S)
    cat = build_category(check_truncation(t))
    if not cat.contains(S):
        raise UsageError(f"concentrated_module: {S} outside t={cat.t}")
    if rep == "regular":
        basis = cat.homs(S, S)
        idx = cat.hom_index(S, S)
        d = len(basis)
    elif rep in ("trivial", "sign"):
        d = 1
    else:
        raise UsageError(f"unknown representation {rep!r}")
    dims = {S: d}
    actions = {}
    for g in cat.generators():
        A, B = g.source, g.target
        dA = d if A == S else 0
        dB = d if B == S else 0
        if g.kind == "transposition" and A == S:
            if rep == "regular":
                M = la.zeros(d, d)
                gm = g.morphism()
                for k, h in enumerate(basis):
                    M[idx[compose_tuple(gm, h)], k] = 1
            else:
                M = la.from_rows([[1 if rep == "trivial" else -1]])
        else:
            M = la.zeros(dB, dA)
        actions[g] = M
    return FunctorModule(cat.t, dims, actions, name=f"{rep}@{S}")


def direct_sum(*modules: FunctorModule):
    """``(V_1 ⊕ ... ⊕ V_r, injections, projections)``."""
    if not modules:
        raise UsageError("direct_sum needs at least one summand")
    t = modules[0].t
    if any(V.t != t for V in modules):
        raise UsageError("direct_sum: truncations differ")
    cat = modules[0].cat
    dims = {S: sum(V.dims[S] for V in modules) for S in cat.objects}
    actions = {g: la.block_diag([V.gen(g) for V in modules]) for g in cat.generators()}
    names = [V.name or "?" for V in modules]
    D = FunctorModule(t, dims, actions, name="(" + "+".join(names) + ")")
    inj, proj = [], []
    offsets = {S: 0 for S in cat.objects}
    for V in modules:
        imats, pmats = {}, {}
        for S in cat.objects:
            d, o = V.dims[S], offsets[S]
            M = la.zeros(dims[S], d)
            for k in range(d):
                M[o + k, k] = 1
            imats[S] = M
            pmats[S] = M.transpose()
            offsets[S] += d
        inj.append(ModuleHom(V, D, imats))
        proj.append(ModuleHom(D, V, pmats))
    return D, inj, proj


def external_tensor(*modules: FunctorModule) -> FunctorModule:
    """``V_1 ⊠ ... ⊠ V_r``; the arity is the sum of the factors' arities.

    Coordinate ``c`` generators act by ``I ⊗ ... ⊗ V_k(g) ⊗ ... ⊗ I``.
    """
    if not modules:
        raise UsageError("external_tensor needs at least one factor")
    t = tuple(x for V in modules for x in V.t)
    cat = build_category(t)
    spans = []
    c0 = 0
    for V in modules:
        spans.append((c0, c0 + V.m))
        c0 += V.m

    def parts(S):
        return [S[a:b] for a, b in spans]

    dims = {}
    for S in cat.objects:
        d = 1
        for V, P in zip(modules, parts(S)):
            d *= V.dims[P]
        dims[S] = d
    actions = {}
    for g in cat.generators():
        k = next(i for i, (a, b) in enumerate(spans) if a <= g.coord < b)
        a = spans[k][0]
        src = parts(g.source)
        local = Generator(g.kind, src[k], g.coord - a, g.pos)
        M = la.identity(1)
        for i, (V, P) in enumerate(zip(modules, src)):
            factor = V.gen(local) if i == k else la.identity(V.dims[P])
            M = la.kronecker(M, factor)
        actions[g] = M
    name = "⊠".join(V.name or "?" for V in modules)
    return FunctorModule(t, dims, actions, name=name)


def module_from_bases(V: FunctorModule, bases: dict, name: str | None = None):
    """Submodule with basis ``bases[S]`` (columns) at each object; returns ``(U, incl)``.

    Raises InvariantError if the family is not closed under the action.
    """
    lefts = {S: la.LeftInverse(bases[S]) for S in V.cat.objects}
    dims = {S: bases[S].ncols() for S in V.cat.objects}
    actions = {}
    for g in V.cat.generators():
        Y = V.gen(g) * bases[g.source]
        try:
            actions[g] = lefts[g.target].coords(Y)
        except InvariantError:
            raise InvariantError(f"subspace family not closed under {g}") from None
    U = FunctorModule(V.t, dims, actions, name=name)
    return U, ModuleHom(U, V, dict(bases))


def submodule_span(V: FunctorModule, seeds):
    """Submodule generated by ``seeds = [(S, vector), ...]``; returns ``(U, incl)``."""
    by_obj: dict = {}
    for S, v in seeds:
        S = tuple(S)
        if v.nrows() != V.dims[S]:
            raise UsageError(f"seed at {S} has length {v.nrows()}, expected {V.dims[S]}")
        by_obj.setdefault(S, []).append(v)
    bases = {}
    for T in V.cat.objects:
        d = V.dims[T]
        blocks = list(by_obj.get(T, []))
        for c in range(V.m):
            if T[c] > 0:
                S = bump(T, c, -1)
                blocks.append(V.gen(Generator("inclusion", S, c)) * bases[S])
        bases[T] = V.aut_closure(T, la.hstack(blocks, d))
    return module_from_bases(V, bases)


def kernel(h: ModuleHom):
    V = h.source
    bases = {S: la.kernel_basis(h.mats[S]) for S in V.cat.objects}
    return module_from_bases(V, bases, name="ker")


def image(h: ModuleHom):
    W = h.target
    bases = {S: la.column_space(h.mats[S]) for S in W.cat.objects}
    return module_from_bases(W, bases, name="im")


def quotient(V: FunctorModule, incl: ModuleHom):
    """``(V/U, proj)`` for a submodule given by its inclusion ``incl: U -> V``."""
    if incl.target.t != V.t:
        raise UsageError("quotient: inclusion targets a different truncation")
    proj, sect = {}, {}
    for S in V.cat.objects:
        proj[S], sect[S] = la.quotient_coords(V.dims[S], incl.mats[S])
    actions = {}
    for g in V.cat.generators():
        if not la.is_zero(proj[g.target] * V.gen(g) * incl.mats[g.source]):
            raise InvariantError(f"quotient: image is not a submodule (fails at {g})")
        actions[g] = proj[g.target] * V.gen(g) * sect[g.source]
    Q = FunctorModule(V.t, {S: proj[S].nrows() for S in V.cat.objects}, actions, name="quot")
    return Q, ModuleHom(V, Q, proj)


def free_hom(sources: list, target: FunctorModule, images: list) -> ModuleHom:
    """Hom ``⊕_j M(S_j) -> W`` sending the identity of ``S_j`` to ``images[j]``."""
    F, _, _ = direct_sum(*(free_module(S, target.t) for S in sources))
    mats = {}
    cat = target.cat
    for U in cat.objects:
        cols = []
        for S, c in zip(sources, images):
            for f in cat.homs(tuple(S), U):
                cols.append((target.action(f) * c).entries())
        d = target.dims[U]
        flat = [x for col in cols for x in col]
        mats[U] = la.Matrix(len(cols), d, flat).transpose() if cols else la.zeros(d, 0)
    return ModuleHom(F, target, mats)


# -- hom spaces -------------------------------------------------------------------

class HomSpace:
    """``Hom(V, W)`` realised through a presentation of ``V``.

    A hom is determined by its values ``w_j`` on the generators of ``V``; the
    solution space is cut out by requiring the induced map on the free cover
    to vanish on the kernel of the cover at every object.  ``basis`` holds
    one column of stacked generator values per basis hom.
    """

    def __init__(self, V: FunctorModule, W: FunctorModule):
        if V.t != W.t:
            raise UsageError(f"hom_space: truncations {V.t} and {W.t} differ")
        self.V, self.W = V, W
        self.gens = V.generators
        self.sizes = [W.dims[S] for S, _ in self.gens]
        self.offsets = []
        off = 0
        for s in self.sizes:
            self.offsets.append(off)
            off += s
        self.N = off
        self.basis = self._solve()
        self.dim = self.basis.ncols()
        self._slices: dict = {}
        self._left = None

    def _solve(self) -> la.Matrix:
        V, W = self.V, self.W
        rows = []
        for U in V.cat.objects:
            dWU = W.dims[U]
            if dWU == 0:
                continue
            cov = V.cover(U)
            if cov.matrix.ncols() == 0:
                continue
            K = la.kernel_basis(cov.matrix)
            if K.ncols() == 0:
                continue
            R = la.rref(K.transpose())[0]
            for r in range(R.nrows()):
                blocks = [la.zeros(dWU, s) for s in self.sizes]
                base = r * R.ncols()
                ent = R.entries()
                for p, (j, f) in enumerate(cov.labels):
                    x = ent[base + p]
                    if x:
                        blocks[j] += W.action(f) * x
                rows.append(la.hstack(blocks, dWU))
        if not rows:
            return la.identity(self.N)
        C = la.column_space(la.vstack(rows, self.N).transpose()).transpose()
        return la.kernel_basis(C)

    def slice(self, j: int) -> la.Matrix:
        out = self._slices.get(j)
        if out is None:
            out = la.row_range(self.basis, self.offsets[j], self.offsets[j] + self.sizes[j])
            self._slices[j] = out
        return out

    def apply(self, U: FimObject, z: la.Matrix) -> la.Matrix:
        """Images of ``z ∈ V(U)`` under every basis hom (one column each)."""
        out = la.zeros(self.W.dims[U], self.dim)
        for (j, f), c in self.V.cover(U).preimage(z):
            out += self.W.action(f) * self.slice(j) * c
        return out

    def matrices_at(self, U: FimObject) -> list[la.Matrix]:
        cov = self.V.cover(U)
        dW = self.W.dims[U]
        P = cov.pivots
        if not P:
            return [la.zeros(dW, 0) for _ in range(self.dim)]
        blocks = []
        for p in P:
            j, f = cov.labels[p]
            blocks.append(self.W.action(f) * self.slice(j))
        big = la.vstack(blocks, self.dim)
        out = []
        for a in range(self.dim):
            X = la.reshape(la.col(big, a), len(P), dW)
            out.append(X.transpose() * cov.inv)
        return out

    def homs(self) -> list[ModuleHom]:
        per_obj = {U: self.matrices_at(U) for U in self.V.cat.objects}
        return [ModuleHom(self.V, self.W, {U: per_obj[U][a] for U in per_obj}) for a in range(self.dim)]

    def hom(self, coeffs: la.Matrix) -> ModuleHom:
        """The hom with coordinates ``coeffs`` (a column of length ``dim``)."""
        vals = self.basis * coeffs
        mats = {}
        for U in self.V.cat.objects:
            cov = self.V.cover(U)
            dW = self.W.dims[U]
            cols = []
            for p in cov.pivots:
                j, f = cov.labels[p]
                w = la.row_range(vals, self.offsets[j], self.offsets[j] + self.sizes[j])
                cols.append(self.W.action(f) * w)
            mats[U] = la.hstack(cols, dW) * cov.inv if cols else la.zeros(dW, 0)
        return ModuleHom(self.V, self.W, mats)

    def values_of(self, h: ModuleHom) -> la.Matrix:
        """Stacked generator values of an arbitrary hom ``V -> W``."""
        blocks = [la.col(h.mats[S], k) for S, k in self.gens]
        return la.vstack(blocks, 1)

    def coords(self, values: la.Matrix) -> la.Matrix:
        if self._left is None:
            self._left = la.LeftInverse(self.basis)
        return self._left.coords(values)


def hom_space(V: FunctorModule, W: FunctorModule) -> list[ModuleHom]:
    return HomSpace(V, W).homs()


def hom_dim(V: FunctorModule, W: FunctorModule) -> int:
    return HomSpace(V, W).dim


def iso_check(h: ModuleHom) -> bool:
    return all(la.is_invertible(M) for M in h.mats.values())


def iso_search(V: FunctorModule, W: FunctorModule, trials: int = 64, seed: int = 0) -> ModuleHom | None:
    """Seeded search for an isomorphism among small integer combinations of a hom basis.

    ``None`` is inconclusive unless the dimension vectors differ.
    """
    if V.dims != W.dims:
        return None
    hs = HomSpace(V, W)
    if hs.dim == 0:
        return None if not V.is_zero() else ModuleHom(V, W, {})
    homs = hs.homs()
    rng = random.Random(seed)
    for trial in range(trials):
        if trial < hs.dim:
            coeffs = [1 if a == trial else 0 for a in range(hs.dim)]
        else:
            coeffs = [rng.randint(-3, 3) for _ in range(hs.dim)]
        h = None
        for c, b in zip(coeffs, homs):
            if c:
                h = b.scale(c) if h is None else h + b.scale(c)
        if h is not None and iso_check(h):
            return h
    return None


def iso_verdict(V: FunctorModule, W: FunctorModule, trials: int = 64, seed: int = 0) -> str:
    """``"true"``, ``"false"`` (dimension vectors differ) or ``"unknown"``."""
    if V.dims != W.dims:
        return "false"
    return "true" if iso_search(V, W, trials, seed) is not None else "unknown"


def pullback_dims_equal(V: FunctorModule, W: FunctorModule) -> bool:
    return V.t == W.t and V.dims == W.dims
