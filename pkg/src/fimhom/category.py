"""The finite full subcategory FI^m_{<=t} and its category algebra."""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import product

from . import linalg as la
from .combinatorics import (
    FimObject,
    Generator,
    MorTuple,
    compose_tuple,
    enumerate_mor,
    generators_at,
    identity_tuple,
    leq,
    source_of,
    target_of,
)
from .errors import UsageError


def check_truncation(t) -> tuple:
    t = tuple(int(x) for x in t)
    if not t:
        raise UsageError("truncation needs arity m >= 1")
    if any(x < 0 for x in t):
        raise UsageError(f"truncation {t} has a negative entry")
    return t


class TruncatedCategory:
    """All objects ``S <= t`` (lex order) with canonically ordered hom-sets."""

    def __init__(self, t):
        self.t = check_truncation(t)
        self.m = len(self.t)
        self.objects = [tuple(S) for S in product(*(range(n + 1) for n in self.t))]
        self._homs: dict = {}
        self._index: dict = {}

    def __repr__(self):
        return f"TruncatedCategory(t={self.t})"

    def contains(self, S: FimObject) -> bool:
        return len(S) == self.m and all(0 <= a <= b for a, b in zip(S, self.t))

    def homs(self, S: FimObject, T: FimObject) -> list[MorTuple]:
        key = (S, T)
        out = self._homs.get(key)
        if out is None:
            out = enumerate_mor(S, T) if leq(S, T) else []
            self._homs[key] = out
        return out

    def hom_index(self, S: FimObject, T: FimObject) -> dict:
        key = (S, T)
        out = self._index.get(key)
        if out is None:
            out = {f: k for k, f in enumerate(self.homs(S, T))}
            self._index[key] = out
        return out

    def compose(self, g: MorTuple, f: MorTuple) -> MorTuple:
        return compose_tuple(g, f)

    def generators(self) -> list[Generator]:
        return [g for S in self.objects for g in generators_at(S, self.t)]

    def generators_at(self, S: FimObject) -> list[Generator]:
        return generators_at(S, self.t)

    @cached_property
    def hom_count(self) -> int:
        return sum(len(self.homs(S, T)) for S in self.objects for T in self.objects)

    def is_ei(self) -> bool:
        return all(all(g.is_bijective() for g in f) for S in self.objects for f in self.homs(S, S))

    def algebra(self) -> "CategoryAlgebra":
        return CategoryAlgebra(self)


@lru_cache(maxsize=None)
def build_category(t) -> TruncatedCategory:
    return TruncatedCategory(check_truncation(t))


def build_category_m(m: int, t) -> TruncatedCategory:
    cat = build_category(tuple(t))
    if cat.m != m:
        raise UsageError(f"truncation {cat.t} does not have arity {m}")
    return cat


class CategoryAlgebra:
    """The category algebra with basis all morphisms of a truncation.

    Basis order: for S in objects, for T in objects, ``homs(S, T)``.
    """

    def __init__(self, cat: TruncatedCategory):
        self.cat = cat
        self.basis: list[MorTuple] = [f for S in cat.objects for T in cat.objects for f in cat.homs(S, T)]
        self.index = {f: k for k, f in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._by_target: dict = {}
        for k, f in enumerate(self.basis):
            self._by_target.setdefault(target_of(f), []).append(k)
        self._by_source: dict = {}
        for k, f in enumerate(self.basis):
            self._by_source.setdefault(source_of(f), []).append(k)

    def product(self, a: int, b: int) -> int | None:
        """Index of ``basis[a] ∘ basis[b]``, or None when not composable."""
        f, g = self.basis[a], self.basis[b]
        if source_of(f) != target_of(g):
            return None
        return self.index[compose_tuple(f, g)]

    @cached_property
    def table(self) -> dict:
        out = {}
        for a, f in enumerate(self.basis):
            for b in self._by_target.get(source_of(f), []):
                out[a, b] = self.index[compose_tuple(f, self.basis[b])]
        return out

    def unit(self) -> la.Matrix:
        v = la.zeros(self.dim, 1)
        for S in self.cat.objects:
            v[self.index[identity_tuple(S)], 0] = 1
        return v

    def idempotent_indices(self, S: FimObject, side: str = "target") -> list[int]:
        """Basis indices of ``e_S A`` (side="target") or ``A e_S`` (side="source")."""
        d = self._by_target if side == "target" else self._by_source
        return list(d.get(S, []))

    def multiply(self, x: la.Matrix, y: la.Matrix) -> la.Matrix:
        ex, ey = x.entries(), y.entries()
        out = la.zeros(self.dim, 1)
        table = self.table
        nzy = [(b, v) for b, v in enumerate(ey) if v]
        for a, u in enumerate(ex):
            if not u:
                continue
            for b, v in nzy:
                h = table.get((a, b))
                if h is not None:
                    out[h, 0] += u * v
        return out

    def left_mult_matrix(self, a: int) -> la.Matrix:
        M = la.zeros(self.dim, self.dim)
        for b in self._by_target.get(source_of(self.basis[a]), []):
            M[self.table[a, b], b] = 1
        return M

    def trace_form(self) -> la.Matrix:
        """Gram matrix of ``(a, b) ↦ tr(L_{ab})``.

        ``tr(L_h)`` counts basis morphisms ``g`` with ``h ∘ g = g``.
        """
        tr = [0] * self.dim
        for (a, b), h in self.table.items():
            if h == b:
                tr[a] += 1
        G = la.zeros(self.dim, self.dim)
        for (a, b), h in self.table.items():
            if tr[h]:
                G[a, b] = tr[h]
        return G

    @cached_property
    def radical(self) -> la.Matrix:
        """Jacobson radical as the radical of the trace form (characteristic 0)."""
        return la.kernel_basis(self.trace_form())

    def ideal_powers(self, basis: la.Matrix, limit: int = 64) -> list[int]:
        """Dimensions of ``R, R^2, ...`` until zero, where ``R`` is spanned by ``basis``."""
        cols = [la.col(basis, j) for j in range(basis.ncols())]
        dims = []
        cur = cols
        while cur and len(dims) < limit:
            dims.append(len(cur))
            prods = [self.multiply(r, x) for r in cols for x in cur]
            span = la.column_space(la.hstack(prods, self.dim)) if prods else la.zeros(self.dim, 0)
            cur = [la.col(span, j) for j in range(span.ncols())]
        return dims

    def nilpotency_index(self, basis: la.Matrix) -> int:
        """Smallest ``N`` with ``R^N = 0``."""
        return len(self.ideal_powers(basis)) + 1


def radical(A: CategoryAlgebra) -> la.Matrix:
    return A.radical


def algebra_kronecker_check(t) -> bool:
    """Compare the structure table of the FI^m_{<=t} algebra with the product of
    the FI_{<=t_i} tables under the basis bijection ``f ↦ (f_1, ..., f_m)``."""
    cat = build_category(tuple(t))
    A = cat.algebra()
    comps = [build_category((n,)).algebra() for n in cat.t]
    if A.dim != _prod(c.dim for c in comps):
        return False
    comp_index = [
        {f[0]: k for k, f in enumerate(c.basis)} for c in comps
    ]

    def split(f):
        return tuple(ci[g] for ci, g in zip(comp_index, f))

    parts = [split(f) for f in A.basis]
    if len(set(parts)) != A.dim:
        return False
    for a in range(A.dim):
        for b in range(A.dim):
            h = A.product(a, b)
            expected = []
            for c, (x, y) in enumerate(zip(parts[a], parts[b])):
                expected.append(comps[c].product(x, y))
            if any(e is None for e in expected):
                if h is not None:
                    return False
            elif h is None or parts[h] != tuple(expected):
                return False
    return True


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def semisimple_quotient_module(A: CategoryAlgebra):
    """The left module ``A / rad A`` as a functor module (``V(S) = e_S (A/rad A)``)."""
    from .modules import FunctorModule

    cat = A.cat
    rad = A.radical
    proj, sect, idx = {}, {}, {}
    dims = {}
    for S in cat.objects:
        rows = A.idempotent_indices(S, "target")
        idx[S] = rows
        sub = la.column_space(la.select_rows(rad, rows)) if rad.ncols() else la.zeros(len(rows), 0)
        p, s = la.quotient_coords(len(rows), sub)
        proj[S], sect[S] = p, s
        dims[S] = p.nrows()
    actions = {}
    for g in cat.generators():
        S, T = g.source, g.target
        f = g.morphism()
        L = la.zeros(len(idx[T]), len(idx[S]))
        pos_T = {k: r for r, k in enumerate(idx[T])}
        for c, b in enumerate(idx[S]):
            h = A.index[compose_tuple(f, A.basis[b])]
            L[pos_T[h], c] = 1
        actions[g] = proj[T] * L * sect[S]
    return FunctorModule(cat.t, dims, actions)
