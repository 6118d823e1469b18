"""Objects and morphisms of FI and FI^m on skeletal objects ``[n]``.

An object of FI is a natural number ``n`` standing for ``{1, ..., n}``; an
object of FI^m is an m-tuple of those.  The extra point ``*`` of the hat
object ``[n]^ = [n+1]`` is always encoded as ``n + 1``, and removing a point
``x`` from ``[n]`` relabels the rest order-preservingly onto ``[n-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import NamedTuple

from .errors import UsageError

FimObject = tuple  # tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Injection:
    """An injection ``[len(values)] -> [target]``; ``values[k]`` is the image of k+1."""

    values: tuple
    target: int

    def __post_init__(self):
        if len(set(self.values)) != len(self.values):
            raise UsageError(f"not injective: {self.values}")
        if any(not 1 <= v <= self.target for v in self.values):
            raise UsageError(f"values {self.values} outside [{self.target}]")

    @property
    def source(self) -> int:
        return len(self.values)

    def __call__(self, a: int) -> int:
        return self.values[a - 1]

    def is_bijective(self) -> bool:
        return self.source == self.target

    def __str__(self) -> str:
        return f"{self.source}->{self.target}:[{','.join(map(str, self.values))}]"


MorTuple = tuple  # tuple[Injection, ...]


def identity(n: int) -> Injection:
    return Injection(tuple(range(1, n + 1)), n)


def identity_tuple(S: FimObject) -> MorTuple:
    return tuple(identity(n) for n in S)


def source_of(f: MorTuple) -> FimObject:
    return tuple(g.source for g in f)


def target_of(f: MorTuple) -> FimObject:
    return tuple(g.target for g in f)


def mor_str(f: MorTuple) -> str:
    return ";".join(str(g) for g in f)


def parse_injection(text: str) -> Injection:
    try:
        head, vals = text.split(":")
        a, b = (int(x) for x in head.split("->"))
        inner = vals.strip()[1:-1].strip()
        values = tuple(int(v) for v in inner.split(",")) if inner else ()
    except ValueError as exc:
        raise UsageError(f"bad injection text {text!r}") from exc
    if len(values) != a:
        raise UsageError(f"injection {text!r} lists {len(values)} values for source {a}")
    return Injection(values, b)


def parse_mor(text: str) -> MorTuple:
    return tuple(parse_injection(p) for p in text.split(";"))


def enumerate_injections(a: int, b: int) -> list[Injection]:
    """All injections ``[a] -> [b]`` in lexicographic order of their values."""
    if a > b or a < 0:
        return []
    return [Injection(p, b) for p in permutations(range(1, b + 1), a)]


def enumerate_mor(S: FimObject, T: FimObject) -> list[MorTuple]:
    """Morphisms ``S -> T`` in FI^m: product of per-coordinate lex orders."""
    return [tuple(p) for p in product(*(enumerate_injections(a, b) for a, b in zip(S, T)))]


def count_injections(a: int, b: int) -> int:
    if a > b:
        return 0
    out = 1
    for k in range(b - a + 1, b + 1):
        out *= k
    return out


def count_mor(S: FimObject, T: FimObject) -> int:
    out = 1
    for a, b in zip(S, T):
        out *= count_injections(a, b)
    return out


def leq(S: FimObject, T: FimObject) -> bool:
    return all(a <= b for a, b in zip(S, T))


def compose(g: Injection, f: Injection) -> Injection:
    """``g ∘ f``."""
    if f.target != g.source:
        raise UsageError(f"cannot compose {g} after {f}")
    gv = g.values
    return Injection(tuple(gv[v - 1] for v in f.values), g.target)


def compose_tuple(g: MorTuple, f: MorTuple) -> MorTuple:
    if len(g) != len(f):
        raise UsageError("arity mismatch in compose")
    return tuple(compose(a, b) for a, b in zip(g, f))


def iota(f: Injection) -> Injection:
    """Extend ``f: [a]->[b]`` to ``[a+1]->[b+1]`` fixing the star point."""
    return Injection(f.values + (f.target + 1,), f.target + 1)


def iota_i(f: MorTuple, i: int) -> MorTuple:
    if not 0 <= i < len(f):
        raise UsageError(f"coordinate {i} out of range for arity {len(f)}")
    return f[:i] + (iota(f[i]),) + f[i + 1:]


# -- removing a point --------------------------------------------------------

def remove_label(n: int, x: int, a: int) -> int:
    """Label of ``a`` in ``[n]^x`` (x = n+1 is the star, removing nothing)."""
    if x == n + 1:
        return a
    if a == x:
        raise UsageError(f"{a} is the removed point")
    return a if a < x else a - 1


def restore_label(n: int, x: int, b: int) -> int:
    """Inverse of :func:`remove_label`: element of ``[n]`` labelled ``b`` in ``[n]^x``."""
    if x == n + 1:
        return b
    return b if b < x else b + 1


def removed_size(n: int, x: int) -> int:
    return n if x == n + 1 else n - 1


def _check_hat(n: int, x: int) -> None:
    if not 1 <= x <= n + 1:
        raise UsageError(f"{x} is not an element of [{n}]^ = [{n + 1}]")


def epsilon(n: int, x: int) -> Injection:
    """The morphism ``[n] -> ([n]^x)^`` sending ``x`` to the star.

    For ``x = *`` this is the standard inclusion ``[n] -> [n+1]``; otherwise a
    bijection of ``[n]`` sending ``x`` to ``n``.
    """
    _check_hat(n, x)
    if x == n + 1:
        return Injection(tuple(range(1, n + 1)), n + 1)
    return Injection(tuple(n if a == x else remove_label(n, x, a) for a in range(1, n + 1)), n)


def alpha_inv(alpha: Injection, z: int) -> int:
    """Preimage of ``z`` under ``alpha`` inside ``[S]^``; the star if there is none."""
    _check_hat(alpha.target, z)
    try:
        return alpha.values.index(z) + 1
    except ValueError:
        return alpha.source + 1


def alpha_y(alpha: Injection, y: int) -> Injection:
    """The restriction ``S^x -> T^y`` of ``alpha`` where ``x = alpha_inv(alpha, y)``.

    It is the unique morphism with ``epsilon(T, y) ∘ alpha == iota(alpha^y) ∘ epsilon(S, x)``.
    """
    a, b = alpha.source, alpha.target
    x = alpha_inv(alpha, y)
    out = Injection(
        tuple(remove_label(b, y, alpha(restore_label(a, x, k))) for k in range(1, removed_size(a, x) + 1)),
        removed_size(b, y),
    )
    assert compose(epsilon(b, y), alpha) == compose(iota(out), epsilon(a, x))
    return out


# -- generators and factorization ---------------------------------------------

class Generator(NamedTuple):
    """A generating morphism at ``obj``.

    ``kind == "transposition"``: the automorphism of ``obj`` swapping ``pos``
    and ``pos + 1`` in coordinate ``coord``.  ``kind == "inclusion"``: the
    standard inclusion ``obj -> obj + e_coord``; ``pos`` is None.
    """

    kind: str
    obj: tuple
    coord: int
    pos: int | None = None

    @property
    def source(self) -> FimObject:
        return self.obj

    @property
    def target(self) -> FimObject:
        if self.kind == "inclusion":
            return bump(self.obj, self.coord)
        return self.obj

    def morphism(self) -> MorTuple:
        parts = []
        for c, n in enumerate(self.obj):
            if c != self.coord:
                parts.append(identity(n))
            elif self.kind == "inclusion":
                parts.append(Injection(tuple(range(1, n + 1)), n + 1))
            else:
                vals = list(range(1, n + 1))
                p = self.pos
                vals[p - 1], vals[p] = vals[p], vals[p - 1]
                parts.append(Injection(tuple(vals), n))
        return tuple(parts)

    def __str__(self) -> str:
        if self.kind == "inclusion":
            return f"inc{self.coord}@{self.obj}"
        return f"s{self.coord}.{self.pos}@{self.obj}"


def bump(S: FimObject, i: int, by: int = 1) -> FimObject:
    return S[:i] + (S[i] + by,) + S[i + 1:]


def generators_at(S: FimObject, t: FimObject | None = None) -> list[Generator]:
    """Generators with source ``S`` in canonical order; inclusions only inside ``t``."""
    out = []
    for c, n in enumerate(S):
        for p in range(1, n):
            out.append(Generator("transposition", S, c, p))
        if t is None or n < t[c]:
            out.append(Generator("inclusion", S, c))
    return out


def completing_permutation(f: Injection) -> tuple:
    """One-line notation of the permutation σ of [b] with σ ∘ inc = f.

    Points a+1..b go to the values missed by ``f`` in increasing order.
    """
    missing = sorted(set(range(1, f.target + 1)) - set(f.values))
    return f.values + tuple(missing)


def right_descent(perm: tuple) -> int | None:
    for k in range(len(perm) - 1):
        if perm[k] > perm[k + 1]:
            return k + 1
    return None


def permutation_word(perm: tuple) -> list[int]:
    """Adjacent transpositions ``[p1, p2, ...]`` with ``perm = s_{p1} ∘ s_{p2} ∘ ...``.

    Applied right to left, i.e. the last entry acts first.
    """
    perm = list(perm)
    word = []
    while True:
        k = right_descent(tuple(perm))
        if k is None:
            break
        # perm = perm' ∘ s_k with perm' = perm ∘ s_k shorter
        perm[k - 1], perm[k] = perm[k], perm[k - 1]
        word.append(k)
    return word[::-1]


def factorize(f: MorTuple) -> list[Generator]:
    """Word of generators in application order whose composite is ``f``.

    All standard inclusions come first (coordinate by coordinate), followed
    by adjacent transpositions at the target.
    """
    S = source_of(f)
    T = target_of(f)
    word = []
    cur = S
    for c in range(len(S)):
        while cur[c] < T[c]:
            word.append(Generator("inclusion", cur, c))
            cur = bump(cur, c)
    for c, g in enumerate(f):
        for p in reversed(permutation_word(completing_permutation(g))):
            word.append(Generator("transposition", T, c, p))
    return word


def recompose(word: list[Generator], S: FimObject) -> MorTuple:
    out = identity_tuple(S)
    for g in word:
        out = compose_tuple(g.morphism(), out)
    return out
