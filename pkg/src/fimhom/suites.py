"""Verification suites, one per statement being checked at desk scale."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import linalg as la
from .category import algebra_kronecker_check, build_category, semisimple_quotient_module
from .combinatorics import bump, count_mor, leq
from .errors import UsageError
from .functors import (
    BarElement,
    adjunction_check,
    bar_action,
    bar_hom,
    coind_definitional,
    coind_free_formula,
    decompose_shift_free,
    hat_elements,
    pullback,
    pushforward,
    removed,
    theta,
)
from .homological import (
    ext1,
    ext_stabilization,
    inverse_nakayama,
    is_injective_trunc,
    kernel_nu_check,
    nakayama,
)
from .modules import (
    FunctorModule,
    ModuleHom,
    concentrated_module,
    coregular_module,
    direct_sum,
    external_tensor,
    free_module,
    identity_hom,
    injective_module,
    iso_check,
    iso_search,
    validate,
)
from .report import Report


@dataclass
class SuiteConfig:
    suite: str
    m: int | None = None
    t: tuple | None = None
    t_range: list | None = None
    max_n: int | None = None
    seed: int = 0
    out: str | None = None

    def echo(self) -> dict:
        return {
            "suite": self.suite,
            "m": self.m,
            "t": list(self.t) if self.t else None,
            "t_range": [list(x) for x in self.t_range] if self.t_range else None,
            "max_n": self.max_n,
            "seed": self.seed,
        }


def parse_t(text: str) -> tuple:
    try:
        t = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad truncation {text!r}; expected INT,INT,...") from None
    if any(x < 0 for x in t) or not t:
        raise UsageError(f"bad truncation {text!r}")
    return t


def parse_t_range(text: str, m: int | None) -> list:
    """``A..B`` with A, B integers or comma lists; integers mean the diagonal."""
    try:
        a, b = text.split("..")
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    ta, tb = parse_t(a), parse_t(b)
    if len(ta) == 1 and len(tb) == 1 and m and m > 1:
        ta, tb = ta * m, tb * m
    if len(ta) != len(tb) or not leq(ta, tb):
        raise UsageError(f"bad range {text!r}")
    steps = max(y - x for x, y in zip(ta, tb))
    out = []
    for k in range(steps + 1):
        out.append(tuple(min(x + k, y) for x, y in zip(ta, tb)))
    return out


# -- module recipes ----------------------------------------------------------------------

def recipe(name: str, t) -> FunctorModule:
    """Build a named corpus module at truncation ``t``.

    ``M(S)`` free, ``conc(S)`` trivial at S, ``sign(S)``, ``reg(S)``, ``I(S)``,
    ``DA`` coregular, ``ss`` semisimple quotient of the category algebra.
    """
    t = tuple(t)
    if name == "DA":
        return coregular_module(t)
    if name == "ss":
        return semisimple_quotient_module(build_category(t).algebra())
    head, _, rest = name.partition("(")
    S = parse_t(rest.rstrip(")"))
    if head == "M":
        return free_module(S, t)
    if head == "I":
        return injective_module(S, t)
    if head == "conc":
        return concentrated_module(S, t, "trivial")
    if head == "sign":
        return concentrated_module(S, t, "sign")
    if head == "reg":
        return concentrated_module(S, t, "regular")
    raise UsageError(f"unknown module recipe {name!r}")


def objects_upto(t, cap) -> list:
    return [S for S in build_category(tuple(t)).objects if cap is None or all(x <= cap for x in S)]


def _envelopes(cfg: SuiteConfig, defaults: list) -> list:
    if cfg.t is not None:
        cap = cfg.max_n if cfg.max_n is not None else max(cfg.t)
        return [(tuple(cfg.t), cap)]
    envs = [(t, cap if cfg.max_n is None else cfg.max_n) for t, cap in defaults]
    if cfg.m is not None:
        envs = [(t, c) for t, c in envs if len(t) == cfg.m]
    if not envs:
        raise UsageError(f"suite {cfg.suite} has no default envelope for m={cfg.m}; pass --t")
    return envs


def _tstr(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


# -- suites --------------------------------------------------------------------------------

def suite_shift_decomp(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    for t, cap in _envelopes(cfg, [((4,), 3), ((3, 3), 2)]):
        for i in range(len(t)):
            for S in objects_upto(t, cap):
                P, D, fwd, bwd = decompose_shift_free(S, i, t)
                ok = (
                    fwd.is_valid()
                    and bwd.is_valid()
                    and (fwd * bwd).equals(identity_hom(D))
                    and (bwd * fwd).equals(identity_hom(P))
                )
                rep.check(
                    f"t={_tstr(t)} i={i + 1} S={_tstr(S)}",
                    ok,
                    shifted_dims=P.dim_vector(),
                    summed_dims=D.dim_vector(),
                )
    return rep


def suite_coind_free(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    for t, cap in _envelopes(cfg, [((4,), 3), ((3, 3), 2)]):
        cat = build_category(t)
        for i in range(len(t)):
            for S in objects_upto(t, cap):
                if not leq(bump(S, i), t):
                    continue
                D, C, h = coind_free_formula(S, i, t)
                expected = [count_mor(S, U) + count_mor(bump(S, i), U) for U in cat.objects]
                ok = not validate(C) and h.is_valid() and iso_check(h) and C.dim_vector() == expected
                rep.check(
                    f"t={_tstr(t)} i={i + 1} S={_tstr(S)}",
                    ok,
                    coind_dims=C.dim_vector(),
                    formula_dims=D.dim_vector(),
                    count_dims=expected,
                )
    if cfg.t is None or len(cfg.t) == 1:
        t = cfg.t or (3,)
        C = coind_definitional(free_module((0,), t), 0)
        D, _, _ = direct_sum(free_module((0,), t), free_module((1,), t))
        w = iso_search(D, C, trials=32, seed=cfg.seed)
        rep.add(
            f"t={_tstr(t)} iso_search M(0)+M(1) vs coind M(0)",
            "PASS" if w is not None else "UNKNOWN",
            dims=C.dim_vector(),
        )
    return rep


def suite_bar_formula(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    t = tuple(cfg.t) if cfg.t else (3,)
    if len(t) != 1:
        raise UsageError("bar-formula runs over FI (m = 1)")
    cap = cfg.max_n if cfg.max_n is not None else 2
    corpus = ["M(0)", "M(1)", "M(2)", "ss", "sign(2)", "I(2)"]
    for name in corpus:
        V = recipe(name, t)
        C = coind_definitional(V, 0)
        checked = bad = 0
        for S in objects_upto(t, cap):
            for T in objects_upto(t, cap):
                for alpha in C.cat.homs(S, T):
                    A = C.action(alpha)
                    for x in hat_elements(S[0]):
                        d = V.dims[removed(S, 0, x)]
                        for k in range(d):
                            b = BarElement(S, x, la.unit(d, k))
                            lhs = A * bar_hom(b, C)
                            rhs = la.zeros(C.dims[T], 1)
                            for o in bar_action(alpha, b, V, 0):
                                rhs += bar_hom(o, C)
                            checked += 1
                            bad += lhs != rhs
        rep.check(f"V={name} t={_tstr(t)}", bad == 0 and checked > 0, checked=checked, mismatches=bad)
    return rep


def _free_count(a: int, S: int) -> int:
    return math.perm(S, a) if a <= S else 0


def suite_theta(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    t = tuple(cfg.t) if cfg.t else (3, 3)
    if len(t) != 2:
        raise UsageError("theta runs over FI^2")
    cap = cfg.max_n if cfg.max_n is not None else 2
    for a, b in product(range(cap + 1), repeat=2):
        if a > t[0] or b > t[1]:
            continue
        V = free_module((a,), t[:1])
        W = free_module((b,), t[1:])
        left, right, h = theta(V, W)
        # Yoneda oracle: coind M(a) = M(a) + M(a+1), then tensor with M(b)
        oracle = {
            U: (_free_count(a, U[0]) + _free_count(a + 1, U[0])) * _free_count(b, U[1]) for U in left.cat.objects
        }
        dims_ok = all(left.dims[U] == right.dims[U] == oracle[U] for U in left.cat.objects)
        table = {_tstr(U): [left.dims[U], right.dims[U], oracle[U]] for U in left.cat.objects}
        rep.check(
            f"V=M({a}) W=M({b}) t={_tstr(t)}",
            h.is_valid() and iso_check(h) and dims_ok,
            dims_left_right_oracle=table,
        )
    return rep


ADJ_CORPUS_1 = (["M(0)", "M(1)", "M(2)", "conc(1)", "sign(2)", "ss"], ["M(0)", "M(1)", "conc(1)", "DA", "ss"])
ADJ_CORPUS_2 = (["M(1,0)", "M(1,1)", "conc(1,1)"], ["M(0,1)", "M(1,1)", "conc(1,0)"])


def suite_adjunction(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    envs = _envelopes(cfg, [((3,), None), ((2, 2), None)])
    for t, _ in envs:
        vs, ws = ADJ_CORPUS_1 if len(t) == 1 else ADJ_CORPUS_2
        for i in range(len(t)):
            if t[i] < 1:
                continue
            tw = bump(t, i, -1)
            for vn in vs:
                for wn in ws:
                    try:
                        V, W = recipe(vn, t), recipe(wn, tw)
                    except UsageError:
                        continue
                    r = adjunction_check(V, W, i, with_ext=True)
                    rep.check(
                        f"t={_tstr(t)} i={i + 1} V={vn} W={wn}",
                        r["hom_agree"] and r["ext1_agree"],
                        **r,
                    )
    return rep


def suite_tensor_sum(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    t1 = tuple(cfg.t[:1]) if cfg.t else (3,)
    t2 = tuple(cfg.t[1:2]) if cfg.t and len(cfg.t) > 1 else (3,)
    cap = cfg.max_n if cfg.max_n is not None else 2
    for a in range(min(cap, t1[0]) + 1):
        for b in range(min(cap, t2[0]) + 1):
            X = external_tensor(free_module((a,), t1), free_module((b,), t2))
            F = free_module((a, b), t1 + t2)
            h = ModuleHom(X, F, {U: la.identity(F.dims[U]) for U in F.cat.objects})
            rep.check(
                f"M({a})⊠M({b}) = M({a},{b})",
                X.dims == F.dims and h.is_valid() and iso_check(h),
                dims=F.dim_vector(),
            )
    pairs = [("M(1)", "M(0)", "conc(1)"), ("conc(1)", "M(1)", "DA"), ("ss", "M(2)", "sign(2)")]
    for vn, an, bn in pairs:
        V, A, B = recipe(vn, t1), recipe(an, t2), recipe(bn, t2)
        AB, _, _ = direct_sum(A, B)
        lhs = external_tensor(V, AB)
        rhs, _, _ = direct_sum(external_tensor(V, A), external_tensor(V, B))
        h = ModuleHom(lhs, rhs, {U: _sum_shuffle(V.dims[U[:1]], A.dims[U[1:]], B.dims[U[1:]]) for U in lhs.cat.objects})
        rep.check(
            f"{vn}⊠({an}+{bn}) = {vn}⊠{an} + {vn}⊠{bn}",
            lhs.dims == rhs.dims and h.is_valid() and iso_check(h),
            dims=lhs.dim_vector(),
        )
    return rep


def _sum_shuffle(dv: int, da: int, db: int) -> la.Matrix:
    """Basis map ``V ⊗ (A ⊕ B) -> (V ⊗ A) ⊕ (V ⊗ B)``."""
    n = dv * (da + db)
    M = la.zeros(n, n)
    for p in range(dv):
        for q in range(da + db):
            src = p * (da + db) + q
            dst = p * da + q if q < da else dv * da + p * db + (q - da)
            M[dst, src] = 1
    return M


def suite_kron_algebra(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    ts = [tuple(cfg.t)] if cfg.t else [(2,), (1, 1), (2, 1), (2, 2)]
    for t in ts:
        rep.check(f"t={_tstr(t)}", algebra_kronecker_check(t), dim=build_category(t).algebra().dim)
    return rep


INJ_BOUNDED = [("I(1)", (1,)), ("conc(1)", (1,)), ("conc(0)", (0,)), ("nu M(1)", (1,)), ("nu M(2)", (2,))]


def _bounded(name: str, u: tuple) -> FunctorModule:
    if name.startswith("nu "):
        S = parse_t(name[5:].rstrip(")"))
        return pullback(nakayama(free_module(S, u)), u)
    return recipe(name, u)


def suite_injectivity(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    t = tuple(cfg.t) if cfg.t else (2,)
    if len(t) == 1 and t[0] >= 1:
        E = recipe("M(1)", t)
        e = ext1(recipe("conc(1)", t), E).dim
        verdict = is_injective_trunc(E)
        if t == (2,):
            rep.check("truncated M(1) ext1 from conc(1) nonzero", e != 0, ext1=e)
            rep.check("truncated M(1) not injective", verdict is False, verdict=verdict)
        else:
            rep.add("truncated M(1) verdict", "RECORDED", ext1=e, verdict=verdict)
    top = cfg.t_range[-1][0] if cfg.t_range else 4
    for n in range(0, top + 1):
        DA = coregular_module((n,))
        rep.check(f"coregular t=({n}) injective", is_injective_trunc(DA))
    for name, u in INJ_BOUNDED:
        E0 = _bounded(name, u)
        verdicts = {}
        for n in range(u[0], top + 1):
            verdicts[n] = is_injective_trunc(pushforward(E0, (n,)))
        same = len(set(verdicts.values())) == 1
        rep.check(f"bounded {name} same verdict for t={u[0]}..{top}", same, verdicts=verdicts)
    return rep


STAB_1 = (["conc(0)", "conc(1)"], ["M(0)", "M(1)", "M(2)"])
STAB_2 = (["conc(0,0)", "conc(1,0)", "conc(1,1)"], ["M(0,0)", "M(1,0)", "M(0,1)", "M(1,1)"])


def suite_ext_stability(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    if cfg.t_range:
        ranges = [cfg.t_range]
    elif cfg.m == 1:
        ranges = [[(n,) for n in range(2, 6)]]
    elif cfg.m == 2:
        ranges = [[(n, n) for n in range(2, 5)]]
    else:
        ranges = [[(n,) for n in range(2, 6)], [(n, n) for n in range(2, 5)]]
    for tr in ranges:
        vs, ws = STAB_1 if len(tr[0]) == 1 else STAB_2
        for vn in vs:
            for wn in ws:
                r = ext_stabilization(lambda t: recipe(vn, t), lambda t: recipe(wn, t), tr)
                table = {_tstr(t): d for t, d in r["table"]}
                rep.check(
                    f"V={vn} W={wn} t={_tstr(tr[0])}..{_tstr(tr[-1])}",
                    r["stable"] and r["value"] == 0,
                    table=table,
                    stable=r["stable"],
                )
    return rep


def suite_tensor_injective(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    n = cfg.t[0] if cfg.t else 2
    E = external_tensor(coregular_module((n,)), coregular_module((n,)))
    rep.check(f"DA({n})⊠DA({n}) injective over t=({n},{n})", is_injective_trunc(E), dims=E.dim_vector())
    for t in [(1, 1), (2, 1), (2, 2)]:
        rep.check(f"kronecker table t={_tstr(t)}", algebra_kronecker_check(t))
    return rep


NU_CORPUS_1 = ["conc(0)", "conc(1)", "sign(2)", "M(0)", "M(1)", "M(2)", "M(0)+conc(0)", "M(1)+conc(1)"]
NU_CORPUS_2 = ["conc(1,0)", "conc(1,1)", "M(0,0)", "M(1,1)", "M(1)⊠conc(0)", "M(1)⊠M(0)", "M(0,1)+conc(0,0)"]


def corpus_module(name: str, t) -> FunctorModule:
    """Recipes joined by ``+`` (direct sum) or ``⊠`` (external tensor of FI-modules)."""
    if "+" in name:
        parts = [corpus_module(p, t) for p in name.split("+")]
        return direct_sum(*parts)[0]
    if "⊠" in name:
        parts = name.split("⊠")
        return external_tensor(*(recipe(p, (x,)) for p, x in zip(parts, t)))
    return recipe(name, t)


def suite_nakayama_kernel(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    for t, _ in _envelopes(cfg, [((3,), None), ((2, 2), None)]):
        corpus = NU_CORPUS_1 if len(t) == 1 else NU_CORPUS_2
        for name in corpus:
            V = corpus_module(name, t)
            r = kernel_nu_check(V)
            rep.check(f"t={_tstr(t)} V={name}", r["agree"], **r)
    return rep


def suite_nakayama_dims(cfg: SuiteConfig) -> Report:
    rep = Report(cfg.suite, cfg.echo())
    for t, _ in _envelopes(cfg, [((3,), None), ((2, 2), None)]):
        cat = build_category(t)
        for S in cat.objects:
            nu = nakayama(free_module(S, t))
            want = [count_mor(T, S) for T in cat.objects]
            rep.check(
                f"t={_tstr(t)} nu M{_tstr(S)}",
                nu.dim_vector() == want and not validate(nu),
                dims=nu.dim_vector(),
                golden=want,
            )
        if len(t) == 1 and t[0] >= 2:
            S = (1,)
            F = free_module(S, t)
            back = inverse_nakayama(nakayama(F))
            low = [U for U in cat.objects if leq(U, S)]
            agree = all(back.dims[U] == F.dims[U] for U in low)
            rep.check(
                f"t={_tstr(t)} nu^-1 nu M(1) agrees on S <= (1)",
                agree,
                dims=back.dim_vector(),
                free_dims=F.dim_vector(),
            )
            rep.add(
                f"t={_tstr(t)} nu^-1 nu M(1) full comparison",
                "RECORDED",
                dims_equal=back.dims == F.dims,
                iso="true" if back.dims == F.dims and iso_search(back, F, 16, cfg.seed) is not None else "unknown",
            )
    return rep


SUITES = {
    "shift-decomp": suite_shift_decomp,
    "coind-free": suite_coind_free,
    "bar-formula": suite_bar_formula,
    "theta": suite_theta,
    "adjunction": suite_adjunction,
    "tensor-sum": suite_tensor_sum,
    "kron-algebra": suite_kron_algebra,
    "injectivity": suite_injectivity,
    "ext-stability": suite_ext_stability,
    "tensor-injective": suite_tensor_injective,
    "nakayama-kernel": suite_nakayama_kernel,
    "nakayama-dims": suite_nakayama_dims,
}


def run_suite(cfg: SuiteConfig) -> Report:
    if cfg.suite == "all":
        rep = Report("all", cfg.echo())
        for name, fn in SUITES.items():
            sub = SuiteConfig(name, cfg.m, cfg.t, cfg.t_range, cfg.max_n, cfg.seed)
            rep.extend(fn(sub), prefix=f"{name}: ")
        return rep
    fn = SUITES.get(cfg.suite)
    if fn is None:
        raise UsageError(f"unknown suite {cfg.suite!r}; known: {', '.join(SUITES)}, all")
    return fn(cfg)
