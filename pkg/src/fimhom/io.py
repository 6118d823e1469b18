"""Module files: UTF-8 JSON with canonical object order and lowest-terms rationals.

In a generator record ``coord`` is 0-based and ``pos`` (transpositions only)
is the 1-based position swapped with ``pos + 1``.
"""

from __future__ import annotations

import json
import os
import tempfile

from . import linalg as la
from .category import build_category, check_truncation
from .combinatorics import Generator
from .errors import FormatError, InvariantError, UsageError
from .modules import FunctorModule, validate


def gen_record(g: Generator) -> dict:
    out = {"kind": g.kind, "obj": list(g.obj), "coord": g.coord}
    if g.kind == "transposition":
        out["pos"] = g.pos
    return out


def module_to_dict(V: FunctorModule) -> dict:
    return {
        "m": V.m,
        "t": list(V.t),
        "dims": [{"obj": list(S), "dim": V.dims[S]} for S in V.cat.objects],
        "actions": [
            {"gen": gen_record(g), "matrix": [[la.rat_str(x) for x in row] for row in la.to_rows(V.gen(g))]}
            for g in V.cat.generators()
        ],
    }


def dumps_module(V: FunctorModule) -> str:
    return json.dumps(module_to_dict(V), indent=1, ensure_ascii=False) + "\n"


def _field(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    return obj[key]


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    return x


def module_from_dict(data: dict) -> FunctorModule:
    m = _int(_field(data, "m", "module"), "m")
    t_raw = _field(data, "t", "module")
    if not isinstance(t_raw, list):
        raise FormatError("t: expected a list of integers")
    try:
        t = check_truncation([_int(x, "t") for x in t_raw])
    except UsageError as exc:
        raise FormatError(f"t: {exc}") from None
    if len(t) != m:
        raise FormatError(f"t has {len(t)} entries but m = {m}")
    cat = build_category(t)

    dims_raw = _field(data, "dims", "module")
    if not isinstance(dims_raw, list) or len(dims_raw) != len(cat.objects):
        raise FormatError(f"dims: expected {len(cat.objects)} entries, one per object")
    dims = {}
    for k, (rec, S) in enumerate(zip(dims_raw, cat.objects)):
        where = f"dims[{k}]"
        obj = tuple(_field(rec, "obj", where))
        if obj != S:
            raise FormatError(f"{where}: object {list(obj)} out of canonical order, expected {list(S)}")
        d = _int(_field(rec, "dim", where), where)
        if d < 0:
            raise FormatError(f"{where}: negative dimension")
        dims[S] = d

    gens = cat.generators()
    acts_raw = _field(data, "actions", "module")
    if not isinstance(acts_raw, list) or len(acts_raw) != len(gens):
        raise FormatError(f"actions: expected {len(gens)} entries, one per generator")
    actions = {}
    for k, (rec, g) in enumerate(zip(acts_raw, gens)):
        where = f"actions[{k}]"
        grec = _field(rec, "gen", where)
        if grec != gen_record(g):
            raise FormatError(f"{where}: generator {grec!r} out of canonical order, expected {gen_record(g)!r}")
        rows = _field(rec, "matrix", where)
        want_r, want_c = dims[g.target], dims[g.source]
        if not isinstance(rows, list) or len(rows) != want_r or any(
            not isinstance(r, list) or len(r) != want_c for r in rows
        ):
            raise FormatError(f"{where}: matrix shape differs from {want_r}x{want_c} for {g}")
        try:
            vals = [[la.parse_rat(x, strict=True) if isinstance(x, str) else _bad_entry(x) for x in r] for r in rows]
        except UsageError as exc:
            raise FormatError(f"{where}: {exc}") from None
        actions[g] = la.from_rows(vals, want_c) if want_r else la.zeros(0, want_c)
    return FunctorModule(t, dims, actions)


def _bad_entry(x):
    raise UsageError(f"matrix entries must be strings \"p/q\", got {x!r}")


def loads_module(text: str, check: bool = True) -> FunctorModule:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    V = module_from_dict(data)
    if check:
        problems = validate(V)
        if problems:
            raise InvariantError("module is not a functor:\n  " + "\n  ".join(problems))
    return V


def load_module(path, check: bool = True) -> FunctorModule:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads_module(text, check)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def atomic_write(path, text: str) -> None:
    """Write via a temporary file in the same directory and rename."""
    path = os.fspath(path)
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_module(V: FunctorModule, path) -> None:
    atomic_write(path, dumps_module(V))
