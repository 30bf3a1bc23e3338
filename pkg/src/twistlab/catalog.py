"""Named curve/relation data and the verification harness.

A catalog is a JSON document with two top-level keys::

    {"curves": {<name>: <spec>}, "relations": [<entry>, ...]}

Curve and arc specs follow :func:`twistlab.twist_compiler.spec_from_json`.
A relation entry is::

    {"name": ..., "ambient": {"group": "braid", "strands": n}
                           | {"group": "free", "rank": k},
     "lhs": <expression>, "rhs": <expression>,
     "source": <free-text note>, "tags": [...], "constraints": [...]}

Expressions are trees whose leaves name catalogued curves:

``{"twist": name}``
    full Dehn twist about a curve (braid ambient);
``{"half": name}``
    half twist about an arc (braid ambient);
``{"bh": name}``
    twist about the symmetric curve lying above an odd circle in the
    branched double cover — the square of the disk twist (braid ambient);
``{"letters": [...]}``
    literal chronological braid letters (braid ambient);
``{"gen": i}`` / ``{"word": "x1 x2^-1"}``
    free-group generator / parsed free word (free ambient);

combined with ``{"inv": e}``, ``{"pow": [e, k]}``, ``{"conj": [e, g]}``
(meaning ``g e g^-1``), ``{"comm": [e, f]}`` and ``{"prod": [e1, ..., ek]}``.

A product transcribes the displayed formula verbatim in the native
convention of its ambient group: braid products are functional composition
(the last listed factor acts first on the disk), free products are path
concatenation (the first listed factor is traversed first).  Either way a
display like ``T_a T_b`` or ``x y`` becomes ``{"prod": [<a>, <b>]}``.

Verification is exact.  ``verify_relation`` compares both sides with the
lamination-backed word oracle and then cross-checks every braid invariant
(exponent sum, permutation, linking matrix, full symbolic Burau matrix);
``verify_constraints`` runs the fixed suite of geometric side conditions;
``verify_all`` merges everything into a :class:`Summary`.  A catalog written
with every generator sign inverted (the mirror convention) is accepted: the
mirror map is an automorphism, so the harness re-verifies under it and
records the convention instead of silently rewriting the data.
"""

from __future__ import annotations

import csv
import json
import os
import random
import time
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import braids, free_group
from .braids import BraidWord
from .burau import burau_reduced, is_torelli_shadow
from .free_group import FreeWord, parse_free_word, format_free_word
from .lamination import LoopCoordinates, apply_braid, curves_equal, norm, round_curve
from .twist_compiler import (
    ArcSpec,
    CurveSpec,
    bh_twist_image,
    dehn_twist,
    half_twist,
    push_loop,
    realize,
    spec_from_json,
)

__all__ = [
    "Ambient",
    "CatalogError",
    "Check",
    "RelationEntry",
    "Report",
    "Summary",
    "catalog_from_json",
    "catalog_to_json",
    "compile_expression",
    "default_catalog_path",
    "dumps_catalog",
    "load_catalog",
    "load_default_catalog",
    "mirror_catalog",
    "save_catalog",
    "verify_all",
    "verify_constraints",
    "verify_relation",
    "write_reports",
]

ENV_CATALOG = "TWISTLAB_CATALOG"

KNOWN_TAGS = frozenset({"SI-element", "pure", "uses-push", "uses-halftwist"})

Spec = CurveSpec | ArcSpec
Curves = dict[str, Spec]


class CatalogError(ValueError):
    """Schema violation, dangling curve name, or malformed expression."""


# -- data model ------------------------------------------------------------


@dataclass(frozen=True)
class Ambient:
    """The group a relation lives in: a braid group B_n or a free group F_k."""

    group: str
    size: int

    def __post_init__(self) -> None:
        if self.group not in ("braid", "free"):
            raise CatalogError(f"unknown ambient group {self.group!r}")
        floor = 2 if self.group == "braid" else 1
        if not isinstance(self.size, int) or self.size < floor:
            raise CatalogError(f"bad ambient size {self.size!r} for {self.group}")

    @classmethod
    def from_json(cls, data: object) -> "Ambient":
        if not isinstance(data, Mapping) or "group" not in data:
            raise CatalogError(f"ambient must be an object with a group: {data!r}")
        group = data["group"]
        key = "strands" if group == "braid" else "rank"
        extra = set(data) - {"group", key}
        if extra or key not in data:
            raise CatalogError(f"ambient for {group!r} needs exactly {key!r}: {data!r}")
        return cls(group, data[key])

    def to_json(self) -> dict:
        key = "strands" if self.group == "braid" else "rank"
        return {"group": self.group, key: self.size}

    def describe(self) -> str:
        return ("B%d" if self.group == "braid" else "F%d") % self.size


@dataclass(frozen=True)
class RelationEntry:
    """One named identity: two expressions claimed equal in an ambient group."""

    name: str
    ambient: Ambient
    lhs: dict
    rhs: dict
    source: str = ""
    tags: tuple[str, ...] = ()
    constraints: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.name or not isinstance(self.name, str):
            raise CatalogError(f"relation name must be a nonempty string: {self.name!r}")
        unknown = set(self.tags) - KNOWN_TAGS
        if unknown:
            raise CatalogError(f"{self.name}: unknown tags {sorted(unknown)}")

    _FIELDS = ("name", "ambient", "lhs", "rhs", "source", "tags", "constraints")

    @classmethod
    def from_json(cls, data: object) -> "RelationEntry":
        if not isinstance(data, Mapping):
            raise CatalogError(f"relation entry must be an object: {data!r}")
        extra = set(data) - set(cls._FIELDS)
        if extra:
            raise CatalogError(f"relation entry has unknown fields {sorted(extra)}")
        missing = {"name", "ambient", "lhs", "rhs"} - set(data)
        if missing:
            raise CatalogError(f"relation entry missing fields {sorted(missing)}")
        return cls(
            name=data["name"],
            ambient=Ambient.from_json(data["ambient"]),
            lhs=dict(data["lhs"]),
            rhs=dict(data["rhs"]),
            source=data.get("source", ""),
            tags=tuple(data.get("tags", ())),
            constraints=tuple(data.get("constraints", ())),
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ambient": self.ambient.to_json(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "source": self.source,
            "tags": list(self.tags),
            "constraints": list(self.constraints),
        }


# -- expression compiler ---------------------------------------------------


def _node(expr: object, where: str) -> tuple[str, object]:
    if not isinstance(expr, Mapping) or len(expr) != 1:
        raise CatalogError(f"{where}: expression node must have exactly one key: {expr!r}")
    return next(iter(expr.items()))


def _leaf_spec(curves: Curves, name: object, where: str) -> Spec:
    if not isinstance(name, str):
        raise CatalogError(f"{where}: curve reference must be a name: {name!r}")
    try:
        return curves[name]
    except KeyError:
        raise CatalogError(f"{where}: dangling curve name {name!r}") from None


def compile_expression(
    expr: dict, curves: Curves, ambient: Ambient, where: str = "expression"
) -> BraidWord | FreeWord:
    """Evaluate an expression tree to a braid word or a reduced free word."""
    if ambient.group == "braid":
        return _compile_braid(expr, curves, ambient.size, where)
    return _compile_free(expr, ambient.size, where)


def _compile_braid(expr: object, curves: Curves, strands: int, where: str) -> BraidWord:
    key, val = _node(expr, where)
    rec = lambda sub: _compile_braid(sub, curves, strands, where)
    if key in ("twist", "half", "bh"):
        spec = _leaf_spec(curves, val, where)
        if spec.punctures != strands:
            raise CatalogError(
                f"{where}: curve {val!r} lives on {spec.punctures} strands, "
                f"ambient has {strands}"
            )
        if key == "twist":
            if not isinstance(spec, CurveSpec):
                raise CatalogError(f"{where}: 'twist' needs a curve, {val!r} is an arc")
            return dehn_twist(spec)
        if key == "half":
            if not isinstance(spec, ArcSpec):
                raise CatalogError(f"{where}: 'half' needs an arc, {val!r} is a curve")
            return half_twist(spec)
        if not isinstance(spec, CurveSpec):
            raise CatalogError(f"{where}: 'bh' needs a curve, {val!r} is an arc")
        if spec.enclosed % 2 == 0 or spec.enclosed < 3:
            raise CatalogError(
                f"{where}: 'bh' needs odd enclosure >= 3, "
                f"{val!r} encloses {spec.enclosed}"
            )
        return bh_twist_image(spec)
    if key == "letters":
        if not isinstance(val, Sequence) or not all(
            isinstance(x, int) and x != 0 and abs(x) < strands for x in val
        ):
            raise CatalogError(f"{where}: bad literal letters {val!r} on {strands} strands")
        return BraidWord(strands, tuple(val))
    if key == "inv":
        return braids.inverse(rec(val))
    if key == "pow":
        sub, k = _pair(val, where, "pow")
        if not isinstance(k, int):
            raise CatalogError(f"{where}: pow exponent must be an integer: {k!r}")
        return braids.power(rec(sub), k)
    if key == "conj":
        a, g = _pair(val, where, "conj")
        return braids.conjugate(rec(a), rec(g))
    if key == "comm":
        a, b = _pair(val, where, "comm")
        return braids.commutator(rec(a), rec(b))
    if key == "prod":
        return _fold(val, rec, braids.compose, BraidWord.identity(strands), where)
    raise CatalogError(f"{where}: unknown braid expression node {key!r}")


def _compile_free(expr: object, rank: int, where: str) -> FreeWord:
    key, val = _node(expr, where)
    rec = lambda sub: _compile_free(sub, rank, where)
    if key == "gen":
        if not isinstance(val, int) or not (1 <= val <= rank):
            raise CatalogError(f"{where}: generator index {val!r} out of range 1..{rank}")
        return FreeWord(rank, (val,))
    if key == "word":
        if not isinstance(val, str):
            raise CatalogError(f"{where}: free word literal must be a string: {val!r}")
        try:
            return parse_free_word(val, rank)
        except ValueError as exc:
            raise CatalogError(f"{where}: {exc}") from exc
    if key == "inv":
        return free_group.inverse(rec(val))
    if key == "pow":
        sub, k = _pair(val, where, "pow")
        if not isinstance(k, int):
            raise CatalogError(f"{where}: pow exponent must be an integer: {k!r}")
        return free_group.power(rec(sub), k)
    if key == "conj":
        a, g = _pair(val, where, "conj")
        return free_group.conjugate(rec(a), rec(g))
    if key == "comm":
        a, b = _pair(val, where, "comm")
        return free_group.commutator(rec(a), rec(b))
    if key == "prod":
        return _fold(val, rec, free_group.multiply, FreeWord.identity(rank), where)
    raise CatalogError(f"{where}: unknown free expression node {key!r}")


def _pair(val: object, where: str, what: str) -> tuple:
    if not isinstance(val, Sequence) or len(val) != 2:
        raise CatalogError(f"{where}: {what} takes exactly two arguments: {val!r}")
    return val[0], val[1]


def _fold(val, rec, op, identity, where):
    if not isinstance(val, Sequence) or isinstance(val, (str, bytes)):
        raise CatalogError(f"{where}: prod takes a list of factors: {val!r}")
    out = identity
    for sub in val:
        out = op(out, rec(sub))
    return out


def _validate_entry(entry: RelationEntry, curves: Curves) -> None:
    """Static well-formedness check: compiles both sides once."""
    for side, expr in (("lhs", entry.lhs), ("rhs", entry.rhs)):
        compile_expression(expr, curves, entry.ambient, f"{entry.name}.{side}")


# -- load / save -----------------------------------------------------------


def catalog_from_json(data: object) -> tuple[Curves, list[RelationEntry]]:
    """Parse and validate a catalog document already loaded from JSON."""
    if not isinstance(data, Mapping):
        raise CatalogError("catalog must be a JSON object")
    extra = set(data) - {"curves", "relations"}
    if extra:
        raise CatalogError(f"catalog has unknown top-level keys {sorted(extra)}")
    raw_curves = data.get("curves", {})
    raw_relations = data.get("relations", [])
    if not isinstance(raw_curves, Mapping):
        raise CatalogError("'curves' must map names to specs")
    if not isinstance(raw_relations, Sequence) or isinstance(raw_relations, (str, bytes)):
        raise CatalogError("'relations' must be a list of entries")

    curves: Curves = {}
    for name, spec_json in raw_curves.items():
        if not name or not isinstance(name, str):
            raise CatalogError(f"curve name must be a nonempty string: {name!r}")
        try:
            curves[name] = spec_from_json(spec_json)
        except (ValueError, KeyError, TypeError) as exc:
            raise CatalogError(f"curve {name!r}: {exc}") from exc

    relations: list[RelationEntry] = []
    seen: set[str] = set()
    for raw in raw_relations:
        entry = RelationEntry.from_json(raw)
        if entry.name in seen:
            raise CatalogError(f"duplicate relation name {entry.name!r}")
        seen.add(entry.name)
        _validate_entry(entry, curves)
        relations.append(entry)
    return curves, relations


def catalog_to_json(curves: Curves, relations: Iterable[RelationEntry]) -> dict:
    return {
        "curves": {name: curves[name].to_json() for name in sorted(curves)},
        "relations": [entry.to_json() for entry in relations],
    }


def dumps_catalog(curves: Curves, relations: Iterable[RelationEntry]) -> str:
    """Serialize with one curve/entry per line (diff-friendly, stable order)."""
    lines = ["{", ' "curves": {']
    names = sorted(curves)
    for i, name in enumerate(names):
        comma = "," if i + 1 < len(names) else ""
        lines.append(
            f"  {json.dumps(name)}: "
            f"{json.dumps(curves[name].to_json(), separators=(',', ':'))}{comma}"
        )
    lines.append(" },")
    lines.append(' "relations": [')
    entries = list(relations)
    for i, entry in enumerate(entries):
        comma = "," if i + 1 < len(entries) else ""
        lines.append(f"  {json.dumps(entry.to_json(), separators=(',', ':'))}{comma}")
    lines.append(" ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_catalog(path: str | Path) -> tuple[Curves, list[RelationEntry]]:
    """Read, parse, and validate a catalog file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {path} is not valid JSON: {exc}") from exc
    return catalog_from_json(data)


def save_catalog(
    path: str | Path, curves: Curves, relations: Iterable[RelationEntry]
) -> None:
    Path(path).write_text(dumps_catalog(curves, relations))


def default_catalog_path() -> Path:
    """The catalog file named by $TWISTLAB_CATALOG, else the packaged data."""
    env = os.environ.get(ENV_CATALOG)
    if env:
        return Path(env)
    return Path(str(resources.files("twistlab") / "data" / "catalog.json"))


def load_default_catalog() -> tuple[Curves, list[RelationEntry]]:
    return load_catalog(default_catalog_path())


# -- mirror convention -----------------------------------------------------


def _mirror_expr(expr: dict, ambient: Ambient) -> dict:
    key, val = next(iter(expr.items()))
    rec = lambda sub: _mirror_expr(sub, ambient)
    if key in ("twist", "half", "bh"):
        return {key: val}
    if key == "letters":
        return {"letters": [-x for x in val]}
    if key == "gen":
        return {"inv": {"gen": val}}
    if key == "word":
        w = parse_free_word(val, ambient.size)
        flipped = FreeWord(w.rank, tuple(-x for x in w.letters))
        return {"word": format_free_word(flipped)}
    if key == "inv":
        # peel rather than stack, so mirroring twice restores the original tree
        if isinstance(val, dict) and set(val) == {"gen"}:
            return {"gen": val["gen"]}
        return {"inv": rec(val)}
    if key == "pow":
        return {"pow": [rec(val[0]), val[1]]}
    if key in ("conj", "comm"):
        return {key: [rec(val[0]), rec(val[1])]}
    if key == "prod":
        return {"prod": [rec(sub) for sub in val]}
    raise CatalogError(f"unknown expression node {key!r}")


def mirror_catalog(
    curves: Curves, relations: Iterable[RelationEntry]
) -> tuple[Curves, list[RelationEntry]]:
    """Invert every stored generator sign (the global mirror of the catalog).

    Applying this to a catalog written in the mirrored convention recovers
    the standard one; applying it twice is the identity on braid data.
    """
    m_curves: Curves = {}
    for name, spec in curves.items():
        cls = type(spec)
        m_curves[name] = cls(spec.punctures, spec.base, tuple(-x for x in spec.prep))
    m_relations = [
        RelationEntry(
            name=e.name,
            ambient=e.ambient,
            lhs=_mirror_expr(e.lhs, e.ambient),
            rhs=_mirror_expr(e.rhs, e.ambient),
            source=e.source,
            tags=e.tags,
            constraints=e.constraints,
        )
        for e in relations
    ]
    return m_curves, m_relations


# -- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    label: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"label": self.label, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class Report:
    """Outcome of one relation, constraint, or sample verification."""

    name: str
    kind: str  # "relation" | "constraint" | "sample"
    checks: tuple[Check, ...]
    seconds: float
    norm_growth: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failed_labels(self) -> list[str]:
        return [c.label for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "ok": self.ok,
            "seconds": round(self.seconds, 6),
            "norm_growth": round(self.norm_growth, 3),
            "checks": [c.to_json() for c in self.checks],
        }


@dataclass(frozen=True)
class Summary:
    """Merged verification outcome for a whole catalog."""

    reports: tuple[Report, ...]
    seconds: float
    convention: str = "standard"
    warnings: tuple[str, ...] = ()

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.ok)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "failed": self.failed,
            "seconds": round(self.seconds, 6),
            "convention": self.convention,
            "warnings": list(self.warnings),
            "reports": [r.to_json() for r in self.reports],
        }


# -- relation verification -------------------------------------------------


def _braid_norm_growth(*words: BraidWord) -> float:
    growth = 1.0
    n = words[0].strands
    probes = [round_curve(n, i, i + 1) for i in range(1, n)]
    for w in words:
        for p in probes:
            growth = max(growth, norm(apply_braid(p, w)) / norm(p))
    return growth


def verify_relation(curves: Curves, entry: RelationEntry) -> Report:
    """Check one entry: side equality plus every applicable invariant."""
    t0 = time.perf_counter()
    lhs = compile_expression(entry.lhs, curves, entry.ambient, f"{entry.name}.lhs")
    rhs = compile_expression(entry.rhs, curves, entry.ambient, f"{entry.name}.rhs")
    checks: list[Check] = []
    if entry.ambient.group == "free":
        checks.append(
            Check(
                "free-reduction-equality",
                free_group.equal(lhs, rhs),
                f"reduced lengths {len(lhs.letters)} / {len(rhs.letters)}",
            )
        )
        for i in range(1, entry.ambient.size + 1):
            el, er = free_group.exponent_sum(lhs, i), free_group.exponent_sum(rhs, i)
            if el or er or not checks[-1].ok:
                checks.append(Check(f"exponent-sum-x{i}", el == er, f"{el} vs {er}"))
        growth = float(max(len(lhs.letters), len(rhs.letters)))
    else:
        checks.append(
            Check(
                "word-action-equality",
                braids.equals(lhs, rhs),
                f"word lengths {len(lhs.letters)} / {len(rhs.letters)}",
            )
        )
        el, er = braids.exponent_sum(lhs), braids.exponent_sum(rhs)
        checks.append(Check("exponent-sum", el == er, f"{el} vs {er}"))
        checks.append(
            Check(
                "permutation",
                braids.underlying_permutation(lhs) == braids.underlying_permutation(rhs),
            )
        )
        checks.append(
            Check("linking-matrix", braids.linking_matrix(lhs) == braids.linking_matrix(rhs))
        )
        checks.append(Check("burau-matrix", burau_reduced(lhs) == burau_reduced(rhs)))
        if "pure" in entry.tags:
            checks.append(
                Check("pure-lhs", braids.is_pure(lhs)),
            )
            checks.append(Check("pure-rhs", braids.is_pure(rhs)))
        if "SI-element" in entry.tags:
            checks.append(Check("torelli-shadow-lhs", is_torelli_shadow(lhs)))
            checks.append(Check("torelli-shadow-rhs", is_torelli_shadow(rhs)))
        growth = _braid_norm_growth(lhs, rhs)
    return Report(
        name=entry.name,
        kind="relation",
        checks=tuple(checks),
        seconds=time.perf_counter() - t0,
        norm_growth=growth,
    )


# -- constraint suite ------------------------------------------------------


def _missing(curves: Curves, *names: str) -> list[str]:
    return [n for n in names if n not in curves]


def _skip(name: str, missing: Iterable[str], t0: float) -> Report:
    detail = "skipped: curves absent: " + ", ".join(sorted(missing))
    return Report(name, "constraint", (Check("skipped", True, detail),), time.perf_counter() - t0)


def _constraint_disjointness(curves: Curves) -> Report:
    """Twists about the chained curves commute: each is disjoint from the next."""
    t0 = time.perf_counter()
    name = "constraint-01-disjointness-chain"
    chain = ("c2", "c1", "c4", "c3", "c6", "c5")
    missing = _missing(curves, *chain)
    if missing:
        return _skip(name, missing, t0)
    checks = []
    for a, b in zip(chain, chain[1:]):
        ta, tb = dehn_twist(curves[a]), dehn_twist(curves[b])
        checks.append(
            Check(
                f"commute-{a}-{b}",
                braids.equals(braids.compose(ta, tb), braids.compose(tb, ta)),
            )
        )
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


_ODD_SHADOWS = (
    ("w", "wp", "c1", "c2", "c3", "c4", "c5", "c6")
    + ("b7.f", "b7.f1", "b7.f2", "b7.f3", "b7.z")
    + ("b5.f", "b5.f1", "b5.f2", "b5.f3", "b5.z", "b5.f_img")
)


def _constraint_odd_enclosures(curves: Curves) -> Report:
    """Shadows of separating curves circle an odd number (3 or 5) of punctures."""
    t0 = time.perf_counter()
    name = "constraint-02-odd-enclosures"
    present = [n for n in _ODD_SHADOWS if n in curves]
    if not present:
        return _skip(name, _ODD_SHADOWS, t0)
    checks = [
        Check(
            f"odd-{n}",
            isinstance(curves[n], CurveSpec) and curves[n].enclosed in (3, 5),
            f"encloses {getattr(curves[n], 'enclosed', '?')}",
        )
        for n in present
    ]
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


def _pb2_image(word: BraidWord) -> int:
    """Linking number of the two remaining strands after forgetting the rest."""
    return braids.linking_matrix(braids.forget_strands(word, (1, 2)))[0][1]


_FORGETFUL_EXPECTED = (("b5.f", 0), ("b5.f1", 0), ("b5.f2", 0), ("b5.f3", 1), ("b5.z", 1))


def _constraint_forgetful(curves: Curves) -> Report:
    """Images of the five-strand twist family in the two-strand pure braid group."""
    t0 = time.perf_counter()
    name = "constraint-03-forgetful-pb2-images"
    missing = _missing(curves, *(n for n, _ in _FORGETFUL_EXPECTED))
    if missing:
        return _skip(name, missing, t0)
    checks = []
    for n, expected in _FORGETFUL_EXPECTED:
        got = _pb2_image(dehn_twist(curves[n]))
        checks.append(Check(f"image-{n}", got == expected, f"{got} (expected {expected})"))
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


def _constraint_curve_equalities(curves: Curves) -> Report:
    """The two conjugators move the twist family the same way.

    M is the inverse half twist about the m-arc; H composes the full twists
    about the curves enclosed by the fourth and third arcs (half twist
    squared), the latter inverted.  Both take f1 and f2 to the same curves,
    and H moves f exactly as its fourth factor alone does.
    """
    t0 = time.perf_counter()
    name = "constraint-04-conjugator-curve-equalities"
    needed = ("b6.f", "b6.f1", "b6.f2", "b6.m_arc", "b6.s3", "b6.s4")
    missing = _missing(curves, *needed)
    if missing:
        return _skip(name, missing, t0)
    m_word = braids.inverse(half_twist(curves["b6.m_arc"]))
    h4 = braids.power(half_twist(curves["b6.s4"]), 2)
    h3 = braids.power(half_twist(curves["b6.s3"]), 2)
    h_word = braids.compose(h4, braids.inverse(h3))
    checks = []
    for n in ("b6.f1", "b6.f2"):
        c = realize(curves[n])
        checks.append(
            Check(f"M-equals-H-on-{n}", curves_equal(apply_braid(c, m_word), apply_braid(c, h_word)))
        )
    f = realize(curves["b6.f"])
    checks.append(Check("H-equals-H4-on-b6.f", curves_equal(apply_braid(f, h_word), apply_braid(f, h4))))
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


def _transport_word(curves: Curves) -> BraidWord:
    """Half twists about the n, m, o arcs in the order n m n o n m (last first)."""
    hn = half_twist(curves["b6.n_arc"])
    hm = half_twist(curves["b6.m_arc"])
    ho = half_twist(curves["b6.o_arc"])
    out = None
    for w in (hn, hm, hn, ho, hn, hm):
        out = w if out is None else braids.compose(out, w)
    return out


def _constraint_transport(curves: Curves) -> Report:
    """The six-half-twist conjugator carries u to v and v' back to u."""
    t0 = time.perf_counter()
    name = "constraint-05-u-to-v-transport"
    needed = ("b6.n_arc", "b6.m_arc", "b6.o_arc", "b6.u", "b6.v", "b6.vp")
    missing = _missing(curves, *needed)
    if missing:
        return _skip(name, missing, t0)
    h = _transport_word(curves)
    checks = [
        Check(
            "h-of-u-is-v",
            curves_equal(apply_braid(realize(curves["b6.u"]), h), realize(curves["b6.v"])),
        ),
        Check(
            "h-of-vp-is-u",
            curves_equal(apply_braid(realize(curves["b6.vp"]), h), realize(curves["b6.u"])),
        ),
    ]
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


def _constraint_sextuple(curves: Curves) -> Report:
    """The seven-twist conjugator carries the first six-curve family to the second."""
    t0 = time.perf_counter()
    name = "constraint-06-sextuple-transport"
    family = ("a", "b", "c", "d", "e", "f")
    needed = tuple(f"b5.{x}" for x in family) + tuple(f"b5.{x}_img" for x in family)
    missing = _missing(curves, *needed)
    if missing:
        return _skip(name, missing, t0)
    ta, tb, tc = (dehn_twist(curves[f"b5.{x}"]) for x in ("a", "b", "c"))
    h = None
    for w in (tc, ta, tb, tc, ta, tb, tc):
        h = w if h is None else braids.compose(h, w)
    checks = [
        Check(
            f"h-of-b5.{x}",
            curves_equal(
                apply_braid(realize(curves[f"b5.{x}"]), h), realize(curves[f"b5.{x}_img"])
            ),
        )
        for x in family
    ]
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


def _push6(text: str) -> BraidWord:
    return push_loop(5, parse_free_word(text, 5))


def _constraint_push_twists(curves: Curves) -> Report:
    """Point pushes along the listed loops equal the listed twist words."""
    t0 = time.perf_counter()
    name = "constraint-07-push-twist-correspondences"
    needed = tuple(f"b6.c{i}" for i in range(1, 7))
    missing = _missing(curves, *needed)
    if missing:
        return _skip(name, missing, t0)
    tc = {i: dehn_twist(curves[f"b6.c{i}"]) for i in range(1, 7)}
    cases = (
        ("x1^-1 x2^-1 x4 x3 x2 x1^2", braids.compose(tc[5], braids.inverse(tc[6])), "c5-c6inv"),
        ("x1^-1", tc[3], "c3"),
        ("x2^-1 x3^-1 x4^-1", braids.compose(tc[1], braids.inverse(tc[4])), "c1-c4inv"),
        ("x4 x3 x2 x3^-1 x4^-1", braids.inverse(tc[2]), "c2inv"),
    )
    checks = [
        Check(f"push-{label}", braids.equals(_push6(text), rhs)) for text, rhs, label in cases
    ]
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


def _aux_sides(curves: Curves, k: int) -> tuple[BraidWord, BraidWord]:
    """Both sides of the five-strand relation with the last exponent set to 2k."""
    t = {x: dehn_twist(curves[f"b5.{x}"]) for x in ("a", "b", "c", "d", "e")}
    lhs = braids.compose(
        braids.commutator(
            braids.compose(t["b"], braids.inverse(t["d"])),
            braids.compose(t["a"], braids.inverse(t["c"])),
        ),
        braids.power(t["e"], 4),
    )
    sq = {x: braids.power(dehn_twist(curves[f"b5.{x}"]), 2) for x in ("f", "f1", "f2", "f3")}
    rhs = None
    for w in (sq["f1"], sq["f2"], sq["f"], sq["f3"]):
        rhs = w if rhs is None else braids.compose(rhs, w)
    rhs = braids.compose(rhs, braids.power(dehn_twist(curves["b5.z"]), 2 * k))
    return lhs, rhs


def _constraint_k_sweep(curves: Curves) -> Report:
    """Only exponent -2 on the final twist closes the five-strand relation.

    For each k in -3..3 the candidate right side ends in the 2k-th twist
    power; the relation holds exactly at k = -1, and forgetting all but the
    first two strands sends the candidate to 2 + 2k while the left side
    forgets to 0.
    """
    t0 = time.perf_counter()
    name = "constraint-08-k-sweep-uniqueness"
    needed = tuple(f"b5.{x}" for x in ("a", "b", "c", "d", "e", "f", "f1", "f2", "f3", "z"))
    missing = _missing(curves, *needed)
    if missing:
        return _skip(name, missing, t0)
    checks = []
    for k in range(-3, 4):
        lhs, rhs = _aux_sides(curves, k)
        holds = braids.equals(lhs, rhs)
        checks.append(
            Check(f"k={k}-relation", holds == (k == -1), "holds" if holds else "fails")
        )
        image = _pb2_image(rhs)
        checks.append(
            Check(f"k={k}-forgetful", image == 2 + 2 * k, f"{image} (expected {2 + 2 * k})")
        )
    lhs, _ = _aux_sides(curves, -1)
    checks.append(Check("lhs-forgetful-zero", _pb2_image(lhs) == 0))
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


def _constraint_push_pairs(curves: Curves) -> Report:
    """Pushes along the two-generator loops match their twist-pair words."""
    t0 = time.perf_counter()
    name = "constraint-09-push-pair-correspondences"
    needed = ("b6.u", "b6.vp", "b6.m", "b6.o")
    missing = _missing(curves, *needed)
    if missing:
        return _skip(name, missing, t0)
    tu = dehn_twist(curves["b6.u"])
    tvp = dehn_twist(curves["b6.vp"])
    tm = dehn_twist(curves["b6.m"])
    to = dehn_twist(curves["b6.o"])
    checks = [
        Check(
            "push-x4x3",
            braids.equals(_push6("x4 x3"), braids.compose(braids.inverse(tvp), tm)),
        ),
        Check(
            "push-x2x1",
            braids.equals(_push6("x2 x1"), braids.compose(braids.inverse(tu), to)),
        ),
    ]
    return Report(name, "constraint", tuple(checks), time.perf_counter() - t0)


_CONSTRAINTS = (
    _constraint_disjointness,
    _constraint_odd_enclosures,
    _constraint_forgetful,
    _constraint_curve_equalities,
    _constraint_transport,
    _constraint_sextuple,
    _constraint_push_twists,
    _constraint_k_sweep,
    _constraint_push_pairs,
)


def verify_constraints(
    curves: Curves, relations: Iterable[RelationEntry] = ()
) -> list[Report]:
    """Run the fixed suite of geometric side conditions against the curves."""
    return [fn(curves) for fn in _CONSTRAINTS]


# -- whole-catalog verification --------------------------------------------


def _naturality_sample(curves: Curves, seed: int) -> Report:
    """Conjugating a twist matches twisting the transported curve (seeded)."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    names = sorted(curves)
    picked = names if len(names) <= 6 else rng.sample(names, 6)
    checks = []
    for name in sorted(picked):
        spec = curves[name]
        n = spec.punctures
        g_letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 16))
        )
        g = BraidWord(n, g_letters)
        moved = type(spec)(n, spec.base, spec.prep + g.letters)
        if isinstance(spec, CurveSpec):
            before, after = dehn_twist(spec), dehn_twist(moved)
        else:
            before, after = half_twist(spec), half_twist(moved)
        checks.append(
            Check(f"naturality-{name}", braids.equals(braids.conjugate(before, g), after))
        )
    if not checks:
        checks.append(Check("skipped", True, "no curves to sample"))
    return Report(
        f"naturality-sample(seed={seed})",
        "sample",
        tuple(checks),
        time.perf_counter() - t0,
    )


def _run_suite(
    curves: Curves, relations: Sequence[RelationEntry], jobs: int, seed: int
) -> list[Report]:
    ordered = sorted(relations, key=lambda e: e.name)
    if jobs > 1 and len(ordered) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda e: verify_relation(curves, e), ordered))
    else:
        reports = [verify_relation(curves, e) for e in ordered]
    reports.extend(verify_constraints(curves, relations))
    reports.append(_naturality_sample(curves, seed))
    return reports


def verify_all(
    curves: Curves,
    relations: Sequence[RelationEntry],
    *,
    jobs: int = 1,
    seed: int = 0,
) -> Summary:
    """Verify every entry and constraint; accept a globally mirrored catalog.

    If the standard reading fails but inverting every stored generator sign
    makes the whole catalog pass, the summary reports success with
    ``convention="mirrored"`` and a warning, leaving the data untouched.
    """
    t0 = time.perf_counter()
    warnings: list[str] = []
    reports = _run_suite(curves, relations, jobs, seed)
    convention = "standard"
    if not curves and not relations:
        warnings.append("empty catalog: nothing to verify (vacuous pass)")
    if any(not r.ok for r in reports):
        m_curves, m_relations = mirror_catalog(curves, relations)
        m_reports = _run_suite(m_curves, m_relations, jobs, seed)
        if all(r.ok for r in m_reports):
            reports = m_reports
            convention = "mirrored"
            warnings.append(
                "catalog letters follow the mirrored convention (every generator "
                "inverted); verified under the mirror automorphism"
            )
    return Summary(
        reports=tuple(reports),
        seconds=time.perf_counter() - t0,
        convention=convention,
        warnings=tuple(warnings),
    )


# -- report artifacts ------------------------------------------------------


def write_reports(summary: Summary, directory: str | Path) -> dict[str, Path]:
    """Write report.json, report.csv, and a report.png summary chart."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": directory / "report.json",
        "csv": directory / "report.csv",
        "png": directory / "report.png",
    }
    paths["json"].write_text(json.dumps(summary.to_json(), indent=2, sort_keys=True) + "\n")

    with paths["csv"].open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "kind", "ok", "seconds", "norm_growth", "failed_checks"])
        for r in summary.reports:
            writer.writerow(
                [
                    r.name,
                    r.kind,
                    "pass" if r.ok else "fail",
                    f"{r.seconds:.6f}",
                    f"{r.norm_growth:.3f}",
                    ";".join(r.failed_labels()),
                ]
            )

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r.name for r in summary.reports]
    seconds = [r.seconds for r in summary.reports]
    colors = ["#2a9d3a" if r.ok else "#d62728" for r in summary.reports]
    height = max(2.5, 0.32 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    ax.barh(range(len(names)), seconds, color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("verification time (s)")
    ax.set_title(
        f"catalog verification: {summary.passed} passed, {summary.failed} failed "
        f"({summary.seconds:.1f}s, {summary.convention} convention)"
    )
    fig.tight_layout()
    fig.savefig(paths["png"], dpi=120)
    plt.close(fig)
    return paths
