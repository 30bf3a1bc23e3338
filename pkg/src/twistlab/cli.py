"""Command-line front end.

Subcommands
-----------

``verify``
    Check catalog relations (the whole catalog by default, or named
    entries) and optionally write ``report.json`` / ``report.csv`` /
    ``report.png`` to a directory.
``apply``
    Act on a curve by a braid word and print the image coordinates.
``burau``
    Print the reduced Burau matrix of a braid word, symbolically or
    evaluated at a rational parameter.
``forget``
    Delete strands from a pure braid and print the quotient word.
``compile``
    Print the braid word realizing the twist attached to a catalog
    curve or arc.
``catalog``
    List the catalog contents.

Exit status: 0 on success, 1 when a verification check fails, 2 on
usage, parse, or catalog-loading errors.
"""
from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from pathlib import Path

import click

from .braids import forget_strands, format_word, parse_word
from .braids import to_json as braid_to_json
from .burau import burau_reduced, burau_reduced_at, format_matrix, matrix_to_json
from .catalog import (
    ENV_CATALOG,
    CatalogError,
    Summary,
    load_catalog,
    load_default_catalog,
    verify_all,
    verify_relation,
    write_reports,
)
from .lamination import apply_braid
from .lamination import norm as loop_norm
from .lamination import to_json as loop_to_json
from .twist_compiler import (
    ArcSpec,
    CurveSpec,
    bh_twist_image,
    dehn_twist,
    half_twist,
    realize,
)


def _fail(message: str) -> None:
    """Report a usage/parse/load problem and exit with status 2."""
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _emit_json(data: object) -> None:
    click.echo(json.dumps(data, indent=2, sort_keys=True))


@click.group()
@click.option(
    "--catalog",
    "catalog_path",
    type=click.Path(dir_okay=False, path_type=Path),
    envvar=ENV_CATALOG,
    default=None,
    help=f"Catalog JSON file (defaults to the packaged one; env {ENV_CATALOG}).",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output format.",
)
@click.pass_context
def main(ctx: click.Context, catalog_path: Path | None, fmt: str) -> None:
    """Exact braid-word calculator over a curve-and-relation catalog."""
    ctx.obj = {"catalog_path": catalog_path, "fmt": fmt, "catalog": None}


def _get_catalog(ctx: click.Context):
    if ctx.obj["catalog"] is None:
        path = ctx.obj["catalog_path"]
        try:
            ctx.obj["catalog"] = (
                load_catalog(path) if path is not None else load_default_catalog()
            )
        except CatalogError as exc:
            _fail(str(exc))
    return ctx.obj["catalog"]


# ----------------------------------------------------------------- verify --


@main.command()
@click.argument("names", nargs=-1)
@click.option("--jobs", default=1, show_default=True, type=click.IntRange(min=1),
              help="Verify entries in parallel threads.")
@click.option("--seed", default=0, show_default=True, type=int,
              help="Seed for the randomized naturality sample.")
@click.option("--report-dir", type=click.Path(file_okay=False, path_type=Path),
              default=None, help="Write report.json/report.csv/report.png here.")
@click.pass_context
def verify(ctx: click.Context, names: tuple[str, ...], jobs: int, seed: int,
           report_dir: Path | None) -> None:
    """Verify catalog relations (all of them, or just NAMES)."""
    curves, entries = _get_catalog(ctx)
    if names:
        by_name = {entry.name: entry for entry in entries}
        missing = sorted(set(names) - set(by_name))
        if missing:
            _fail("unknown relation(s): " + ", ".join(missing))
        start = time.perf_counter()
        reports = tuple(verify_relation(curves, by_name[n]) for n in names)
        summary = Summary(reports, time.perf_counter() - start)
    else:
        summary = verify_all(curves, entries, jobs=jobs, seed=seed)

    written: dict[str, Path] = {}
    if report_dir is not None:
        written = write_reports(summary, report_dir)

    if ctx.obj["fmt"] == "json":
        _emit_json(summary.to_json())
    else:
        for report in summary.reports:
            flag = "PASS" if report.ok else "FAIL"
            line = f"{flag}  {report.name}  ({report.seconds:.2f}s)"
            if not report.ok:
                line += "  failed: " + ", ".join(report.failed_labels())
            click.echo(line)
        for warning in summary.warnings:
            click.echo(f"warning: {warning}")
        click.echo(
            f"{summary.passed} passed, {summary.failed} failed in "
            f"{summary.seconds:.2f}s (convention: {summary.convention})"
        )
        for key in sorted(written):
            click.echo(f"wrote {written[key]}")
    sys.exit(0 if summary.ok else 1)


# ------------------------------------------------------------------ apply --


def _resolve_curve(ctx: click.Context, name: str) -> CurveSpec | ArcSpec:
    """A catalog name, or an inline round curve ``round:I,J@N``."""
    if name.startswith("round:"):
        body = name[len("round:"):]
        try:
            pair, _, strands = body.partition("@")
            i_text, _, j_text = pair.partition(",")
            spec = CurveSpec(int(strands), (int(i_text), int(j_text)), ())
        except ValueError:
            _fail(f"malformed round curve {name!r}; expected round:I,J@N")
        return spec
    curves, _ = _get_catalog(ctx)
    if name not in curves:
        _fail(f"unknown curve: {name}")
    return curves[name]


@main.command()
@click.argument("braid")
@click.argument("curve")
@click.pass_context
def apply(ctx: click.Context, braid: str, curve: str) -> None:
    """Act on CURVE by the braid word BRAID and print the image.

    CURVE is a catalog name or ``round:I,J@N`` for the round curve
    about punctures I..J on N strands.  BRAID is a space-separated word
    in signed generator indices (``"1 -2 1"``); an empty word is the
    identity, so the curve is echoed unchanged.
    """
    spec = _resolve_curve(ctx, curve)
    try:
        word = parse_word(braid, spec.punctures)
    except ValueError as exc:
        _fail(str(exc))
    coords = apply_braid(realize(spec), word)
    if ctx.obj["fmt"] == "json":
        _emit_json({**loop_to_json(coords), "norm": loop_norm(coords)})
    else:
        click.echo(f"punctures: {coords.punctures}")
        click.echo("a: " + " ".join(str(x) for x in coords.a))
        click.echo("b: " + " ".join(str(x) for x in coords.b))
        if coords.boundary:
            click.echo(f"boundary: {coords.boundary}")
        click.echo(f"norm: {loop_norm(coords)}")


# ------------------------------------------------------------------ burau --


@main.command("burau")
@click.argument("braid")
@click.option("--strands", "-n", required=True, type=click.IntRange(min=2),
              help="Number of strands.")
@click.option("--at", "at_t", default=None,
              help="Evaluate at a rational parameter, e.g. -1 or 2/3.")
@click.option("--symbolic", is_flag=True,
              help="Keep entries as Laurent polynomials (the default).")
@click.pass_context
def burau_command(ctx: click.Context, braid: str, strands: int,
                  at_t: str | None, symbolic: bool) -> None:
    """Print the reduced Burau matrix of BRAID."""
    if at_t is not None and symbolic:
        _fail("--at and --symbolic are mutually exclusive")
    try:
        word = parse_word(braid, strands)
    except ValueError as exc:
        _fail(str(exc))
    if at_t is not None:
        try:
            t0 = Fraction(at_t)
            matrix = burau_reduced_at(word, t0)
        except (ValueError, ZeroDivisionError) as exc:
            _fail(str(exc))
        if ctx.obj["fmt"] == "json":
            _emit_json({"at": str(t0),
                        "matrix": [[str(x) for x in row] for row in matrix]})
        else:
            cells = [[str(x) for x in row] for row in matrix]
            width = max((len(s) for row in cells for s in row), default=1)
            for row in cells:
                click.echo("[ " + "  ".join(s.rjust(width) for s in row) + " ]")
    else:
        matrix = burau_reduced(word)
        if ctx.obj["fmt"] == "json":
            _emit_json({"matrix": matrix_to_json(matrix)})
        else:
            click.echo(format_matrix(matrix))


# ----------------------------------------------------------------- forget --


@main.command()
@click.argument("braid")
@click.option("--strands", "-n", required=True, type=click.IntRange(min=2),
              help="Number of strands.")
@click.option("--keep", required=True,
              help='Comma-separated start positions to keep, e.g. "1,2".')
@click.pass_context
def forget(ctx: click.Context, braid: str, strands: int, keep: str) -> None:
    """Delete all strands of pure BRAID outside --keep."""
    try:
        word = parse_word(braid, strands)
        positions = tuple(int(part) for part in keep.split(",") if part.strip())
    except ValueError as exc:
        _fail(str(exc))
    try:
        quotient = forget_strands(word, positions)
    except ValueError as exc:
        _fail(str(exc))
    if ctx.obj["fmt"] == "json":
        _emit_json(braid_to_json(quotient))
    else:
        click.echo(f"strands: {quotient.strands}")
        click.echo("word: " + (format_word(quotient) or "(empty)"))


# ---------------------------------------------------------------- compile --


@main.command("compile")
@click.argument("name")
@click.pass_context
def compile_command(ctx: click.Context, name: str) -> None:
    """Print the braid word of the twist attached to catalog entry NAME.

    Arcs compile to their half twist.  Curves about an odd number of at
    least three punctures compile to the squared twist (the image of a
    genus-level twist); all other curves compile to the full twist.
    """
    curves, _ = _get_catalog(ctx)
    if name not in curves:
        _fail(f"unknown curve: {name}")
    spec = curves[name]
    if isinstance(spec, ArcSpec):
        mode, word = "half-twist", half_twist(spec)
    elif spec.enclosed % 2 == 1 and spec.enclosed >= 3:
        mode, word = "squared-twist", bh_twist_image(spec)
    else:
        mode, word = "full-twist", dehn_twist(spec)
    if ctx.obj["fmt"] == "json":
        _emit_json({"name": name, "mode": mode, **braid_to_json(word)})
    else:
        click.echo(f"{mode} on {name}: {word.strands} strands, "
                   f"{len(word.letters)} letters")
        click.echo(format_word(word) or "(empty)")


# ---------------------------------------------------------------- catalog --


@main.command("catalog")
@click.pass_context
def catalog_command(ctx: click.Context) -> None:
    """List the curves and relations of the active catalog."""
    curves, entries = _get_catalog(ctx)
    ordered = sorted(entries, key=lambda entry: entry.name)
    if ctx.obj["fmt"] == "json":
        _emit_json({
            "curves": sorted(curves),
            "relations": [
                {"name": entry.name, "ambient": entry.ambient.describe(),
                 "tags": list(entry.tags), "source": entry.source}
                for entry in ordered
            ],
        })
    else:
        click.echo(f"{len(curves)} curves, {len(entries)} relations")
        for entry in ordered:
            tags = ", ".join(entry.tags) if entry.tags else "-"
            click.echo(f"{entry.name}  [{entry.ambient.describe()}]  tags: {tags}")
            if entry.source:
                click.echo(f"    {entry.source}")


if __name__ == "__main__":
    main()
