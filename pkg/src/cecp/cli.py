"""Command-line front end.

Subcommands: ``analyze`` (panel file to window/period records plus a run
manifest), ``bounds`` (extremal curve table), ``generate`` (synthetic series
file), ``serve`` (start the HTTP service). Every command except ``serve``
runs in process by default and can instead delegate to a running service via
``--server URL``; both modes produce identical bytes.

Exit codes: 0 success, 2 usage or invalid parameters, 3 input parse error,
4 insufficient data, 5 unwritable output. All analysis numbers are printed
with 12 significant digits.
"""

from __future__ import annotations

import functools
import hashlib
import json
import math
import sys
from pathlib import Path

import click

from . import __version__
from .errors import CecpError, InsufficientDataError, PanelFormatError
from .ingest import PanelSource, load_panel, write_wide_panel
from .patterns import with_jitter
from .service import operations
from .service.schemas import (
    AnalysisSettings,
    AnalyzeRequest,
    AnalyzeResponse,
    BoundsRequest,
    BoundsResponse,
    GenerateRequest,
    GenerateResponse,
)

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INSUFFICIENT = 4
EXIT_UNWRITABLE = 5

WINDOW_FIELDS = (
    "series_label",
    "window_index",
    "start_date",
    "end_date",
    "entropy",
    "complexity",
    "inefficiency",
)
PERIOD_FIELDS = (
    "series_label",
    "period_id",
    "size",
    "centroid_entropy",
    "centroid_complexity",
)


def _fmt(value: float) -> str:
    """12 significant digits, the package-wide numeric output format."""
    return f"{value:.12g}"


def _round12(value: float) -> float:
    return float(_fmt(value))


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _exit_mapped(fn):
    """Translate domain errors into the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PanelFormatError as exc:
            _fail(EXIT_PARSE, str(exc))
        except InsufficientDataError as exc:
            _fail(EXIT_INSUFFICIENT, str(exc))
        except OSError as exc:
            _fail(EXIT_UNWRITABLE, str(exc))
        except CecpError as exc:
            _fail(EXIT_USAGE, str(exc))

    return wrapper


def _make_client(server: str):
    """HTTP client factory; tests swap this for an in-memory transport."""
    import httpx

    return httpx.Client(base_url=server, timeout=120.0)


def _post(server: str, path: str, payload: dict) -> dict:
    """POST to the service, translating error payloads back to exceptions."""
    import httpx

    from . import errors as error_module

    try:
        with _make_client(server) as client:
            response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise CecpError(f"cannot reach server at {server}: {exc}") from exc
    if response.status_code == 400:
        body = response.json()
        kind = getattr(error_module, body.get("kind", ""), None)
        detail = body.get("detail", "service reported an error")
        if isinstance(kind, type) and issubclass(kind, PanelFormatError):
            raise kind(detail)  # detail already carries any line prefix
        if isinstance(kind, type) and issubclass(kind, CecpError):
            raise kind(detail)
        raise CecpError(detail)
    if response.status_code >= 300:
        raise CecpError(f"server returned HTTP {response.status_code}: {response.text}")
    return response.json()


def _write_csv(path: Path, fieldnames: tuple[str, ...], rows: list[dict]) -> None:
    import csv

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_cell(row[name]) for name in fieldnames])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def _json_ready(rows: list[dict]) -> list[dict]:
    return [
        {k: (_round12(v) if isinstance(v, float) else v) for k, v in row.items()}
        for row in rows
    ]


def _dump_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


@click.group()
@click.version_option(__version__, prog_name="cecp")
def main() -> None:
    """Ordinal-pattern complexity analysis of time series panels."""


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--layout", type=click.Choice(["wide", "long"]), default="wide",
              show_default=True, help="Input file layout.")
@click.option("--date-format", default="%Y-%m-%d", show_default=True,
              help="strptime pattern for the date column.")
@click.option("--delimiter", default=",", show_default=True)
@click.option("--policy", type=click.Choice(["drop", "ffill"]), default="drop",
              show_default=True, help="Missing-value policy.")
@click.option("--diff", is_flag=True, help="Analyze first differences of each series.")
@click.option("--dimension", type=int, default=4, show_default=True,
              help="Pattern length D; alphabet size is D!.")
@click.option("--delay", type=int, default=1, show_default=True,
              help="Spacing between values inside one pattern.")
@click.option("--window-length", type=int, default=300, show_default=True,
              help="Observations per sliding window.")
@click.option("--step", type=int, default=20, show_default=True,
              help="Observations the window advances each step.")
@click.option("--period-size", type=int, default=16, show_default=True,
              help="Windows per period cluster.")
@click.option("--max-windows", type=int, default=None,
              help="Keep only the first N windows of each series.")
@click.option("--jitter", type=float, default=0.0, show_default=True,
              help="Amplitude of seeded tie-breaking noise added before analysis.")
@click.option("--jitter-seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=None,
              help="Thread count for window evaluation; output is identical for any value.")
@click.option("--output", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True, help="csv writes windows.csv/periods.csv/manifest.json; "
              "json writes a single analysis.json.")
@click.option("--out-dir", type=click.Path(file_okay=False), default=".",
              show_default=True)
@click.option("--server", default=None, metavar="URL",
              help="Delegate computation to a running service.")
@_exit_mapped
def analyze(input_path, layout, date_format, delimiter, policy, diff, dimension, delay,
            window_length, step, period_size, max_windows, jitter, jitter_seed,
            workers, output, out_dir, server):
    """Sliding-window analysis of every series in a panel file."""
    source = PanelSource(
        path=input_path,
        layout=layout,
        date_format=date_format,
        missing_policy={"drop": "drop", "ffill": "forward_fill"}[policy],
        differencing=diff,
        delimiter=delimiter,
    )
    panel = load_panel(source)
    if jitter:
        panel = [with_jitter(series, jitter, jitter_seed) for series in panel]
    settings = AnalysisSettings(
        dimension=dimension,
        delay=delay,
        window_length=window_length,
        step=step,
        period_size=period_size,
        max_windows=max_windows,
    )
    request = AnalyzeRequest(
        series=[operations.series_to_payload(s) for s in panel],
        settings=settings,
        workers=workers,
    )
    if server:
        response = AnalyzeResponse.model_validate(
            _post(server, "/analyze", request.model_dump())
        )
    else:
        response = operations.run_analysis(request)

    window_rows = []
    period_rows = []
    summaries = {}
    for analysis in response.series:
        window_rows.extend(w.model_dump() for w in analysis.windows)
        period_rows.extend(p.model_dump() for p in analysis.periods)
        summaries[analysis.label] = {
            "windows": len(analysis.windows),
            "periods": len(analysis.periods),
            "undersampled": analysis.undersampled,
        }
        if analysis.undersampled:
            click.echo(
                f"warning: series {analysis.label!r}: "
                f"{window_length - (dimension - 1) * delay} patterns per window is fewer "
                f"than 5 x {math.factorial(dimension)} states; estimates will be noisy",
                err=True,
            )

    digest = hashlib.sha256(Path(input_path).read_bytes()).hexdigest()
    manifest = {
        "tool": "cecp",
        "version": __version__,
        "command": "analyze",
        "input": {"path": str(input_path), "sha256": digest},
        "settings": {
            "layout": layout,
            "date_format": date_format,
            "delimiter": delimiter,
            "policy": source.missing_policy,
            "differencing": diff,
            "dimension": dimension,
            "delay": delay,
            "window_length": window_length,
            "step": step,
            "period_size": period_size,
            "max_windows": max_windows,
            "jitter": jitter,
            "jitter_seed": jitter_seed,
            "output": output,
        },
        "series": summaries,
    }

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if output == "csv":
        _write_csv(out / "windows.csv", WINDOW_FIELDS, window_rows)
        _write_csv(out / "periods.csv", PERIOD_FIELDS, period_rows)
        (out / "manifest.json").write_text(_dump_json(manifest), encoding="utf-8")
        written = "windows.csv, periods.csv, manifest.json"
    else:
        document = {
            "manifest": manifest,
            "windows": _json_ready(window_rows),
            "periods": _json_ready(period_rows),
        }
        (out / "analysis.json").write_text(_dump_json(document), encoding="utf-8")
        written = "analysis.json"
    for label, summary in summaries.items():
        click.echo(f"{label}: {summary['windows']} windows, {summary['periods']} periods")
    click.echo(f"wrote {written} to {out}")


@main.command()
@click.option("--alphabet-size", "-m", type=int, default=None,
              help="Number of states M.")
@click.option("--dimension", type=int, default=None,
              help="Pattern length D; shorthand for an alphabet of D! states.")
@click.option("--resolution", type=int, default=1000, show_default=True,
              help="Points evaluated per curve family.")
@click.option("--output", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Output file; stdout when omitted.")
@click.option("--server", default=None, metavar="URL")
@_exit_mapped
def bounds(alphabet_size, dimension, resolution, output, out, server):
    """Extremal complexity curves of the plane for one alphabet size."""
    if (alphabet_size is None) == (dimension is None):
        raise click.UsageError("pass exactly one of --alphabet-size or --dimension")
    if alphabet_size is None:
        if dimension < 2:
            raise click.UsageError(f"dimension must be >= 2, got {dimension}")
        alphabet_size = math.factorial(dimension)
    request = BoundsRequest(alphabet_size=alphabet_size, resolution=resolution)
    if server:
        response = BoundsResponse.model_validate(
            _post(server, "/bounds", request.model_dump())
        )
    else:
        response = operations.run_bounds(request)
    rows = [p.model_dump() for p in response.points]
    if output == "csv":
        lines = ["kind,entropy,complexity"]
        lines += [f"{r['kind']},{_fmt(r['entropy'])},{_fmt(r['complexity'])}" for r in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = _dump_json(
            {
                "alphabet_size": response.alphabet_size,
                "resolution": response.resolution,
                "points": _json_ready(rows),
            }
        )
    if out:
        Path(out).write_text(text, encoding="utf-8")
        click.echo(f"wrote {len(rows)} points to {out}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--kind", type=click.Choice(["white_noise", "random_walk", "logistic_map"]),
              required=True)
@click.option("--length", type=int, required=True, help="Number of observations.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--r", type=float, default=4.0, show_default=True,
              help="Logistic-map growth parameter, in (0, 4].")
@click.option("--x0", type=float, default=None,
              help="Logistic-map start point in (0, 1); seed-derived when omitted.")
@click.option("--transient", type=int, default=1000, show_default=True,
              help="Logistic-map iterations discarded before recording.")
@click.option("--label", default=None, help="Series label; defaults to kind-seed.")
@click.option("--out", type=click.Path(dir_okay=False), required=True,
              help="Wide-layout output file, loadable by analyze.")
@click.option("--server", default=None, metavar="URL")
@_exit_mapped
def generate(kind, length, seed, r, x0, transient, label, out, server):
    """Write a deterministic synthetic series file."""
    request = GenerateRequest(
        kind=kind, length=length, seed=seed, r=r, x0=x0, transient=transient, label=label
    )
    if server:
        response = GenerateResponse.model_validate(
            _post(server, "/generate", request.model_dump())
        )
    else:
        response = operations.run_generate(request)
    series = operations.payload_to_series(response.series)
    write_wide_panel(out, [series])
    click.echo(f"wrote {len(series)} values of {series.label!r} to {out}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("cecp.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
