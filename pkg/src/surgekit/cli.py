"""Command-line front end: compile, estimate, randgen, bench, layout."""
from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from .assembler import CompileError
from .assembly_io import export_assembly
from .bench import run_benchmark
from .circuit import CircuitFormatError, generate_random_circuit, parse_circuit, serialize_circuit
from .estimate import EstimatorConfig
from .layout import DEFAULT_LAYOUT_CONFIG, build_layout, layout_ascii, layout_to_doc
from .pipeline import compile_circuit


def _surface_errors(fn):
    """Turn expected failures into clean CLI errors instead of tracebacks."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (CircuitFormatError, CompileError, ValueError, OSError) as exc:
            raise click.ClickException(str(exc)) from exc

    return wrapper


def _load_circuit(path: str):
    return parse_circuit(Path(path).read_text(encoding="utf-8"))


def _parse_int_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated integer list, got {raw!r}")


def _print_report(report) -> None:
    for key, value in report.to_dict().items():
        click.echo(f"{key}: {value}")


@click.group()
def main() -> None:
    """Lattice-surgery compiler and resource estimator."""


@main.command("compile")
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--distance", "-d", type=int, default=3, show_default=True, help="Code distance.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Assembly file to write.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None, help="Report JSON to write.")
@_surface_errors
def compile_cmd(circuit_file: str, distance: int, out: str | None, report_path: str | None) -> None:
    """Compile a circuit file to a topological assembly."""
    circuit = _load_circuit(circuit_file)
    result = compile_circuit(circuit, estimator_cfg=EstimatorConfig(code_distance=distance))
    _print_report(result.report)
    if out:
        export_assembly(result.assembly, result.report, out)
        click.echo(f"assembly written to {out}")
    if report_path:
        Path(report_path).write_text(json.dumps(result.report.to_dict(), indent=2) + "\n", encoding="utf-8")
        click.echo(f"report written to {report_path}")


@main.command()
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--distance", "-d", type=int, default=3, show_default=True, help="Code distance.")
@_surface_errors
def estimate(circuit_file: str, distance: int) -> None:
    """Compile and print the resource report only."""
    circuit = _load_circuit(circuit_file)
    result = compile_circuit(circuit, estimator_cfg=EstimatorConfig(code_distance=distance))
    _print_report(result.report)


@main.command()
@click.option("--qubits", type=int, required=True)
@click.option("--gates", type=int, required=True)
@click.option("--tfrac", type=float, default=0.5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_surface_errors
def randgen(qubits: int, gates: int, tfrac: float, seed: int, out: str) -> None:
    """Generate a seeded random benchmark circuit."""
    circuit = generate_random_circuit(qubits, gates, tfrac, seed)
    Path(out).write_text(serialize_circuit(circuit), encoding="utf-8")
    click.echo(f"wrote {qubits}-qubit, {gates}-gate circuit to {out}")


@main.command()
@click.option("--qubits", required=True, help="Comma-separated qubit counts.")
@click.option("--gates", required=True, help="Comma-separated gate counts.")
@click.option("--tfrac", type=float, default=0.5, show_default=True)
@click.option("--seeds", type=int, default=10, show_default=True, help="Circuits per configuration.")
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="CSV table to write.")
@_surface_errors
def bench(qubits: str, gates: str, tfrac: float, seeds: int, out: str) -> None:
    """Run the random-circuit benchmark and write the CSV table."""
    table = run_benchmark(_parse_int_list(qubits), _parse_int_list(gates), tfrac, seeds)
    Path(out).write_text(table.to_csv(), encoding="utf-8")
    click.echo(f"wrote {len(table.rows)} rows to {out}")
    for failure in table.failures:
        click.echo(
            f"FAILED qub={failure.qubits} gates={failure.gates} seed={failure.seed}: {failure.error}",
            err=True,
        )
    if table.failures:
        sys.exit(1)


@main.command()
@click.option("--qubits", type=int, required=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the structured dump instead of the map.")
@_surface_errors
def layout(qubits: int, as_json: bool) -> None:
    """Print the patch layout for a qubit count (D data, a ancilla, M distillation)."""
    grid = build_layout(qubits, DEFAULT_LAYOUT_CONFIG)
    if as_json:
        click.echo(json.dumps(layout_to_doc(grid)))
        return
    click.echo(layout_ascii(grid))
    counts = grid.counts()
    click.echo(
        f"footprint {grid.footprint} ({grid.width}x{grid.height}), "
        + ", ".join(f"{kind.value} {count}" for kind, count in counts.items())
    )


if __name__ == "__main__":
    main()
