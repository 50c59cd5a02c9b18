"""Scan command for zetaform."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from zetaform.core.errors import ZetaformError
from zetaform.utils.common import EXIT_VERIFICATION_FAILED, engine_config, fail
from zetaform.utils.scanner import run_scan

err_console = Console(stderr=True)


def scan_command(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Number of variables"),
    max_N: int = typer.Option(..., "--max-N", help="Largest pole order N"),
    well_poised: bool = typer.Option(False, "--well-poised", help="Only 2u_i + v_i = N + 1"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="JSON Lines file to append to"),
    resume: bool = typer.Option(False, "--resume", help="Skip tuples already present in --out"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    max_uv: Optional[int] = typer.Option(None, "--max-uv", help="Bound for u_i, v_i without --well-poised"),
):
    """Evaluate every Ball-Rivoal parameter tuple and emit one JSON object per tuple."""
    config = engine_config(ctx)
    workers = workers if workers is not None else config.scan.workers
    max_uv = max_uv if max_uv is not None else config.scan.max_uv
    if resume and out is None:
        fail("--resume needs --out")

    count = mismatches = 0
    try:
        for record in run_scan(n, max_N, well_poised, max_uv, workers, out, resume):
            count += 1
            if out is None:
                typer.echo(record.model_dump_json())
            if record.integrable and any(record.coeffs.get(str(k)) != "0" for k in record.predicted_zeros):
                mismatches += 1
                err_console.print(f"[yellow]parity prediction violated[/yellow] for u={record.u} v={record.v} N={record.N}")
    except (ZetaformError, ValueError) as e:
        fail(str(e))
    if out is not None:
        err_console.print(f"{count} tuples written to {out}", highlight=False)
    if mismatches:
        raise typer.Exit(code=EXIT_VERIFICATION_FAILED)
