"""Periods command for zetaform."""
from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from zetaform.core.errors import EnumerationBound
from zetaform.core.exactalg import format_rational
from zetaform.core.periods import (
    descent_volume_oracle,
    hypersimplex_volume,
    last_row_is_ones,
    matrix_P,
    sigma_cycles,
    verify_sigma_diagonal,
)
from zetaform.utils.common import EXIT_VERIFICATION_FAILED, engine_config, fail

console = Console()


def _mark(ok: bool) -> str:
    return "[green]ok[/green]" if ok else "[red]FAIL[/red]"


def periods_command(
    ctx: typer.Context,
    verify_n: Optional[int] = typer.Option(None, "--verify-n", help="Check Q_n P_n = Diag(T, ..., T^n) for n up to this"),
    print_Q: Optional[int] = typer.Option(None, "--print-Q", help="Print Q_n with exact rationals"),
    print_P: Optional[int] = typer.Option(None, "--print-P", help="Print P_n over Q[T], T = 2*pi*i"),
    volumes: bool = typer.Option(False, "--volumes", help="Also compare hypersimplex volumes with descent counts"),
):
    """Period matrices of the cube integrals and their diagonalization."""
    if verify_n is None and print_Q is None and print_P is None:
        fail("give --verify-n, --print-Q or --print-P")
    config = engine_config(ctx)
    all_ok = True

    if verify_n is not None:
        if verify_n < 1:
            fail("--verify-n must be >= 1")
        table = Table(title=f"Period matrix identities, n <= {verify_n}")
        table.add_column("n", justify="right")
        table.add_column("Q_n P_n diagonal")
        table.add_column("last row of Q_n")
        if volumes:
            table.add_column("volumes = descents")
        for n in range(1, verify_n + 1):
            diagonal = verify_sigma_diagonal(n)
            ones = last_row_is_ones(n)
            row_ok = diagonal and ones
            cells = [str(n), _mark(diagonal), _mark(ones)]
            if volumes:
                try:
                    same = all(
                        hypersimplex_volume(n, k) == descent_volume_oracle(n, k, config.scan.enumeration_bound)
                        for k in range(n)
                    )
                    cells.append(_mark(same))
                    row_ok = row_ok and same
                except EnumerationBound:
                    cells.append("skipped")
            all_ok = all_ok and row_ok
            table.add_row(*cells)
        console.print(table)

    if print_Q is not None:
        if print_Q < 1:
            fail("--print-Q must be >= 1")
        table = Table(title=f"Q_{print_Q} (rows: cycles on the hypersimplices)")
        table.add_column("cycle", justify="right")
        for k in range(print_Q):
            table.add_column(f"D({print_Q},{k})", justify="right")
        for i, row in enumerate(sigma_cycles(print_Q), start=1):
            table.add_row(str(i), *[format_rational(x) for x in row])
        console.print(table)

    if print_P is not None:
        if print_P < 1:
            fail("--print-P must be >= 1")
        table = Table(title=f"P_{print_P}")
        for j in range(print_P):
            table.add_column(str(j + 1))
        for row in matrix_P(print_P).to_lists():
            table.add_row(*row)
        console.print(table)

    if not all_ok:
        raise typer.Exit(code=EXIT_VERIFICATION_FAILED)
