"""Eulerian command for zetaform."""
from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from zetaform.core.periods import eulerian_number, eulerian_poly
from zetaform.utils.common import fail

console = Console()


def eulerian_command(
    r: Optional[int] = typer.Option(None, "--r", help="Print the Eulerian polynomial E_r"),
    table: Optional[int] = typer.Option(None, "--table", help="Print the triangle of <n,k> for n <= TABLE"),
):
    """Eulerian polynomials and the triangle of Eulerian numbers."""
    if (r is None) == (table is None):
        fail("give exactly one of --r and --table")
    if r is not None:
        if r < 0:
            fail("--r must be >= 0")
        typer.echo(f"E_{r}(x) = {eulerian_poly(r).to_str('x')}")
        return
    if table < 1:
        fail("--table must be >= 1")
    grid = Table(title="Eulerian numbers <n,k>")
    grid.add_column("n", justify="right")
    for k in range(table):
        grid.add_column(f"k={k}", justify="right")
    for n in range(1, table + 1):
        grid.add_row(str(n), *[str(eulerian_number(n, k)) if k < n else "" for k in range(table)])
    console.print(grid)
