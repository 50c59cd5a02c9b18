"""Coeffs command for zetaform."""
from typing import Optional

import typer
from rich.console import Console

from zetaform.core.errors import NotIntegrable, ZetaformError
from zetaform.core.zeta_coeffs import coefficients, odd_basis_decomposition
from zetaform.utils.common import EXIT_NOT_INTEGRABLE, fail, load_form
from zetaform.utils.output import CoefficientsRecord

console = Console()


def coeffs_command(
    expr: str = typer.Argument(..., help="Form such as '1/(1-x1*x2)'"),
    n: Optional[int] = typer.Option(None, "--n", help="Number of variables (default: largest index used)"),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON record"),
    odd_basis: bool = typer.Option(False, "--odd-basis", help="Rewrite even zeta values as powers of T = 2*pi*i"),
):
    """Compute the exact coefficients a0, a2, ..., an of the cube integral."""
    form = load_form(expr, n)
    try:
        c = coefficients(form)
    except NotIntegrable as e:
        fail(str(e), EXIT_NOT_INTEGRABLE)
    except (ZetaformError, ValueError) as e:
        fail(str(e))

    if json_output:
        typer.echo(CoefficientsRecord.from_coefficients(c).model_dump_json(indent=2))
        return
    typer.echo(str(c))
    if odd_basis:
        console.print(f"odd basis: {odd_basis_decomposition(c)}", highlight=False)
