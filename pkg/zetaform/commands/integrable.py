"""Integrable command for zetaform."""
from typing import Optional

import typer

from zetaform.core.errors import ZetaformError
from zetaform.core.forms import is_integrable
from zetaform.utils.common import EXIT_NOT_INTEGRABLE, fail, load_form


def integrable_command(
    expr: str = typer.Argument(..., help="Form such as '1/(1-x1*x2)^2'"),
    n: Optional[int] = typer.Option(None, "--n", help="Number of variables (default: largest index used)"),
):
    """Decide whether the integral over the unit cube converges absolutely."""
    form = load_form(expr, n)
    try:
        ok = is_integrable(form)
    except ZetaformError as e:
        fail(str(e))
    typer.echo("true" if ok else "false")
    if not ok:
        raise typer.Exit(code=EXIT_NOT_INTEGRABLE)
