"""Tau command for zetaform."""
from typing import Optional

import typer

from zetaform.core.forms import tau_form, tau_symmetry
from zetaform.core.zeta_coeffs import predict_vanishing
from zetaform.utils.common import load_form


def tau_command(
    expr: str = typer.Argument(..., help="Form such as '1/(1-x1*x2*x3)^2'"),
    n: Optional[int] = typer.Option(None, "--n", help="Number of variables (default: largest index used)"),
):
    """Print the image under x_i -> 1/x_i and the resulting symmetry."""
    form = load_form(expr, n)
    typer.echo(f"tau: {tau_form(form)}")
    typer.echo(f"symmetry: {tau_symmetry(form).value}")
    zeros = sorted(predict_vanishing(form))
    typer.echo(f"predicted zeros: {', '.join(f'a{k}' for k in zeros) if zeros else 'none'}")
