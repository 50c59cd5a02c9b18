"""Check command for zetaform."""
from typing import Optional

import typer

from zetaform.core.errors import NotIntegrable, ZetaformError
from zetaform.core.numeric import verify_linear_form
from zetaform.core.zeta_coeffs import coefficients
from zetaform.utils.common import (
    EXIT_NOT_INTEGRABLE,
    EXIT_VERIFICATION_FAILED,
    engine_config,
    fail,
    load_form,
)
from zetaform.utils.output import VerificationRecord


def check_command(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help="Form such as '1/(1-x1*x2)'"),
    n: Optional[int] = typer.Option(None, "--n", help="Number of variables (default: largest index used)"),
    K: Optional[int] = typer.Option(None, "--K", help="Number of series terms summed exactly"),
    digits: Optional[int] = typer.Option(None, "--digits", help="Digits of the zeta values"),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON record"),
):
    """Certify the computed coefficients against the summed series."""
    config = engine_config(ctx)
    K = K if K is not None else config.numeric.default_K
    digits = digits if digits is not None else config.numeric.default_digits
    form = load_form(expr, n)
    try:
        c = coefficients(form)
        report = verify_linear_form(form, c, K, digits)
    except NotIntegrable as e:
        fail(str(e), EXIT_NOT_INTEGRABLE)
    except (ZetaformError, ValueError) as e:
        fail(str(e))

    if json_output:
        typer.echo(VerificationRecord.from_report(report).model_dump_json(indent=2))
    else:
        typer.echo(str(c))
        typer.echo(f"series: {report.lhs}")
        typer.echo(f"zeta:   {report.rhs}")
        typer.echo(f"check:  {'pass' if report.passed else 'FAIL'} (K={report.K}, digits={report.digits})")
    if not report.passed:
        raise typer.Exit(code=EXIT_VERIFICATION_FAILED)
