"""Ballrivoal command for zetaform."""
from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from zetaform.core.errors import ZetaformError
from zetaform.core.forms import ball_rivoal_form, ball_rivoal_special, is_integrable, tau_symmetry
from zetaform.core.numeric import verify_linear_form
from zetaform.core.zeta_coeffs import (
    coefficients,
    hypergeometric_params,
    predict_vanishing,
    weight_drop_predicted,
)
from zetaform.utils.common import (
    EXIT_NOT_INTEGRABLE,
    EXIT_VERIFICATION_FAILED,
    engine_config,
    fail,
    parse_int_list,
)
from zetaform.utils.output import CoefficientsRecord, VerificationRecord

console = Console()


def ballrivoal_command(
    ctx: typer.Context,
    u: Optional[str] = typer.Option(None, "--u", help="Comma separated u_i, e.g. 1,1,1"),
    v: Optional[str] = typer.Option(None, "--v", help="Comma separated v_i, e.g. 1,1,1"),
    N: Optional[int] = typer.Option(None, "--N", help="Pole order"),
    family: Optional[str] = typer.Option(None, "--family", help="r,m for N=(2r+1)m+2, u_i=rm+1, v_i=m+1"),
    n: Optional[int] = typer.Option(None, "--n", help="Number of variables for --family"),
    check: bool = typer.Option(False, "--check", help="Verify the coefficients numerically"),
    K: Optional[int] = typer.Option(None, "--K", help="Number of series terms for --check"),
    digits: Optional[int] = typer.Option(None, "--digits", help="Digits of the zeta values for --check"),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON record"),
):
    """Coefficients, parity prediction and weight drop of a Ball-Rivoal integral."""
    config = engine_config(ctx)
    if family is not None:
        if u is not None or v is not None or N is not None:
            fail("--family cannot be combined with --u/--v/--N")
        if n is None:
            fail("--family needs --n")
        r_m = parse_int_list(family, "--family")
        if len(r_m) != 2:
            fail("--family expects two integers r,m")
        try:
            u_list, v_list, N = ball_rivoal_special(n, r_m[0], r_m[1])
        except ValueError as e:
            fail(str(e))
    else:
        if u is None or v is None or N is None:
            fail("give --u, --v and --N, or --family with --n")
        u_list = tuple(parse_int_list(u, "--u"))
        v_list = tuple(parse_int_list(v, "--v"))

    try:
        form = ball_rivoal_form(u_list, v_list, N)
        display = hypergeometric_params(u_list, v_list, N)
    except ValueError as e:
        fail(str(e))

    integrable = is_integrable(form)
    weight_drop = weight_drop_predicted(u_list, v_list, N)
    zeros = sorted(predict_vanishing(form))

    if not json_output:
        table = Table(title="Ball-Rivoal integral", show_header=False)
        table.add_row("u", ", ".join(map(str, u_list)))
        table.add_row("v", ", ".join(map(str, v_list)))
        table.add_row("N", str(N))
        table.add_row("series", str(display))
        table.add_row("well-poised", str(display.well_poised).lower())
        table.add_row("integrable", str(integrable).lower())
        table.add_row("tau symmetry", tau_symmetry(form).value)
        table.add_row("predicted zeros", ", ".join(f"a{k}" for k in zeros) or "none")
        table.add_row("weight drop", str(weight_drop).lower())
        console.print(table)

    if not integrable:
        fail(f"{form} does not converge absolutely on the unit cube", EXIT_NOT_INTEGRABLE)
    try:
        c = coefficients(form)
    except ZetaformError as e:
        fail(str(e))

    report = None
    if check:
        K = K if K is not None else config.numeric.default_K
        digits = digits if digits is not None else config.numeric.default_digits
        report = verify_linear_form(form, c, K, digits)

    if json_output:
        payload = CoefficientsRecord.from_coefficients(c).model_dump()
        payload.update(u=list(u_list), v=list(v_list), N=N, predicted_zeros=zeros, weight_drop=weight_drop)
        if report is not None:
            payload["check"] = VerificationRecord.from_report(report).model_dump()
        console.print_json(data=payload)
    else:
        typer.echo(str(c))
        if report is not None:
            typer.echo(f"series: {report.lhs}")
            typer.echo(f"zeta:   {report.rhs}")
            typer.echo(f"check:  {'pass' if report.passed else 'FAIL'} (K={report.K}, digits={report.digits})")

    if report is not None and not report.passed:
        raise typer.Exit(code=EXIT_VERIFICATION_FAILED)
