"""Helpers shared by the zetaform commands."""
from typing import List, NoReturn, Optional

import typer
from rich.console import Console
from rich.markup import escape

from zetaform.config.config_manager import ConfigManager, EngineConfig
from zetaform.core.errors import ParseError
from zetaform.core.forms import ZetaIntegrand
from zetaform.core.parser import parse_form

EXIT_USAGE = 1
EXIT_NOT_INTEGRABLE = 2
EXIT_VERIFICATION_FAILED = 3

err_console = Console(stderr=True)


def fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    """
    Print an error in red on stderr and leave the command.

    Args:
        message: Plain text of the error; rich markup in it is escaped
        code: Exit code the CLI returns

    Raises:
        typer.Exit: always, carrying ``code``
    """
    err_console.print(f"[red]Error:[/red] {escape(message)}")
    raise typer.Exit(code=code)


def engine_config(ctx: Optional[typer.Context]) -> EngineConfig:
    """
    Get the engine settings for a command.

    Args:
        ctx: Command context whose ``obj`` holds the ConfigManager built by --config

    Returns:
        The loaded EngineConfig, or the defaults when no manager is attached
    """
    manager = ctx.obj if ctx is not None and isinstance(ctx.obj, ConfigManager) else ConfigManager()
    return manager.get_current_config()


def load_form(expr: str, n: Optional[int] = None) -> ZetaIntegrand:
    """
    Parse a form given on the command line.

    Args:
        expr: Expression text such as 'x1/(1-x1*x2)^2'
        n: Number of variables; defaults to the largest index used

    Returns:
        The parsed ZetaIntegrand. A parse error exits with code 1 and a caret
        under the offending column.
    """
    try:
        return parse_form(expr, n)
    except ParseError as e:
        pointer = ""
        if e.line == 1:
            pointer = f"\n  {expr}\n  {' ' * (e.column - 1)}^"
        fail(f"{e}{pointer}")


def parse_int_list(text: str, option: str) -> List[int]:
    """
    Split a comma separated option value such as '1,2,3'.

    Args:
        text: Raw option value
        option: Option name used in error messages

    Returns:
        The integers in order
    """
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        fail(f"{option} expects comma separated integers, got {text!r}")
    if not values:
        fail(f"{option} expects at least one integer")
    return values
