"""Main entry point for the zetaform CLI."""
import sys
from pathlib import Path
from typing import List, Optional

import typer

from zetaform.commands.ballrivoal import ballrivoal_command
from zetaform.commands.check import check_command
from zetaform.commands.coeffs import coeffs_command
from zetaform.commands.eulerian import eulerian_command
from zetaform.commands.integrable import integrable_command
from zetaform.commands.periods import periods_command
from zetaform.commands.scan import scan_command
from zetaform.commands.schema import schema_command
from zetaform.commands.tau import tau_command
from zetaform.config.config_manager import ConfigManager
from zetaform.ui.logo import print_logo
from zetaform.utils.common import EXIT_USAGE
from zetaform.utils.log import setup_logging

# typer may run on a bundled click, so take the base class from its own hierarchy
ClickException = next(cls for cls in typer.BadParameter.__mro__ if cls.__name__ == "ClickException")

app = typer.Typer(
    name="zetaform",
    help="Exact linear forms in zeta values from integrals over the unit cube.",
    add_completion=False,
)


@app.callback()
def main_callback(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    config: Optional[Path] = typer.Option(None, "--config", help="YAML settings file with engine defaults"),
):
    setup_logging(verbose)
    ctx.obj = ConfigManager(config)


# Add commands to the app
app.command(name="coeffs", help="Exact coefficients a0, a2, ..., an of a form.")(coeffs_command)
app.command(name="integrable", help="Decide absolute convergence on the unit cube.")(integrable_command)
app.command(name="tau", help="Image under x_i -> 1/x_i and parity symmetry.")(tau_command)
app.command(name="ballrivoal", help="Study one Ball-Rivoal integral.")(ballrivoal_command)
app.command(name="scan", help="Scan Ball-Rivoal parameters into JSON Lines.")(scan_command)
app.command(name="eulerian", help="Eulerian polynomials and numbers.")(eulerian_command)
app.command(name="periods", help="Verify and print the period matrices.")(periods_command)
app.command(name="check", help="Certify coefficients with interval arithmetic.")(check_command)
app.command(name="schema", help="JSON schema of the output records.")(schema_command)


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on argv and return the exit code instead of exiting."""
    args = list(sys.argv[1:] if argv is None else argv)
    if not args:
        print_logo()
        args = ["--help"]
    try:
        result = app(args=args, prog_name="zetaform", standalone_mode=False)
    except ClickException as e:
        e.show()
        return EXIT_USAGE
    except typer.Abort:
        typer.echo("Aborted.", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else 0


def main():
    """Main entry point for the CLI."""
    sys.exit(run())


if __name__ == "__main__":
    main()
