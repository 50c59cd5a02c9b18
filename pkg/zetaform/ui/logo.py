"""ASCII banner for zetaform."""
from typing import Optional

from rich.console import Console

ZETAFORM_LOGO = r"""
                 __        ____
  ____ ___  ____/ /_____ _/ __/___  _________ ___
 /_  // _ \/ __  __/ __ `/ /_/ __ \/ ___/ __ `__ \
  / //  __/ /_/ /_/ /_/ / __/ /_/ / /  / / / / / /
 /___|___/\__/\__/\__,_/_/  \____/_/  /_/ /_/ /_/

   exact linear forms in zeta values
"""


def print_logo(console: Optional[Console] = None) -> None:
    """Print the zetaform banner."""
    (console or Console()).print(ZETAFORM_LOGO, highlight=False, markup=False)
