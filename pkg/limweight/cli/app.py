from typing import Optional

import typer

from limweight.core.config import settings

from .commands import COMMANDS, configure_logging

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Simple bounded weight modules of sl(inf), o(inf) and sp(inf) and their finite-rank truncations.",
)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Log level on stderr, default LIMWEIGHT_LOG_LEVEL"),
):
    configure_logging(log_level or settings.LOG_LEVEL)


for name, command in COMMANDS.items():
    app.command(name)(command)
