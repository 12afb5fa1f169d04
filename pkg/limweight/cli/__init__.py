# Command-line surface of limweight
from .app import app
from .commands import COMMANDS, emit

__ALL__ = (
    'app',
    'COMMANDS',
)
