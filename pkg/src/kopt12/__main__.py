"""Allow running the command line interface as python3 -m kopt12."""

from .cli import entry

entry()
