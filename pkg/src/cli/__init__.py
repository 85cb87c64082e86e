"""Command handlers and output formatting for the vmreg command line."""

from .commands import COMMANDS
from .output import format_number, json_safe, write_csv, write_json, write_pairs

__all__ = ["COMMANDS", "format_number", "json_safe", "write_csv", "write_json", "write_pairs"]
