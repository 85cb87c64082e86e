"""Main application class: argument parsing, logging setup and exit-code mapping."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, NoReturn, Optional, Sequence

from .cli import COMMANDS
from .core.config import AppConfig, Settings
from .core.errors import DomainError, ExitCode, NonConvergenceError, UsageError, VmregError
from .models import TEST_FUNCTIONS, ModelKind
from .potential import Strategy
from .verify import SUITES

logger = logging.getLogger(__name__)


class UsageArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose errors exit with ExitCode.USAGE (argparse uses 2)."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


class VmregApp:
    """The vmreg command-line application."""

    def __init__(self):
        """Initialize the application."""
        self.parser = UsageArgumentParser(
            prog=AppConfig.APP_NAME,
            description="Regularized 1D Coulomb potentials V_m and effective 1D atoms in a strong magnetic field.",
        )
        self._setup_global_options()
        self._setup_commands()

    def _setup_global_options(self) -> None:
        self.parser.add_argument("--version", action="version", version=f"%(prog)s {AppConfig.APP_VERSION}")
        self.parser.add_argument("--config", type=Path, default=None, help="JSON settings file")
        self.parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    def _setup_commands(self) -> None:
        """Register one sub-parser per command."""
        commands = self.parser.add_subparsers(dest="command", metavar="COMMAND")
        commands.required = True

        p = commands.add_parser("eval", help="evaluate V_m(x)")
        p.add_argument("--m", type=float, required=True)
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--method", choices=[s.value for s in Strategy], default=Strategy.AUTO.value)
        p.add_argument("--tol", type=float, default=None, help="relative quadrature tolerance")

        p = commands.add_parser("table", help="tabulate V_m over an x grid")
        p.add_argument("--m-list", required=True, help="comma-separated orders, e.g. 0,1,2")
        p.add_argument("--x-min", type=float, required=True)
        p.add_argument("--x-max", type=float, required=True)
        p.add_argument("--points", type=int, default=101)
        p.add_argument("--log", action="store_true", help="logarithmic spacing")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--tol", type=float, default=None)

        p = commands.add_parser("verify", help="run verification suites")
        p.add_argument("--suite", choices=("all",) + SUITES, default="all")
        p.add_argument("--report", choices=["json", "text"], default="text")
        p.add_argument("--perturb-upper", type=float, default=0.0, help="shift every upper bracket by this amount")
        p.add_argument("--quick", action="store_true", help="coarse grids")

        p = commands.add_parser("pair", help="relative-momentum weights of a Landau pair")
        p.add_argument("--m1", type=int, required=True)
        p.add_argument("--m2", type=int, required=True)
        p.add_argument("--antisymmetrize", action="store_true")
        p.add_argument("--decimal", action="store_true", help="print weights as floats")

        p = commands.add_parser("avg", help="evaluate V_av^N(x)")
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--x", type=float, required=True)

        p = commands.add_parser("fourier", help="Fourier transform of V_m at xi")
        p.add_argument("--m", type=float, required=True)
        p.add_argument("--xi", type=float, required=True)
        p.add_argument("--direct", action="store_true", help="windowed oscillatory quadrature")

        p = commands.add_parser("delta", help="delta-limit pairing of the scaled potential")
        p.add_argument("--m", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)
        p.add_argument("--phi", choices=sorted(TEST_FUNCTIONS), default="gaussian")
        p.add_argument("--mass", action="store_true", help="print the mass over |x| <= 1 instead")

        p = commands.add_parser("spectrum", help="ground state of the effective 1D Hamiltonian")
        p.add_argument("--model", choices=[k.value for k in ModelKind], required=True)
        p.add_argument("--N", type=int, choices=[1, 2], required=True)
        p.add_argument("--Z", type=float, required=True)
        p.add_argument("--B", type=float, required=True)
        p.add_argument("--grid-points", type=int, default=None)
        p.add_argument("--half-width", type=float, default=None)
        p.add_argument("--tol", type=float, default=None, help="eigen residual tolerance")
        p.add_argument("--format", choices=["text", "json"], default="text")

    def _setup_logging(self, verbose: bool) -> None:
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
            force=True,
        )

    def _load_settings(self, args: argparse.Namespace) -> Settings:
        """Settings file first, then the flags that override it."""
        try:
            settings = Settings.from_file(args.config)
            if args.command in ("eval", "table"):
                settings = settings.with_overrides({"rel_tol": args.tol})
            settings.quadrature_spec()
            return settings
        except DomainError as e:
            raise UsageError(str(e))

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse ``argv``, dispatch to the command handler and map errors to exit codes.

        Returns:
            The process exit code
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code or 0)

        self._setup_logging(args.verbose)
        try:
            settings = self._load_settings(args)
            return int(COMMANDS[args.command](args, settings, sys.stdout))
        except UsageError as e:
            return self._fail(ExitCode.USAGE, e)
        except DomainError as e:
            return self._fail(ExitCode.DOMAIN, e)
        except NonConvergenceError as e:
            return self._fail(ExitCode.NON_CONVERGENCE, e)
        except VmregError as e:
            return self._fail(ExitCode.DOMAIN, e)

    def _fail(self, code: ExitCode, error: Exception) -> int:
        logger.debug("Exit %d after %s", int(code), type(error).__name__)
        print(f"{AppConfig.APP_NAME}: error: {error}", file=sys.stderr)
        return int(code)


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point."""
    try:
        return VmregApp().run(argv)
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return 130
