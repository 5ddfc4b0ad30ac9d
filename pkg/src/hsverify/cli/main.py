import sys
import argparse

from hsverify.cli.headless import run_headless


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 3 (invalid input)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    """Numeric, output and execution flags shared by every subcommand."""
    p.add_argument("--T", type=float, help="Half-width of the truncated line (default: automatic)")
    p.add_argument("--h", type=float, help="Maximum grid spacing (default 0.005)")
    p.add_argument("--zero-tol", type=float, help="Zero band half-width (default 5e-5)")
    p.add_argument("--separation", type=float, help="Required spectral gap (default 1e-2)")
    p.add_argument("--modes", type=int, help="Highest spherical-harmonic level k (default 8)")
    p.add_argument("--format", "-f", default="json", choices=["json", "csv"], help="Report format")
    p.add_argument("--out", "-o", help="Report output path")
    p.add_argument("--jobs", "-j", type=int, help="Worker processes (default: CPU count)")
    p.add_argument("--config", "-c", help="Plain-text key = value config file")
    p.add_argument("--timing", action="store_true", default=None,
                   help="Record per-stage timing in the report")
    p.add_argument("--quiet", "-q", action="store_true",
                   help="Suppress non-essential output (errors only)")
    p.add_argument("--dev", action="store_true", help="Enable Dev Mode (No Banner, Verbose Logs)")


def _add_triple(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="Dimension n >= 3")
    p.add_argument("--s", type=float, help="Weight exponent s in [0, 2)")
    p.add_argument("--gamma", type=float, help="Hardy coefficient gamma in [0, (n-2)^2/4)")
    p.add_argument("--boundary", action="store_true", default=None,
                   help="Boundary mode: admit gamma = s = 0 (expects kernel dimension n+1)")


def _add_grid(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-values", help="Comma-separated dimensions (default 3,4,5,6)")
    p.add_argument("--s-values", help="Comma-separated s values (default 0,0.5,1,1.5)")
    p.add_argument("--gamma-fractions",
                   help="Comma-separated fractions of (n-2)^2/4 in [0, 1) (default 0,0.25,0.5,0.9)")
    p.add_argument("--include-boundary", action="store_true", default=None,
                   help="Add the gamma = s = 0 boundary triple for every n")


def setup_parser():
    """
    Defines the argument parser and subparsers for the CLI.
    Returns the parser object.
    """
    parser = ArgumentParser(
        prog="hsverify", description="Hardy-Sobolev nondegeneracy verifier")
    subparsers = parser.add_subparsers(dest="command", help="Available subcommands")

    # 1. VERIFY
    verify_parser = subparsers.add_parser("verify", help="Certify the kernel dimension of one triple")
    _add_triple(verify_parser)
    verify_parser.add_argument("--lemmas", action="store_true", default=None,
                               help="Also run the lemma suite")
    verify_parser.add_argument("--convergence", action="store_true", default=None,
                               help="Also run the h-refinement and truncation study")
    _add_common(verify_parser)

    # 2. SWEEP
    sweep_parser = subparsers.add_parser("sweep", help="Verify a grid of (n, s, gamma) triples")
    _add_grid(sweep_parser)
    sweep_parser.add_argument("--lemmas", action="store_true", default=None,
                              help="Also run the lemma suite per triple")
    sweep_parser.add_argument("--convergence", action="store_true", default=None,
                              help="Also run the h-refinement and truncation study per triple")
    _add_common(sweep_parser)

    # 3. IDENTITIES
    identities_parser = subparsers.add_parser(
        "identities", help="Emden-Fowler identities over the sweep triples")
    _add_grid(identities_parser)
    _add_common(identities_parser)

    # 4. LEMMAS
    lemmas_parser = subparsers.add_parser("lemmas", help="Lemma-level checks for one triple")
    _add_triple(lemmas_parser)
    _add_common(lemmas_parser)

    # 5. REPORT
    report_parser = subparsers.add_parser(
        "report", help="Re-emit a JSON report or write plot-ready profile CSVs")
    report_parser.add_argument("--input", "-i", help="JSON report to re-emit in --format")
    report_parser.add_argument("--profiles", action="store_true",
                               help="Write U_hat, U_hat', V, Z_hat and A_0 eigenfunctions as CSV")
    _add_triple(report_parser)
    _add_common(report_parser)

    return parser


def launch_headless(args, ui, theme_manager) -> int:
    """Executes the headless pipeline and returns its exit code."""
    if args.dev:
        ui.log_step("Dev Mode Enabled (Headless)", module="DEV-MODE", icon="🛠️")
    return run_headless(args, ui, theme_manager)
