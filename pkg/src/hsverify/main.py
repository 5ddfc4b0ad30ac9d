import sys
from typing import List, Optional

from hsverify.cli import (
    ThemeManager, ConsoleUI, BannerRenderer, setup_parser, launch_headless
)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the hsverify CLI.
    Parses arguments, renders the banner and delegates to the headless pipeline.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = setup_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 3

    theme_manager = ThemeManager()
    ui = ConsoleUI(theme_manager, quiet=args.quiet)

    if not (args.dev or args.quiet):
        try:
            BannerRenderer(ui, theme_manager).render()
        except Exception:
            pass

    return launch_headless(args, ui, theme_manager)


if __name__ == "__main__":
    sys.exit(main())
