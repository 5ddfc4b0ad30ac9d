import textwrap
import platform
import os
from importlib.metadata import PackageNotFoundError, version
from rich.panel import Panel
from rich.text import Text

from hsverify.cli.branding.console_ui import ConsoleUI
from hsverify.cli.branding.theme_manager import ThemeManager


class BannerRenderer:
    """Renders the startup banner (skipped under --quiet and --dev)."""

    ASCII_ART = """
    ██╗  ██╗███████╗██╗   ██╗███████╗██████╗ ██╗███████╗██╗   ██╗
    ██║  ██║██╔════╝██║   ██║██╔════╝██╔══██╗██║██╔════╝╚██╗ ██╔╝
    ███████║███████╗██║   ██║█████╗  ██████╔╝██║█████╗   ╚████╔╝
    ██╔══██║╚════██║╚██╗ ██╔╝██╔══╝  ██╔══██╗██║██╔══╝    ╚██╔╝
    ██║  ██║███████║ ╚████╔╝ ███████╗██║  ██║██║██║        ██║
    ╚═╝  ╚═╝╚══════╝  ╚═══╝  ╚══════╝╚═╝  ╚═╝╚═╝╚═╝        ╚═╝
    """

    def __init__(self, ui: ConsoleUI, theme_manager: ThemeManager):
        self.ui = ui
        self.theme_manager = theme_manager

    def _get_hardware_info(self) -> str:
        return f"{platform.system()} / {os.cpu_count() or 1} CPU cores available for sweeps"

    def render(self):
        try:
            v = version("hsverify")
        except PackageNotFoundError:
            v = "dev"

        theme = self.theme_manager.get_theme()
        title_text = self.ui.gradient_text(
            textwrap.dedent(self.ASCII_ART).strip(), theme["start_color"], theme["end_color"]
        )
        subtitle = Text(self.theme_manager.get_tagline(), style="italic white")

        panel = Panel(
            Text.assemble(title_text, "\n", subtitle),
            border_style=theme["border_style"],
            title="[bold yellow]★ HSVERIFY ★[/bold yellow]",
            subtitle=f"[dim]v{v}[/dim] [bold {theme['border_style']}] // {theme['name']}[/]",
            padding=(1, 2)
        )
        self.ui.console.print(panel)
        self.ui.console.print(
            f"[dim] [ 0.000s ][/dim] [bold white] [ DETECTED  ] [/bold white] 💻  {self._get_hardware_info()}\n")
