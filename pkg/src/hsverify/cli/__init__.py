"""
hsverify CLI Module
"""

from hsverify.cli.main import setup_parser, launch_headless
from hsverify.cli.branding import ThemeManager, ConsoleUI, BannerRenderer

__all__ = ["setup_parser", "launch_headless", "ThemeManager", "ConsoleUI", "BannerRenderer"]
