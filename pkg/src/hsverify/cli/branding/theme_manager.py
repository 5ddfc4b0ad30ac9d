from typing import List, Dict, Any, Optional

import random


class ThemeManager:
    """
    Manages the CLI visual themes and taglines.
    Follows SRP by isolating theme data and selection logic.
    """

    TAGLINES: List[str] = [
        "hsverify: one kernel direction, certified mode by mode.",
        "hsverify: every eigenvalue below the band, bracketed by Sturm counts.",
        "hsverify: the finite-difference spectrum, checked against its closed form.",
        "hsverify: the scaling direction and nothing else.",
        "hsverify: from the Emden-Fowler cylinder to an exit code.",
        "hsverify: margins first, verdicts second.",
    ]

    THEMES: List[Dict[str, Any]] = [
        {
            "name": "SECH SQUARED",
            "start_color": (0, 200, 255),
            "end_color": (120, 80, 255),
            "border_style": "cyan",
        },
        {
            "name": "STURM COUNT",
            "start_color": (255, 180, 0),
            "end_color": (255, 80, 0),
            "border_style": "yellow",
        },
        {
            "name": "CYLINDER",
            "start_color": (0, 230, 120),
            "end_color": (0, 110, 60),
            "border_style": "green",
        },
        {
            "name": "ESSENTIAL SPECTRUM",
            "start_color": (255, 90, 160),
            "end_color": (150, 0, 90),
            "border_style": "magenta",
        },
    ]

    def __init__(self, seed: Optional[int] = None):
        self._active_theme: Optional[Dict[str, Any]] = None
        self._rng = random.Random(seed)

    def get_theme(self) -> Dict[str, Any]:
        if self._active_theme is None:
            self._active_theme = self._rng.choice(self.THEMES)
        return self._active_theme

    def get_tagline(self) -> str:
        return self._rng.choice(self.TAGLINES)
