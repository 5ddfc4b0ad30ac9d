from typing import Any, Dict, List, Optional


class FlagParser:
    """
    Translates parsed CLI arguments into settings overrides.

    Absent flags map to None and leave config-file values in place.
    """

    # argparse dest -> settings key
    FLAG_KEYS = {
        "T": "T",
        "h": "h_max",
        "zero_tol": "zero_tol",
        "separation": "separation",
        "modes": "k_max",
        "jobs": "jobs",
        "timing": "timing",
        "lemmas": "with_lemmas",
        "convergence": "with_convergence",
        "n": "n",
        "s": "s",
        "gamma": "gamma",
        "boundary": "boundary",
        "n_values": "n_values",
        "s_values": "s_values",
        "gamma_fractions": "gamma_fractions",
        "include_boundary": "include_boundary",
    }

    @staticmethod
    def split_list(value: Optional[str]) -> Optional[List[str]]:
        """'3,4,5' -> ['3', '4', '5']; element types are validated downstream."""
        if value is None:
            return None
        return [v.strip() for v in value.split(",") if v.strip()]

    @classmethod
    def overrides(cls, args: Any) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for dest, key in cls.FLAG_KEYS.items():
            value = getattr(args, dest, None)
            if dest in ("n_values", "s_values", "gamma_fractions"):
                value = cls.split_list(value)
            out[key] = value
        return out
