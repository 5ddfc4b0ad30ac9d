"""
Plain-text run configuration.

One `key = value` per line, `#` starts a comment. Keys are NumericConfig or
SweepSpec fields (snake_case or dashed), or the problem keys n, s, gamma,
boundary. List values are comma-separated.
"""
from typing import Any, Dict, Mapping, Optional

from pydantic import ValidationError

from hsverify.core.errors import ParameterError
from hsverify.core.params import NumericConfig, RunSettings, SweepSpec

# CLI spellings that differ from the field names
KEY_ALIASES = {
    "h": "h_max",
    "modes": "k_max",
    "lemmas": "with_lemmas",
    "convergence": "with_convergence",
}

NUMERIC_KEYS = frozenset(NumericConfig.model_fields)
SWEEP_KEYS = frozenset(SweepSpec.model_fields)
PROBLEM_KEYS = frozenset({"n", "s", "gamma", "boundary"})
LIST_KEYS = frozenset({"n_values", "s_values", "gamma_fractions"})


def normalize_key(key: str) -> str:
    key = key.strip().replace("-", "_")
    return KEY_ALIASES.get(key, key)


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, Any]:
    """
    Parse config text into a flat {field: value} mapping.

    Raises:
        ParameterError: malformed line, unknown or repeated key.
    """
    values: Dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParameterError(f"[ConfigFile] {source}:{lineno}: expected 'key = value'")
        key = normalize_key(key)
        if key not in NUMERIC_KEYS | SWEEP_KEYS | PROBLEM_KEYS:
            raise ParameterError(f"[ConfigFile] {source}:{lineno}: unknown key '{key}'")
        if key in values:
            raise ParameterError(f"[ConfigFile] {source}:{lineno}: '{key}' set twice")
        value = value.strip()
        if key in LIST_KEYS:
            values[key] = [v.strip() for v in value.split(",") if v.strip()]
        else:
            values[key] = value
    return values


def load_config_file(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ParameterError(f"[ConfigFile] cannot read {path}: {e}") from e
    return parse_config_text(text, source=path)


def resolve_settings(file_values: Optional[Mapping[str, Any]] = None,
                     overrides: Optional[Mapping[str, Any]] = None) -> RunSettings:
    """
    Merge file values with flag overrides (flags win; None means unset) and
    validate the result.

    Raises:
        ParameterError: on any validation failure.
    """
    merged: Dict[str, Any] = dict(file_values or {})
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[normalize_key(key)] = value

    unknown = set(merged) - (NUMERIC_KEYS | SWEEP_KEYS | PROBLEM_KEYS)
    if unknown:
        raise ParameterError(f"[RunSettings] unknown settings: {', '.join(sorted(unknown))}")

    try:
        return RunSettings(
            numeric=NumericConfig(**{k: v for k, v in merged.items() if k in NUMERIC_KEYS}),
            sweep=SweepSpec(**{k: v for k, v in merged.items() if k in SWEEP_KEYS}),
            **{k: v for k, v in merged.items() if k in PROBLEM_KEYS},
        )
    except ValidationError as e:
        detail = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
                           for err in e.errors())
        raise ParameterError(f"[RunSettings] {detail}") from e
