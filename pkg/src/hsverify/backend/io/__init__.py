# IO Manager - Single Responsibility: config files, report export and report reading
from hsverify.backend.io.manager import IOManager
from hsverify.backend.io.config import parse_config_text, load_config_file, resolve_settings

__all__ = ["IOManager", "parse_config_text", "load_config_file", "resolve_settings"]
