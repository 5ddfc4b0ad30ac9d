from hsverify.backend import VerificationEngine
from hsverify.main import main as RunHsVerifyCLI

__all__ = ["VerificationEngine", "RunHsVerifyCLI"]

__version__ = "1.0.0"
