# hsverify Backend
from hsverify.backend.core import VerificationEngine

__all__ = ["VerificationEngine"]
