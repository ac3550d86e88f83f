"""skewlab: modified generalized Wigner-Yanase-Dyson skew information toolkit."""

from typing import Final

__version__: Final[str] = "0.1.0"
