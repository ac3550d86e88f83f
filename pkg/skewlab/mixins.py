from pathlib import Path
from typing import Final


class ConfigFoldersMixin:
    """Mixin for configuration folders."""

    #: Path to the package root
    PACKAGE_ROOT: Final[Path] = Path(__file__).parent
    #: The config file dir
    ETC_DIR: Final[Path] = PACKAGE_ROOT / "etc"
    #: Path to the numerical settings file
    SETTINGS_PATH: Final[Path] = ETC_DIR / "settings.json"
