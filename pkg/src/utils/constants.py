# import Python's standard libraries
import os
import pathlib
import platform
import warnings
from datetime import datetime
from dataclasses import dataclass, field

# import third-party libraries
from colorama import Style

# import local files
if (__package__ is None or __package__ == ""):
    from crucial import __version__
else:
    from .crucial import __version__

# Code to be executed upon import of this module
USER_PLATFORM = platform.system()

DIRECTORIES = {
    "Windows": "AppData/Roaming/weylgap",
    "Linux": ".config/weylgap",
    "Darwin": "Library/Preferences/weylgap"
}

if ("WEYLGAP_APP_DIR" in os.environ):
    appDir = pathlib.Path(os.environ["WEYLGAP_APP_DIR"]).absolute()
else:
    appDir = pathlib.Path.home().absolute()
    if (USER_PLATFORM in DIRECTORIES):
        if (USER_PLATFORM not in ("Windows", "Linux")):
            warnings.warn(
                message="Your operating system has not been tested so you may experience issues.", 
                category=RuntimeWarning
            )
        appDir = appDir.joinpath(DIRECTORIES[USER_PLATFORM])
    else:
        appDir = appDir.joinpath(".weylgap")

@dataclass(frozen=True, repr=False)
class Constants:
    """This dataclass is used to store all the constants used in the application."""
    # Debug mode
    DEBUG_MODE: bool = ("WEYLGAP_DEBUG" in os.environ) # For logger

    # Application constants
    END: str = Style.RESET_ALL
    USER_PLATFORM: str = USER_PLATFORM
    LOGGER_NAME: str = f"weylgap V{__version__}"

    # Application paths
    ROOT_PY_FILE_PATH: pathlib.Path = pathlib.Path(__file__).parent.parent.absolute()
    APP_FOLDER_PATH: pathlib.Path = appDir
    LOG_FOLDER_PATH: pathlib.Path = appDir.joinpath("logs")
    TODAYS_LOG_FILE_PATH: pathlib.Path = LOG_FOLDER_PATH.joinpath(
        f"weylgap_v{__version__}_{datetime.now().strftime('%Y-%m-%d')}.log"
    )
    CONFIG_JSON_FILE_PATH: pathlib.Path = appDir.joinpath("config.json")
    LOG_RETENTION_SECONDS: int = 2592000 # 30 days

    # Environment variables
    MAX_WORKERS_ENV: str = "WEYLGAP_MAX_WORKERS"

    # Verification caps
    DEFAULT_MAX_N: int = 10
    DEFAULT_CENSUS_CAP: int = 14
    DEFAULT_MAX_WORKERS: int = 1
    MIN_WEYL_N: int = 4
    MIN_CENSUS_N: int = 5
    # above this, constructing the action matrices gets slow enough to warn about
    WARN_WEYL_DIM: int = 770
    # Weyl spaces kept in memory
    WEYL_SPACE_CACHE_SIZE: int = 24
    MAX_RECOGNISED_RANK: int = 9
    # randomized property suites
    PROPERTY_SEED: int = 20221014
    PROPERTY_INSTANCES: int = 100

    # Report rendering
    TABLE_FORMAT: str = "simple_grid"
    JSON_INDENT: int = 2
    PROVENANCE_TAGS: tuple[str, ...] = ("PAPER", "TRIVIAL", "DERIVED")
    SUBCOMMANDS: tuple[str, ...] = field(
        default_factory=lambda: (
            "report", "enumerate", "levi", "irrep-dim", "rep-type", 
            "stabilizer", "realforms", "all"
        )
    )

CONSTANTS = Constants()

__all__ = [
    "CONSTANTS"
]
