# import Python's standard libraries
import enum

# import third-party libraries
from pydantic import BaseModel, Field, field_validator

@enum.unique
class LogLevel(str, enum.Enum):
    """This enum is used to store the log levels accepted in config.json."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"

class ConfigSchema(BaseModel):
    """This class is used to validate the config.json file."""
    max_n: int = Field(default=10)
    census_cap: int = Field(default=14)
    max_workers: int = Field(default=1)
    log_level: LogLevel = Field(default=LogLevel.INFO)

    @field_validator("max_n")
    @classmethod
    def check_max_n(cls, v: int) -> int:
        if (v < 4):
            raise ValueError("max_n must be at least 4")
        return v

    @field_validator("census_cap")
    @classmethod
    def check_census_cap(cls, v: int) -> int:
        if (v < 5):
            raise ValueError("census_cap must be at least 5")
        return v

    @field_validator("max_workers")
    @classmethod
    def check_max_workers(cls, v: int) -> int:
        if (v < 1):
            raise ValueError("max_workers must be at least 1")
        return v

__all__ = [
    "LogLevel",
    "ConfigSchema"
]
