# import Python's standard libraries
import os
import json
import time
from typing import Union, Optional, Any

# import local files
if (__package__ is None or __package__ == ""):
    from schemas.config import ConfigSchema
    from errors import InvalidParameterError
    from constants import CONSTANTS as C
    from logger import logger
else:
    from .schemas.config import ConfigSchema
    from .errors import InvalidParameterError
    from .constants import CONSTANTS as C
    from .logger import logger

# import third-party libraries
from colorama import Fore as F
from pydantic import BaseModel, ValidationError

def validate_schema(schema: type[BaseModel], data: Union[str, dict, list], 
                    return_bool: Optional[bool] = True, log_failure: Optional[bool] = True) -> Union[bool, BaseModel]:
    """Validates the data against the schema

    Args:
        schema (type[BaseModel]): 
            The pydantic base model class to validate against
        data (str | dict | list):
            The data to validate
        return_bool (bool, optional):
            Whether to return a boolean or the pydantic base model object. Defaults to True.
        log_failure (bool, optional):
            Whether to log the failure of validation. Defaults to True.

    Returns:
        Union[bool, BaseModel]:
            False if the data is invalid, otherwise the pydantic base model object with the data or a boolean.
    """
    if (not isinstance(data, (str, dict, list))):
        return False

    try:
        if (isinstance(data, str)):
            pydantic_obj = schema.model_validate_json(data)
        else:
            pydantic_obj = schema.model_validate(data)
        return pydantic_obj if (not return_bool) else True
    except (ValidationError) as e:
        if (log_failure):
            logger.info(
                "Data is invalid when validated against the schema, " \
                f"{schema.__name__}: {e}\n\nData: {data}"
            )
        return False

def print_danger(message: Any, **kwargs) -> None:
    """Print a message in red.

    Args:
        message (Any):
            The message to print.
        kwargs:
            Any keyword arguments to pass to the print function.

    Returns:
        None
    """
    print(f"{F.LIGHTRED_EX}{message}{F.RESET}", **kwargs)

def print_warning(message: Any, **kwargs) -> None:
    """Print a message in light yellow."""
    print(f"{F.LIGHTYELLOW_EX}{message}{F.RESET}", **kwargs)

def load_configs() -> ConfigSchema:
    """Load the configs from the config file.

    The WEYLGAP_MAX_WORKERS environment variable, when set to 
    a positive integer, overrides the saved max_workers value.

    Returns:
        ConfigSchema: 
            The configs loaded from the config file.
    """
    configs = {}
    if (C.CONFIG_JSON_FILE_PATH.exists() and C.CONFIG_JSON_FILE_PATH.is_file()):
        try:
            with open(C.CONFIG_JSON_FILE_PATH, "r") as f:
                configs = json.load(f)
        except (json.JSONDecodeError, OSError) as e:
            logger.warning(f"Could not read {C.CONFIG_JSON_FILE_PATH}: {e}")
            configs = None

    schema_obj = validate_schema(schema=ConfigSchema, data=configs, return_bool=False)
    if (schema_obj is False):
        # If the config JSON data is invalid,
        # reset the config file to the default values 
        # and save it to the config JSON file.
        schema_obj = ConfigSchema()
        edit_configs(new_configs=schema_obj.model_dump(mode="json"))

    env_workers = os.environ.get(C.MAX_WORKERS_ENV)
    if (env_workers is not None):
        try:
            workers = int(env_workers)
        except (ValueError):
            workers = 0
        if (workers >= 1):
            schema_obj = schema_obj.model_copy(update={"max_workers": workers})
        else:
            logger.warning(f"Ignoring {C.MAX_WORKERS_ENV}={env_workers!r}, expected a positive integer")

    return schema_obj

def edit_configs(new_configs: dict) -> None:
    """Edit the configs in the config file.

    Args:
        new_configs (dict):
            The new configuration to save to the config file.

    Returns:
        None
    """
    try:
        C.APP_FOLDER_PATH.mkdir(parents=True, exist_ok=True)
        with open(C.CONFIG_JSON_FILE_PATH, "w") as f:
            json.dump(new_configs, f, indent=4)
    except (OSError) as e:
        logger.warning(f"Could not save configs to {C.CONFIG_JSON_FILE_PATH}: {e}")

def delete_empty_and_old_logs() -> None:
    """Delete all empty log files and log files
    older than 30 days except for the current day's log file.

    Returns:
        None
    """
    if (not C.LOG_FOLDER_PATH.is_dir()):
        return

    for log_file in C.LOG_FOLDER_PATH.iterdir():
        if (log_file.is_file() and log_file != C.TODAYS_LOG_FILE_PATH):
            file_info = log_file.stat()
            if (file_info.st_size == 0 or file_info.st_mtime < (time.time() - C.LOG_RETENTION_SECONDS)):
                try:
                    log_file.unlink()
                except (PermissionError, FileNotFoundError):
                    pass

def parse_int_list(raw: str, name: str) -> list[int]:
    """Parse a comma-separated list of integers such as "0,1,0".

    Args:
        raw (str):
            The raw command line value.
        name (str):
            The flag name, used in the error message.

    Returns:
        list[int]:
            The parsed integers.

    Raises:
        InvalidParameterError:
            If any item is not an integer.
    """
    try:
        return [int(part) for part in raw.split(",") if (part.strip() != "")]
    except (ValueError):
        raise InvalidParameterError(f"{name} must be a comma-separated list of integers, got {raw!r}")

__all__ = [
    "validate_schema",
    "print_danger",
    "print_warning",
    "load_configs",
    "edit_configs",
    "delete_empty_and_old_logs",
    "parse_int_list"
]
