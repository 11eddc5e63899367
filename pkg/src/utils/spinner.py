# import Python's standard libraries
import sys
import time
import types
import itertools
import threading
import functools
from typing import Callable, Union, Optional, Type, TextIO

# import third-party libraries
from colorama import Fore as F, Style as S

# import local files
if (__package__ is None or __package__ == ""):
    from spinner_types import SpinnerTypes
else:
    from .spinner_types import SpinnerTypes

def convert_str_to_ansi(colour: Union[str, None]) -> str:
    """Convert a string to ANSI escape code using colorama.

    Args:
        colour (str | None): 
            The colour string to convert. (None is converted to empty string)

    Returns:
        str: The ANSI escape code.
    """
    colour_table = {
        None: "",
        "red": F.RED,
        "green": F.GREEN,
        "yellow": F.YELLOW,
        "blue": F.BLUE,
        "cyan": F.CYAN,
        "light_red": F.LIGHTRED_EX,
        "light_green": F.LIGHTGREEN_EX,
        "light_yellow": F.LIGHTYELLOW_EX,
        "light_cyan": F.LIGHTCYAN_EX,
    }
    if (isinstance(colour, str)):
        colour = colour.lower()

    if (colour not in colour_table):
        raise ValueError("Invalid colour option.")

    return colour_table[colour]

def format_status_msg(msg: Union[str, None], success: bool) -> Union[str, None]:
    """Prefix a status message with a check mark or a cross.

    Args:
        msg (str | None):
            The message to format.
        success (bool):
            Whether to use the green check mark or the red cross.

    Returns:
        str | None: 
            The formatted message.
    """
    if (msg is None):
        return
    if (success):
        return " ".join([f"{F.LIGHTGREEN_EX}✓", msg, S.RESET_ALL])
    return " ".join([f"{F.LIGHTRED_EX}✗", msg, S.RESET_ALL])

class Spinner:
    """Spinner class for displaying a spinner animation
    with a text message in the terminal on a separate thread.

    The animation is written to standard error so that the 
    table or JSON written to standard output is left untouched.
    Nothing is drawn when the stream is not a terminal.
    """
    CLEAR_LINE = "\033[K"
    def __init__(self, 
        message: str,
        colour: Optional[str] = None,
        spinner_type: str = "dots",
        completion_msg: Optional[str] = None,
        cancelled_msg: Optional[str] = None,
        stream: Optional[TextIO] = None) -> None:
        """Constructs the spinner object.

        Args:
            message (str):
                The message to display along with the spinner.
            colour (str | None):
                The colour of the spinner. (default: None for default terminal colour)
            spinner_type (str):
                The type of spinner to display. (default: "dots")
            completion_msg (str | None):
                The message to display when the spinner has stopped.
            cancelled_msg (str | None):
                The message to display when interrupted by a KeyboardInterrupt.
            stream (TextIO | None):
                The stream to draw on. (default: sys.stderr)
        """
        spinner_info = self.load_spinner(spinner_type=spinner_type)
        self.__spinner = itertools.cycle(spinner_info["frames"])
        self.__interval = 0.001 * spinner_info["interval"]
        self.message = message
        self.completion_msg = format_status_msg(completion_msg, success=True)
        self.cancelled_msg = format_status_msg(cancelled_msg, success=False)
        self.__colour = convert_str_to_ansi(colour)
        self.__stream = stream if (stream is not None) else sys.stderr
        self.__enabled = hasattr(self.__stream, "isatty") and self.__stream.isatty()

        self.__spinner_thread = None
        self.__stop_event = None
        self.__total = None
        self.__done = 0

    def track(self, total: int) -> "Spinner":
        """Show a [done/total] counter in front of the message."""
        self.__total = total
        self.__done = 0
        return self

    def advance(self, label: Optional[str] = None) -> None:
        """Count one finished check and show its label."""
        self.__done += 1
        if (label is not None):
            self.message = label

    @property
    def progress(self) -> str:
        if (self.__total is None):
            return ""
        return f"[{self.__done}/{self.__total}] "

    @staticmethod
    def load_spinner(spinner_type: str) -> dict:
        """Load the spinner type from the SpinnerTypes Enum object."""
        if (spinner_type not in SpinnerTypes.__members__):
            raise ValueError(
                f"Invalid spinner type, '{spinner_type}'. " \
                f"Valid types: {', '.join(SpinnerTypes.__members__)}"
            )
        return SpinnerTypes[spinner_type].value

    @property
    def enabled(self) -> bool:
        return self.__enabled

    def __write(self, *parts: str) -> None:
        self.__stream.write("".join(parts))
        self.__stream.flush()

    def __run_spinner(self) -> None:
        """Run and display the spinner animation with the text message."""
        self.__write("\r", self.CLEAR_LINE)
        while (not self.__stop_event.is_set()):
            self.__write(
                f"\r{self.__colour}", next(self.__spinner), " ", self.progress, self.message,
                S.RESET_ALL, self.CLEAR_LINE
            )
            time.sleep(self.__interval)

    def start(self) -> "Spinner":
        """Start the spinner and returns self."""
        if (not self.__enabled):
            return self

        self.__stop_event = threading.Event()
        self.__spinner_thread = threading.Thread(target=self.__run_spinner, daemon=True)
        self.__spinner_thread.start()
        return self

    def stop(self, manually_stopped: Optional[bool] = False, error: Optional[bool] = False) -> None:
        """Stop the spinner.

        Args:
            manually_stopped (bool):
                Whether the spinner was stopped manually. (default: False)
            error (bool):
                Whether the spinner was stopped due to an error. (default: False)

        Returns:
            None
        """
        if (self.__spinner_thread is not None and self.__spinner_thread.is_alive()):
            self.__stop_event.set()
            self.__spinner_thread.join()

        if (not self.__enabled):
            return

        if (not error):
            msg = self.cancelled_msg if (manually_stopped) else self.completion_msg
            if (msg is not None):
                self.__write("\r", self.CLEAR_LINE, msg, "\n")
                return

        self.__write("\r", self.CLEAR_LINE, S.RESET_ALL)

    def __enter__(self) -> "Spinner":
        """Start the spinner object and to be used in a context manager and returns self."""
        return self.start()

    def __exit__(self, 
        exc_type: Optional[Type[BaseException]],
        exc: Optional[BaseException],
        traceback: Optional[types.TracebackType]) -> None:
        """Stops the spinner when used in a context manager."""
        if (exc_type is not None):
            if (issubclass(exc_type, KeyboardInterrupt)):
                self.stop(manually_stopped=True)
            else:
                self.stop(error=True)
        else:
            self.stop()

    def __call__(self, func: Callable) -> Callable:
        """Allow the spinner object to be used as a regular function decorator."""
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with self:
                return func(*args, **kwargs)
        return wrapper

    def __repr__(self) -> str:
        return f"Spinner<message={self.message}, progress={self.progress!r}, enabled={self.__enabled}>"

__all__ = [
    "Spinner",
    "convert_str_to_ansi",
    "format_status_msg"
]
