# import Python's standard libraries
import json
import pathlib
from typing import Optional, Sequence

# import third-party libraries
from tabulate import tabulate
from colorama import Fore as F

# import local files
if (__package__ is None or __package__ == ""):
    from constants import CONSTANTS as C
    from logger import logger
    from schemas import CheckResult
else:
    from .constants import CONSTANTS as C
    from .logger import logger
    from .schemas import CheckResult

def _cell(value) -> str:
    if (isinstance(value, bool)):
        return "true" if (value) else "false"
    if (value is None):
        return "-"
    if (isinstance(value, (list, tuple))):
        return "[" + ", ".join(_cell(v) for v in value) + "]"
    return str(value)

def _params(params: dict) -> str:
    return " ".join(f"{k}={_cell(v)}" for k, v in params.items())

def render_table(results: Sequence[CheckResult], colour: bool = True) -> str:
    """Render the results as a simple_grid table, one row per check.

    Args:
        results (Sequence[CheckResult]):
            The ordered report rows.
        colour (bool, optional):
            Whether to colour the pass column. Defaults to True.

    Returns:
        str:
            The table followed by a one-line summary.
    """
    timed = any(r.ms is not None for r in results)
    headers = ["Check", "Params", "Expected", "Computed", "Provenance", "Pass"]
    if (timed):
        headers.append("ms")

    rows = []
    for r in results:
        verdict = "PASS" if (r.passed) else "FAIL"
        if (colour):
            verdict = f"{F.LIGHTGREEN_EX if (r.passed) else F.LIGHTRED_EX}{verdict}{F.RESET}"
        row = [r.check, _params(r.params), _cell(r.expected), _cell(r.computed), r.provenance.value, verdict]
        if (timed):
            row.append(_cell(r.ms))
        rows.append(row)

    table = tabulate(
        tabular_data=rows,
        headers=headers,
        tablefmt=C.TABLE_FORMAT,
        disable_numparse=True,
        maxcolwidths=[None, 40, 40, 40, None, None] + ([None] if (timed) else []),
    )
    failed = sum(1 for r in results if (not r.passed))
    return f"{table}\n{len(results) - failed}/{len(results)} checks passed"

def render_json(results: Sequence[CheckResult]) -> str:
    """The deterministic JSON report: an array of CheckResult objects with sorted keys."""
    data = [r.model_dump(mode="json", by_alias=True) for r in results]
    return json.dumps(data, indent=C.JSON_INDENT, sort_keys=True, ensure_ascii=False) + "\n"

def write_json(results: Sequence[CheckResult], path: pathlib.Path) -> Optional[pathlib.Path]:
    """Write the JSON report to path, creating parent folders.

    Returns:
        pathlib.Path | None:
            The path written, or None if the file could not be written.
    """
    path = pathlib.Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(render_json(results))
    except (OSError) as e:
        logger.error(f"Could not write the JSON report to {path}: {e}")
        return None
    logger.info(f"Wrote {len(results)} results to {path}")
    return path

__all__ = [
    "render_table",
    "render_json",
    "write_json"
]
