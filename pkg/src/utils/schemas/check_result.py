# import Python's standard libraries
import enum
from typing import Any, Optional

# import third-party libraries
from pydantic import BaseModel, ConfigDict, Field

@enum.unique
class Provenance(str, enum.Enum):
    """Where the expected value of a check comes from."""
    PAPER = "PAPER"         # a published table or statement
    TRIVIAL = "TRIVIAL"     # follows directly from definitions
    DERIVED = "DERIVED"     # frozen output of an in-repo oracle

class CheckResult(BaseModel):
    """One row of a verification report.

    The JSON form has the fields
    {check, params, expected, computed, provenance, pass, ms}.
    Values are rendered to JSON-safe form beforehand (rationals as "num/den").
    """
    model_config = ConfigDict(populate_by_name=True)

    check: str
    params: dict[str, Any] = Field(default_factory=dict)
    expected: Any = None
    computed: Any = None
    provenance: Provenance = Provenance.DERIVED
    passed: bool = Field(default=False, alias="pass")
    ms: Optional[float] = None
    oracle: Optional[str] = Field(default=None, exclude=True)

__all__ = [
    "Provenance",
    "CheckResult"
]
