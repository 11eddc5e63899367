from .crucial import  __version__, __author__, __license__, __copyright__
from .constants import CONSTANTS as C
from .errors import *
from .functional import *
from .logger import *
from .spinner import *
from .schemas import *
from .report import *
from .suites import *
