from .config import *
from .check_result import *
