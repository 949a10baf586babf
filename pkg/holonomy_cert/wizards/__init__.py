from . import commands
from . import selftest
from . import reverify
