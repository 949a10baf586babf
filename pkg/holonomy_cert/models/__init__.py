from . import config
from . import certificate
from . import input_file
from . import report
