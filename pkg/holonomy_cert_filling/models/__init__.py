from . import slope
from . import certify
from . import threshold
from . import alexander
