from . import test_alexander
from . import test_certify
from . import test_slope
from . import test_threshold
