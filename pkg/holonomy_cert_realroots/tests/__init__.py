from . import test_bounds
from . import test_domain
from . import test_sturm
