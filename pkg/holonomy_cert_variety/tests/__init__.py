from . import test_a_polynomial
from . import test_character_curve
from . import test_irreducibility
from . import test_presentation
from . import test_reconstruction
from . import test_trace_algebra
from . import test_unitarity
