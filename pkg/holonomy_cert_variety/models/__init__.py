from . import presentation
from . import trace_algebra
from . import irreducibility
from . import character_curve
from . import unitarity
from . import reconstruction
from . import a_polynomial
