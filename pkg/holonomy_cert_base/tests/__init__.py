from . import test_poly
from . import test_sym_matrix
from . import test_text_format
