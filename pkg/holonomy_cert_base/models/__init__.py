from . import rational
from . import poly
from . import text_format
from . import sym_matrix
from . import group_word
from . import proof
