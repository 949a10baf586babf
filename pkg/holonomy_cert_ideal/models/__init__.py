from . import monomial_order
from . import groebner
