from . import test_groebner
