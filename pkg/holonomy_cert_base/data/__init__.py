from . import m137
