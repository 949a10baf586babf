from . import dense
from . import interval
from . import sturm
from . import bounds
from . import domain
