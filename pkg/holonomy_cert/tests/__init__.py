from . import test_config
from . import test_certificate
from . import test_input_file
from . import test_report
from . import test_selftest
from . import test_cli
