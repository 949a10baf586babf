# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging

from holonomy_cert_base.exceptions import UserError

_logger = logging.getLogger(__name__)

try:
    import chardet
except ImportError:
    _logger.warning(
        "chardet library not found, please install it "
        "from https://pypi.org/project/chardet/"
    )


def decode_input(data, encoding=None):
    """Decode ``data`` as ``encoding`` (UTF-8 by default), falling back to
    the encoding chardet detects."""
    try:
        return data.decode(encoding or "utf-8")
    except UnicodeDecodeError:
        detected = chardet.detect(data).get("encoding")
        if not detected:
            raise UserError("No valid encoding was found for the input file.")
        _logger.info("Input is not %s; decoding as detected %s", encoding or "utf-8", detected)
        return data.decode(detected)


def read_input(path, encoding=None):
    try:
        with open(path, "rb") as handle:
            data = handle.read()
    except OSError as err:
        raise UserError("Cannot read %s: %s." % (path, err.strerror or err)) from err
    _logger.info("Read %d bytes from %s", len(data), path)
    return decode_input(data, encoding)
