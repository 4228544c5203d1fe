import json
import math

import numpy as np

from bpyutils import log
from bpyutils.util.system import write

from nlsid.__attr__       import __name__ as NAME
from nlsid.const          import CONST
from nlsid.design.grid    import FrequencyGrid
from nlsid.exception      import RecordFormatError
from nlsid.spectral       import Record

logger = log.get_logger(name = NAME)

_DTYPE       = np.dtype("<f8")
_END_HEADER  = b"end_header\n"
_HEADER_KEYS = ("version", "sample_rate", "n_samples", "n_periods", "n_realizations", "channels", "grid", "provenance")

def _header(record):
    lines = [
        CONST["record_magic"],
        "version: %s"        % CONST["record_version"],
        "sample_rate: %r"    % float(record.sample_rate),
        "n_samples: %s"      % record.n_samples,
        "n_periods: %s"      % record.n_periods,
        "n_realizations: %s" % record.n_realizations,
        "channels: %s"       % ",".join(record.channel_names),
        "grid: %s"           % json.dumps(record.grid.to_dict(), sort_keys = True),
        "provenance: %s"     % json.dumps(record.provenance, sort_keys = True)
    ]
    return ("\n".join(lines) + "\n").encode("utf-8") + _END_HEADER

def write_record(record, path):
    """
    Text header followed by little-endian float64 samples, channel after channel, each in
    realization, period, sample order.
    """
    with open(path, "wb") as f:
        f.write(_header(record))

        for name in record.channel_names:
            f.write(np.ascontiguousarray(record.channels[name], dtype = _DTYPE).tobytes())

    logger.info("Record written to %s." % path)

    return path

def _parse_header(content):
    offset  = 0
    fields  = dict()
    magic   = CONST["record_magic"].encode("utf-8") + b"\n"

    if not content.startswith(magic):
        raise RecordFormatError("Not a record file: missing '%s' magic." % CONST["record_magic"], offset = 0)

    offset = len(magic)

    while True:
        end = content.find(b"\n", offset)

        if end < 0:
            raise RecordFormatError("Header is not terminated by 'end_header'.", offset = offset)

        line = content[offset:end + 1]

        if line == _END_HEADER:
            return fields, end + 1

        key, sep, value = line.decode("utf-8").rstrip("\n").partition(": ")

        if not sep or key not in _HEADER_KEYS:
            raise RecordFormatError("Malformed header line '%s'." % line.decode("utf-8", "replace").strip(), offset = offset)

        fields[key] = value
        offset      = end + 1

def read_record(path):
    with open(path, "rb") as f:
        content = f.read()

    fields, offset = _parse_header(content)

    missing = [key for key in _HEADER_KEYS if key not in fields]
    if missing:
        raise RecordFormatError("Header misses %s." % ", ".join(missing), offset = offset)

    if int(fields["version"]) != CONST["record_version"]:
        raise RecordFormatError("Unsupported record version %s." % fields["version"], offset = 0)

    M, P, N  = int(fields["n_realizations"]), int(fields["n_periods"]), int(fields["n_samples"])
    channels = fields["channels"].split(",")
    size     = M * P * N
    expected = len(channels) * size * _DTYPE.itemsize
    found    = len(content) - offset

    if found != expected:
        raise RecordFormatError("Data holds %s bytes, expected %s channels of M*P*N = %s samples (%s bytes)."
            % (found, len(channels), size, expected), offset = offset + min(found, expected))

    data = np.frombuffer(content, dtype = _DTYPE, offset = offset).reshape(len(channels), M, P, N)

    return Record(
        sample_rate    = float(fields["sample_rate"]),
        n_samples      = N,
        n_periods      = P,
        n_realizations = M,
        channels       = {name: data[i].copy() for i, name in enumerate(channels)},
        grid           = FrequencyGrid.from_dict(json.loads(fields["grid"])),
        provenance     = json.loads(fields["provenance"])
    )

def to_jsonable(value):
    """
    Plain JSON types: complex numbers as [re, im], arrays as lists, non-finite floats as null.
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [to_jsonable(float(value.real)), to_jsonable(float(value.imag))]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value

def dumps_bundle(payload):
    return json.dumps(to_jsonable(payload), sort_keys = True, indent = 2, allow_nan = False)

def write_bundle(bundle, path):
    write(path, dumps_bundle(bundle.to_dict()), force = True)
    logger.info("Result bundle written to %s." % path)
    return path
