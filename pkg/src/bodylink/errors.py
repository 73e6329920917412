"""Exception types raised across the toolkit."""


class BodylinkError(Exception):
    """Base class for all toolkit errors."""


# -- framing ---------------------------------------------------------------

class Truncated(BodylinkError):
    """Not enough bits/bytes to extract the requested structure."""


class CrcMismatch(BodylinkError):
    """Received checksum does not match the recomputed one.

    Carries the received payload and crc bytes so diagnostics can report
    the corrupted candidate.
    """

    def __init__(self, payload: int, crc: int):
        super().__init__(
            f"crc mismatch: payload=0x{payload:02X} crc=0x{crc:02X}"
        )
        self.payload = payload
        self.crc = crc


# -- dsp -------------------------------------------------------------------

class InvalidBand(BodylinkError, ValueError):
    """Band edges are non-positive or violate Nyquist."""


class BadWindow(BodylinkError, ValueError):
    """Averaging window/hop combination is unusable."""


class RateTooLow(BodylinkError, ValueError):
    """Sample rate too low for three distinct per-millisecond probes."""


class IncompatibleRate(BodylinkError, ValueError):
    """Bit rate does not evenly divide the symbol rate."""


# -- modem -----------------------------------------------------------------

class InvalidConfig(BodylinkError, ValueError):
    """Modem configuration violates its invariants."""


class NonIntegralBitPeriod(InvalidConfig):
    """sample_rate / bit_rate is not a whole number of samples."""


# -- channel ---------------------------------------------------------------

class BadDropout(BodylinkError, ValueError):
    """Dropout intervals are malformed, overlapping, or out of range."""


class LengthMismatch(BodylinkError, ValueError):
    """Two buffers that must be the same length are not."""


# -- beacon ----------------------------------------------------------------

class NotUidFrame(BodylinkError):
    """Advertisement frame is not an Eddystone-UID frame."""


class NonMonotonicTime(BodylinkError, ValueError):
    """An input timestamp went backwards."""


# -- file formats ----------------------------------------------------------

class WavFormatError(BodylinkError, ValueError):
    """WAV file is missing, malformed, or not mono 16-bit PCM."""


class TraceFormatError(BodylinkError, ValueError):
    """Beacon trace or registry file is malformed.

    ``line`` is the 1-based line number of the offending record when the
    error comes from a trace file.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
