"""Exception types shared across the package."""


class CuckooThreshError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(CuckooThreshError):
    """Pixel data does not agree with the declared image dimensions."""


class ValueOutOfRange(CuckooThreshError):
    """A gray value lies outside the 8-bit range [0, 255]."""


class DegenerateImage(CuckooThreshError):
    """The image is constant, so correlation-based quantities are undefined."""


class InvalidBeta(CuckooThreshError):
    """Stability index outside the open interval (0, 2)."""


class InvalidParams(CuckooThreshError):
    """Parameters violate their documented constraints."""


class TooManyLevels(CuckooThreshError):
    """More thresholds requested than distinct integers in [1, 255]."""


class Unrepairable(CuckooThreshError):
    """A raw proposal cannot be coerced into a valid threshold set."""


class InvalidArgs(CuckooThreshError):
    """Arguments to a combinatorial helper are out of domain."""


class TooLarge(CuckooThreshError):
    """Exhaustive enumeration would exceed the configured budget."""


class BadMagic(CuckooThreshError):
    """Input does not start with a P2/P5 PGM signature."""


class UnsupportedMaxval(CuckooThreshError):
    """Only 8-bit PGM files (maxval 255) are accepted."""


class TruncatedData(CuckooThreshError):
    """The PGM sample section ended before width*height samples."""


class MalformedHeader(CuckooThreshError):
    """The PGM header or sample section is structurally invalid."""
