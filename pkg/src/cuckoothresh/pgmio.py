"""Bit-exact PGM (P2/P5, maxval 255) reading and writing.

Only 8-bit files are accepted; other maxvals are rejected rather than
rescaled, because the whole pipeline assumes 256 gray levels.  ``#`` comments
are permitted anywhere in the header up to and including the maxval token.
The writer emits a canonical form (``P5\\n<w> <h>\\n255\\n`` + raw bytes, or
``P2`` with one image row per line), so identical images produce identical
bytes and round-trips are exact.
"""

from importlib import resources

import numpy as np

from .errors import (
    BadMagic,
    MalformedHeader,
    TruncatedData,
    UnsupportedMaxval,
)
from .image import GrayImage, new_image

_WHITESPACE = b" \t\n\r\x0b\x0c"


def _header_tokens(data: bytes):
    """Yield (token, end_offset) for whitespace-separated header tokens,
    skipping '#' comments."""
    pos = 0
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c in _WHITESPACE:
            pos += 1
        elif c == b"#":
            nl = data.find(b"\n", pos)
            pos = n if nl < 0 else nl + 1
        else:
            end = pos
            while end < n and data[end : end + 1] not in _WHITESPACE and data[end : end + 1] != b"#":
                end += 1
            yield data[pos:end], end
            pos = end


def _int_token(token: bytes, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedHeader(f"expected an integer for {what}, got {token!r}") from None


def read_pgm(data: bytes) -> GrayImage:
    """Parse PGM bytes into a validated image (raster order preserved)."""
    if len(data) < 2 or data[:1] != b"P":
        raise BadMagic("not a PGM file (missing P2/P5 signature)")
    tokens = _header_tokens(data)
    try:
        magic, _ = next(tokens)
    except StopIteration:
        raise BadMagic("empty input") from None
    if magic not in (b"P2", b"P5"):
        raise BadMagic(f"unsupported magic {magic!r}, expected P2 or P5")
    fields = []
    header_end = 2
    for what in ("width", "height", "maxval"):
        try:
            token, header_end = next(tokens)
        except StopIteration:
            raise MalformedHeader(f"header ended before {what}") from None
        fields.append(_int_token(token, what))
    width, height, maxval = fields
    if width < 1 or height < 1:
        raise MalformedHeader(f"image dimensions must be positive, got {width}x{height}")
    if maxval != 255:
        raise UnsupportedMaxval(f"only maxval 255 is supported, got {maxval}")
    expected = width * height

    if magic == b"P5":
        if header_end >= len(data) or data[header_end : header_end + 1] not in _WHITESPACE:
            raise MalformedHeader("maxval must be followed by a single whitespace byte")
        start = header_end + 1
        samples = np.frombuffer(data, dtype=np.uint8, offset=start)
        if samples.size < expected:
            raise TruncatedData(f"expected {expected} raster bytes, found {samples.size}")
        if samples.size > expected:
            raise MalformedHeader(f"{samples.size - expected} trailing bytes after the raster")
        return new_image(width, height, samples)

    values = []
    for token, _ in tokens:
        values.append(_int_token(token, "sample"))
        if len(values) > expected:
            raise MalformedHeader(f"more than {expected} samples in the data section")
    if len(values) < expected:
        raise TruncatedData(f"expected {expected} samples, found {len(values)}")
    return new_image(width, height, np.asarray(values, dtype=np.int64))


def write_pgm(image: GrayImage, format: str = "binary") -> bytes:
    """Serialize an image canonically; ``format`` is ``binary`` (P5) or ``ascii`` (P2)."""
    header = f"{image.width} {image.height}\n255\n"
    if format == "binary":
        return b"P5\n" + header.encode("ascii") + image.pixels.tobytes()
    if format == "ascii":
        rows = "\n".join(" ".join(str(v) for v in row) for row in image.pixels)
        return b"P2\n" + header.encode("ascii") + rows.encode("ascii") + b"\n"
    raise ValueError(f"format must be 'binary' or 'ascii', got {format!r}")


def read_pgm_file(path) -> GrayImage:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def write_pgm_file(path, image: GrayImage, format: str = "binary"):
    with open(path, "wb") as fh:
        fh.write(write_pgm(image, format=format))


def load_sample_image() -> GrayImage:
    """The packaged 256x256 test scene (procedurally generated, public domain)."""
    data = resources.files("cuckoothresh.data").joinpath("scene256.pgm").read_bytes()
    return read_pgm(data)
