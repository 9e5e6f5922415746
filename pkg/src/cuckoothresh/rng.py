"""Seeded random state with a documented draw protocol.

Every stochastic routine in this package draws from an :class:`RngState`,
which wraps NumPy's PCG64 bit generator (O'Neill's PCG XSL RR 128/64, seeded
through ``numpy.random.SeedSequence``).  PCG64 is an explicitly specified
generator with published reference outputs, so a run is reproducible from the
64-bit seed plus the draw order, which is documented where each consumer
defines it:

* ``standard_normal()``: NumPy's ziggurat rejection sampler over the raw
  uint64 stream (two draws per Levy step, see :mod:`cuckoothresh.levy`).
* ``integers(lo, hi)``: Lemire bounded rejection over the raw stream (nest
  index picks and threshold sampling).

Independent parallel streams derive their seed as ``base_seed XOR
stream_index``; a single :class:`RngState` must never be shared between
threads.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams

_U64 = 2**64


@dataclass(eq=False)
class RngState:
    """A seed together with the generator state it produced.

    ``seed`` is the effective (possibly stream-derived) seed; ``generator``
    holds the opaque mutable state.  Equal seeds yield bit-identical draw
    sequences.
    """

    seed: int
    generator: np.random.Generator


def make_rng(seed: int, stream: int = 0) -> RngState:
    """Create a deterministic random state for ``seed`` (and optional stream).

    ``stream`` selects an independent substream via ``seed XOR stream``,
    the documented derivation for parallel runs.
    """
    if not 0 <= int(seed) < _U64:
        raise InvalidParams(f"seed must be a 64-bit unsigned integer, got {seed}")
    if not 0 <= int(stream) < _U64:
        raise InvalidParams(f"stream index must be a 64-bit unsigned integer, got {stream}")
    derived = int(seed) ^ int(stream)
    return RngState(seed=derived, generator=np.random.Generator(np.random.PCG64(derived)))
