"""SplitMix64: the fixed portable generator behind every seeded run.

Chosen because its output is a pure function of a 64-bit state, so candidate
streams can be derived per index and replayed bit-exactly on any platform.
"""

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The SplitMix64 finalizer (Stafford variant 13)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit stream; state advances by the golden-ratio gamma."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return mix64(self._state)

    def bits(self, k: int) -> int:
        """k uniform random bits as an int, consuming ceil(k/64) draws."""
        out = 0
        filled = 0
        while filled < k:
            out |= self.next64() << filled
            filled += 64
        return out & ((1 << k) - 1)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        k = (bound - 1).bit_length()
        while True:
            v = self.bits(k) if k else 0
            if v < bound:
                return v

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def substream(seed: int, index: int) -> SplitMix64:
    """Independent stream for work item `index` under a run-level seed."""
    return SplitMix64(mix64(seed ^ ((index + 1) * _GAMMA)))
