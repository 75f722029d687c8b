"""The problem plugin contract and shared scoring helpers.

A problem owns two possibility spaces and five operations: info (the single
parser of raw content), quality, diversity, and controllability (which consume
info records only), and render. Quality is the mean of named subscores with
the convention that quality == 1 exactly when every subscore == 1.
"""

from __future__ import annotations

from gengym.spaces import Space


class Problem:
    """Base class for problem plugins. Subclasses are stateless after construction."""

    name: str = ""
    content_space: Space
    control_space: Space

    def __init__(self, **params):
        self.params = dict(params)

    def info(self, content) -> dict:
        """Extract every fact the other evaluators read. Pure: equal content, equal record."""
        raise NotImplementedError

    def quality_subscores(self, info: dict) -> dict:
        """Named per-constraint subscores, each in [0,1]."""
        raise NotImplementedError

    def quality(self, info: dict) -> float:
        return mean_subscores(self.quality_subscores(info))

    def diversity(self, info_a: dict, info_b: dict) -> float:
        """Pairwise dissimilarity in [0,1]; symmetric; 0 for identical artifacts."""
        raise NotImplementedError

    def controllability(self, info: dict, control) -> float:
        """Closeness in [0,1] of measured statistics to the control targets."""
        raise NotImplementedError

    def render(self, content) -> list:
        """Final representation as (extension, payload) pairs; payload is a PIL image or str."""
        raise NotImplementedError

    def diversity_pairs(self, infos: list[dict]):
        """All-pairs diversity matrix (list of lists). Override for a vectorized
        fast path; any override must return values identical to this loop."""
        n = len(infos)
        matrix = [[0.0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                d = self.diversity(infos[i], infos[j])
                matrix[i][j] = d
                matrix[j][i] = d
        return matrix


def mean_subscores(subscores: dict) -> float:
    """Arithmetic mean of subscores, pinned to exactly 1.0 when all constraints pass."""
    values = list(subscores.values())
    if all(v >= 1.0 for v in values):
        return 1.0
    total = sum(min(1.0, max(0.0, v)) for v in values)
    return total / len(values)


def window_closeness(value: float, window_lo: float | None, window_hi: float,
                     bound_lo: float, bound_hi: float) -> float:
    """Closeness of a measured statistic to a target window.

    1 inside [window_lo, window_hi], decaying linearly to 0 at the control
    parameter's space bounds; window_lo None means anything below the window
    top also passes. Values past a bound score 0.
    """
    if window_lo is not None and value < window_lo:
        span = max(1.0, window_lo - bound_lo)
        return max(0.0, 1.0 - (window_lo - value) / span)
    if value > window_hi:
        span = max(1.0, bound_hi - window_hi)
        return max(0.0, 1.0 - (value - window_hi) / span)
    return 1.0


def scaled_hamming(a, b, cells: int, fraction: float = 0.3) -> float:
    """Tile-difference diversity: 1 when at least `fraction` of cells differ."""
    differing = sum(1 for x, y in zip(a, b) if x != y)
    return min(1.0, differing / (fraction * cells))
