"""Monte Carlo cross-checks: sampling the family and estimating ball mass.

Draws use the scale-mixture representation X = Z * sqrt(nu / W) with Z
standard normal and W chi-square with nu degrees of freedom (X = Z in
the Gaussian limit). Randomness comes from an embedded counter-based
generator (SplitMix64: output_i = mix64(seed + i * golden64)), never
from a platform default, so identical (nu, k, n, seed) reproduce the
draws bit for bit on any machine. The stream layout is part of that
contract: first the n*k normal variates for Z, then whatever the
chi-square rejection sampler consumes.

Normals are Box-Muller pairs (the non-polar form, two uniforms in, two
normals out); gamma variates use Marsaglia-Tsang acceptance with the
shape+1 boost below shape 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .tdist import check_dim, check_dof

__all__ = [
    "SplitMix64",
    "SampleBatch",
    "sample_t",
    "estimate_ball_prob",
    "estimate_ball_prob_prefixes",
]

_MASK64 = (1 << 64) - 1
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_INV_2_53 = 2.0**-53


class SplitMix64:
    """Counter-based SplitMix64 stream over 64-bit words.

    The i-th output is a fixed avalanche mix of seed + (i+1) * golden64,
    so any block of the stream can be produced independently and the
    position after a draw depends only on how many words were consumed.
    """

    def __init__(self, seed: int):
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise DomainError(f"seed must be an integer, got {seed!r}")
        self._seed = np.uint64(seed & _MASK64)
        self._position = 0

    @property
    def position(self) -> int:
        """Words consumed so far."""
        return self._position

    def next_uint64(self, n: int) -> np.ndarray:
        idx = np.arange(self._position + 1, self._position + n + 1, dtype=np.uint64)
        self._position += n
        z = self._seed + idx * _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))

    def next_uniform(self, n: int) -> np.ndarray:
        """n doubles uniform on (0, 1] (never 0, so logs are safe)."""
        bits = self.next_uint64(n) >> np.uint64(11)
        return (bits.astype(np.float64) + 1.0) * _INV_2_53

    def next_normal(self, n: int) -> np.ndarray:
        """n standard normals, Box-Muller pairs."""
        pairs = (n + 1) // 2
        u1 = self.next_uniform(pairs)
        u2 = self.next_uniform(pairs)
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = (2.0 * math.pi) * u2
        out = np.empty(2 * pairs, dtype=np.float64)
        out[0::2] = radius * np.cos(angle)
        out[1::2] = radius * np.sin(angle)
        return out[:n]

    def next_gamma(self, shape: float, n: int) -> np.ndarray:
        """n Gamma(shape, 1) variates, Marsaglia-Tsang."""
        if shape <= 0.0:
            raise DomainError(f"gamma shape must be positive, got {shape!r}")
        boosted = shape < 1.0
        alpha = shape + 1.0 if boosted else shape
        d = alpha - 1.0 / 3.0
        c = 1.0 / math.sqrt(9.0 * d)
        out = np.empty(n, dtype=np.float64)
        filled = 0
        while filled < n:
            want = n - filled
            x = self.next_normal(want)
            u = self.next_uniform(want)
            t = 1.0 + c * x
            v = t * t * t
            with np.errstate(invalid="ignore", divide="ignore"):
                accept = (v > 0.0) & (
                    np.log(u) < 0.5 * x * x + d - d * v + d * np.log(np.where(v > 0.0, v, 1.0))
                )
            got = v[accept]
            take = min(got.size, want)
            out[filled : filled + take] = d * got[:take]
            filled += take
        if boosted:
            out *= self.next_uniform(n) ** (1.0 / shape)
        return out


@dataclass(eq=False)
class SampleBatch:
    """A reproducible block of draws from one family member."""

    nu: float
    k: int
    n: int
    seed: int
    draws: np.ndarray  # shape (n, k)


def sample_t(nu, k: int, n: int, seed: int) -> SampleBatch:
    """Draw n points from the (nu, k) member, reproducibly by seed."""
    nu = check_dof(nu)
    k = check_dim(k)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"sample size must be a positive integer, got {n!r}")
    gen = SplitMix64(seed)
    z = gen.next_normal(n * k).reshape(n, k)
    if math.isinf(nu):
        draws = z
    else:
        w = 2.0 * gen.next_gamma(0.5 * nu, n)
        draws = z * np.sqrt(nu / w)[:, None]
    return SampleBatch(nu=nu, k=k, n=n, seed=seed, draws=draws)


def estimate_ball_prob(batch: SampleBatch, r) -> tuple[float, float]:
    """Empirical P(|X| <= r) with its binomial standard error."""
    r = float(r)
    if math.isnan(r) or math.isinf(r) or r < 0.0:
        raise DomainError(f"radius must be a finite nonnegative real, got {r!r}")
    sq = np.einsum("ij,ij->i", batch.draws, batch.draws)
    hits = int(np.count_nonzero(sq <= r * r))
    p = hits / batch.n
    se = math.sqrt(p * (1.0 - p) / batch.n)
    return p, se


def estimate_ball_prob_prefixes(batch: SampleBatch, r) -> list[tuple[float, float]]:
    """Empirical P(|X| <= r) for every prefix dimension 1..k of one batch.

    The first j coordinates of a draw are distributed exactly as the
    j-variate member with the same nu (the scale mixture acts on all
    coordinates at once), so a single batch yields estimates for a whole
    column of dimensions. Entry j-1 of the result is (estimate, std_error)
    for dimension j. The prefix estimates share draws and are therefore
    correlated across j, but each one is individually unbiased.
    """
    r = float(r)
    if math.isnan(r) or math.isinf(r) or r < 0.0:
        raise DomainError(f"radius must be a finite nonnegative real, got {r!r}")
    sq = np.cumsum(batch.draws * batch.draws, axis=1)
    out = []
    for j in range(batch.k):
        hits = int(np.count_nonzero(sq[:, j] <= r * r))
        p = hits / batch.n
        out.append((p, math.sqrt(p * (1.0 - p) / batch.n)))
    return out
