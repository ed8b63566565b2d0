"""Problem representation: instances, distance matrices, per-city statistics, tours.

Distance conventions follow the TSPLIB definitions so results are comparable
with published best-known tour lengths:

* ``EUC_2D`` -- Euclidean distance rounded to the nearest integer
  (``nint(x) = floor(x + 0.5)``, never banker's rounding).
* ``CEIL_2D`` -- Euclidean distance rounded up.
* ``ATT``    -- pseudo-Euclidean: ``r = sqrt((dx^2 + dy^2) / 10)``,
  ``t = nint(r)``, result ``t`` if ``t >= r`` else ``t + 1``.
* ``EXPLICIT`` -- a full symmetric weight table supplied with the instance.

Distances are stored as floats in one matrix type even when the rule yields
integers; per-city means use the n-1 distances to the other cities and the
standard deviation is the population form over those n-1 values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import ConfigError, DegenerateInstanceError, ValidationError

SUPPORTED_KINDS = ("EUC_2D", "ATT", "CEIL_2D", "EXPLICIT")

Coord = Tuple[float, float]


@dataclass(frozen=True)
class Instance:
    """Immutable problem statement: coordinates (or explicit weights) plus a
    distance-function tag."""

    name: str
    n: int
    kind: str
    coords: Optional[Tuple[Coord, ...]] = None
    explicit_weights: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        if self.kind not in SUPPORTED_KINDS:
            raise ConfigError(f"unsupported distance kind {self.kind!r}; "
                              f"expected one of {SUPPORTED_KINDS}")
        if self.n < 1:
            raise DegenerateInstanceError(f"instance needs n >= 1, got {self.n}")
        if self.kind == "EXPLICIT":
            w = self.explicit_weights
            if w is None:
                raise ValidationError("EXPLICIT instance requires a weight table")
            w = np.asarray(w, dtype=float)
            if w.shape != (self.n, self.n):
                raise ValidationError(
                    f"weight table shape {w.shape} does not match n={self.n}")
            if not np.allclose(w, w.T):
                raise ValidationError("EXPLICIT weight table is not symmetric")
            if np.any(np.diag(w) != 0):
                raise ValidationError("EXPLICIT weight table has nonzero diagonal")
            object.__setattr__(self, "explicit_weights", w)
        else:
            if self.coords is None or len(self.coords) != self.n:
                got = 0 if self.coords is None else len(self.coords)
                raise ValidationError(
                    f"instance {self.name!r}: expected {self.n} coordinate "
                    f"pairs, got {got}")
            object.__setattr__(
                self, "coords",
                tuple((float(x), float(y)) for x, y in self.coords))


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise distances with zero diagonal; the only geometry
    consumers see."""

    n: int
    d: np.ndarray

    def __post_init__(self) -> None:
        d = np.asarray(self.d, dtype=float)
        if d.shape != (self.n, self.n):
            raise ValidationError(f"matrix shape {d.shape} != ({self.n}, {self.n})")
        d.setflags(write=False)
        object.__setattr__(self, "d", d)


@dataclass(frozen=True)
class CityStats:
    """Per-city mean and population standard deviation of the distances to
    the other n-1 cities."""

    mu: np.ndarray
    sigma: np.ndarray


@dataclass(frozen=True)
class Tour:
    """A cyclic visiting order together with its total length."""

    order: Tuple[int, ...]
    length: float


@dataclass
class TourReport:
    """Outcome of validate_tour: ok, or what is duplicated/missing."""

    ok: bool
    duplicates: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    out_of_range: list = field(default_factory=list)

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        parts = []
        if self.duplicates:
            parts.append(f"duplicates={self.duplicates}")
        if self.missing:
            parts.append(f"missing={self.missing}")
        if self.out_of_range:
            parts.append(f"out_of_range={self.out_of_range}")
        return "violation: " + ", ".join(parts)


def _nint(x: float) -> int:
    return int(math.floor(x + 0.5))


def distance(kind: str, a: Coord, b: Coord) -> float:
    """TSPLIB distance between two coordinate pairs under the given kind."""
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    if kind == "EUC_2D":
        return float(_nint(math.sqrt(dx * dx + dy * dy)))
    if kind == "CEIL_2D":
        return float(math.ceil(math.sqrt(dx * dx + dy * dy)))
    if kind == "ATT":
        r = math.sqrt((dx * dx + dy * dy) / 10.0)
        t = _nint(r)
        return float(t if t >= r else t + 1)
    raise ConfigError(f"unknown distance kind {kind!r}")


def build_distance_matrix(instance: Instance) -> DistanceMatrix:
    """Full n x n matrix; EXPLICIT copies the weights, the coordinate kinds
    apply the TSPLIB rounding rules pairwise (vectorized)."""
    n = instance.n
    if instance.kind == "EXPLICIT":
        return DistanceMatrix(n, np.array(instance.explicit_weights, dtype=float))

    pts = np.asarray(instance.coords, dtype=float)
    dx = pts[:, 0][:, None] - pts[:, 0][None, :]
    dy = pts[:, 1][:, None] - pts[:, 1][None, :]
    sq = dx * dx + dy * dy
    if instance.kind == "EUC_2D":
        d = np.floor(np.sqrt(sq) + 0.5)
    elif instance.kind == "CEIL_2D":
        d = np.ceil(np.sqrt(sq))
    elif instance.kind == "ATT":
        r = np.sqrt(sq / 10.0)
        t = np.floor(r + 0.5)
        d = np.where(t >= r, t, t + 1.0)
    else:
        raise ConfigError(f"unknown distance kind {instance.kind!r}")
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(n, d)


def city_stats(matrix: DistanceMatrix) -> CityStats:
    """Mean and population standard deviation of each city's n-1 distances."""
    n = matrix.n
    if n < 2:
        raise DegenerateInstanceError("city statistics need at least 2 cities")
    d = matrix.d
    mu = d.sum(axis=1) / (n - 1)
    # The diagonal is 0, so summing (d - mu)^2 over all j adds an extra mu^2.
    dev = d - mu[:, None]
    var = (np.sum(dev * dev, axis=1) - mu * mu) / (n - 1)
    sigma = np.sqrt(np.clip(var, 0.0, None))
    mu.setflags(write=False)
    sigma.setflags(write=False)
    return CityStats(mu=mu, sigma=sigma)


def validate_tour(order: Sequence[int], n: int) -> TourReport:
    """Check that order is a permutation of 0..n-1; report what is wrong."""
    seen = set()
    duplicates = []
    out_of_range = []
    for c in order:
        if not (0 <= c < n):
            out_of_range.append(c)
        elif c in seen:
            duplicates.append(c)
        else:
            seen.add(c)
    missing = [c for c in range(n) if c not in seen]
    if len(order) == n and not duplicates and not missing and not out_of_range:
        return TourReport(ok=True)
    return TourReport(ok=False, duplicates=sorted(set(duplicates)),
                      missing=missing, out_of_range=out_of_range)


def tour_length(order: Sequence[int], matrix: DistanceMatrix) -> float:
    """Total cycle length including the closing edge."""
    report = validate_tour(order, matrix.n)
    if not report.ok:
        raise ValidationError(f"not a tour: {report}")
    idx = np.asarray(order, dtype=int)
    return float(matrix.d[idx, np.roll(idx, -1)].sum())


def make_tour(order: Sequence[int], matrix: DistanceMatrix) -> Tour:
    return Tour(order=tuple(int(c) for c in order),
                length=tour_length(order, matrix))


def generate_random_euclidean(n: int, seed: int, box_side: float) -> Instance:
    """Uniform random points in [0, box_side]^2 with kind EUC_2D.

    Uses numpy's PCG64 bit generator (``np.random.Generator(np.random.PCG64(seed))``,
    two uniform doubles per city in x,y order), so identical (n, seed,
    box_side) reproduce identical coordinates on every platform.
    """
    if n < 3:
        raise DegenerateInstanceError(f"random instance needs n >= 3, got {n}")
    if box_side <= 0:
        raise ConfigError(f"box_side must be positive, got {box_side}")
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    pts = rng.random((n, 2)) * float(box_side)
    coords = tuple((float(x), float(y)) for x, y in pts)
    return Instance(name=f"rand-n{n}-s{seed}", n=n, kind="EUC_2D", coords=coords)
