"""Tracking of local maxima of profiles across frames.

Maxima come from scipy.signal.find_peaks. Single-sample maxima are refined
by a 3-point parabola and flat tops are placed at their midpoint. Maxima are
linked frame to frame by nearest neighbour. A link is rejected as ambiguous
when two candidates lie within half the peak spacing of the previous frame
(the current frame when the previous one has a single peak).
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.signal import find_peaks

from ..errors import TrackingError
from .observables import Profile

logger = logging.getLogger(__name__)

MIN_TRACK_POINTS = 3


@dataclass
class PeakTrack:
    times: List[float] = field(default_factory=list)
    positions: List[float] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def speed(self) -> float:
        if len(self) < 2:
            return float("nan")
        slope, _ = np.polyfit(self.times, self.positions, 1)
        return float(slope)


@dataclass
class PeakTrackingResult:
    window: Tuple[float, float]
    tracks: List[PeakTrack]

    @property
    def fitted(self) -> List[PeakTrack]:
        return [track for track in self.tracks if len(track) >= MIN_TRACK_POINTS]

    @property
    def speed(self) -> float:
        """Mean of the per-peak speeds, weighted by track length."""
        fitted = self.fitted
        if not fitted:
            raise TrackingError(
                f"No peak could be followed over {MIN_TRACK_POINTS} frames"
            )
        weights = np.array([len(track) for track in fitted], dtype=float)
        speeds = np.array([track.speed for track in fitted])
        return float(np.sum(weights * speeds) / np.sum(weights))

    @property
    def longest(self) -> PeakTrack:
        return max(self.tracks, key=len)


def find_maxima(profile: Profile, window: Tuple[float, float]) -> np.ndarray:
    """Refined positions of the local maxima in window, flat tops included."""
    lo, hi = window
    values = profile.values
    indices, properties = find_peaks(values, plateau_size=1)
    x = profile.grid.x
    inside = (x[indices] >= lo) & (x[indices] <= hi)
    indices = indices[inside]
    first = properties["left_edges"][inside]
    last = properties["right_edges"][inside]

    left, centre, right = values[indices - 1], values[indices], values[indices + 1]
    curvature = left - 2.0 * centre + right
    # find_peaks never reports the end samples, so both neighbours exist
    offset = 0.5 * (left - right) / np.where(curvature < 0, curvature, -np.inf)
    refined = x[indices] + offset * profile.grid.dx
    return np.where(last > first, 0.5 * (x[first] + x[last]), refined)


def _half_spacing(previous: np.ndarray, current: np.ndarray) -> float:
    for frame in (previous, current):
        if len(frame) > 1:
            return 0.5 * float(np.diff(frame).min())
    return float("inf")


def track_peaks(
    snapshots: Sequence[Profile], window: Tuple[float, float]
) -> PeakTrackingResult:
    lo, hi = window
    if not lo < hi:
        raise TrackingError(f"Degenerate window {window}")
    if len(snapshots) < MIN_TRACK_POINTS:
        raise TrackingError(
            f"Peak tracking needs at least {MIN_TRACK_POINTS} snapshots, got {len(snapshots)}"
        )
    times = [snapshot.time for snapshot in snapshots]
    if any(b <= a for a, b in zip(times, times[1:])):
        raise TrackingError("Snapshot times must be strictly ascending")

    frames = [find_maxima(snapshot, window) for snapshot in snapshots]
    if not any(len(frame) for frame in frames):
        raise TrackingError(f"No maxima in window [{lo}, {hi}]")

    finished: List[PeakTrack] = []
    active: List[PeakTrack] = [PeakTrack([times[0]], [x]) for x in frames[0]]

    for previous, frame, t in zip(frames, frames[1:], times[1:]):
        radius = _half_spacing(previous, frame)
        claimed = {}
        still_active = []
        for track in active:
            last = track.positions[-1]
            candidates = np.flatnonzero(np.abs(frame - last) < radius)
            if len(candidates) > 1:
                raise TrackingError(
                    f"Ambiguous association at t={t:g}: {len(candidates)} maxima "
                    f"within {radius:.3g} of x={last:.3f}"
                )
            if len(candidates) == 0:
                finished.append(track)
                continue
            index = int(candidates[0])
            if index in claimed:
                raise TrackingError(
                    f"Ambiguous association at t={t:g}: two peaks claim x={frame[index]:.3f}"
                )
            claimed[index] = track
            track.times.append(t)
            track.positions.append(float(frame[index]))
            still_active.append(track)

        for index, x in enumerate(frame):
            if index not in claimed:
                still_active.append(PeakTrack([t], [float(x)]))
        active = still_active

    tracks = finished + active
    tracks.sort(key=lambda track: (track.times[0], track.positions[0]))
    logger.debug("Tracked %d peaks in [%g, %g]", len(tracks), lo, hi)
    return PeakTrackingResult((lo, hi), tracks)


def centroid_speed(
    snapshots: Sequence[Profile], window: Optional[Tuple[float, float]] = None
) -> float:
    """Linear-fit speed of the profile centroids (envelope motion)."""
    if len(snapshots) < 2:
        raise TrackingError("Centroid speed needs at least two snapshots")
    centroids = []
    for snapshot in snapshots:
        x, weights = snapshot.grid.x, snapshot.values
        if window is not None:
            inside = (x >= window[0]) & (x <= window[1])
            x, weights = x[inside], weights[inside]
        total = np.sum(weights)
        if total <= 0:
            raise TrackingError(f"Empty profile at t={snapshot.time:g}")
        centroids.append(np.sum(x * weights) / total)
    slope, _ = np.polyfit([s.time for s in snapshots], centroids, 1)
    return float(slope)
