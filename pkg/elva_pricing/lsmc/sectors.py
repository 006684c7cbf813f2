# coding=utf-8
"""Partition of the simulated fund values into regression sectors."""
from __future__ import division

import numpy as np


class SectorPartition(object):
    """Sectors of fund values delimited by increasing breakpoints.

    Sector s holds the fund values in [b_(s-1), b_s) with the first sector open
    below and the last sector open above.

    Args:
        breakpoints: An array of strictly increasing fund values.
        funds: An array of the fund values assigned to the sectors.

    Properties:
        * breakpoints
        * labels
        * sector_count
        * counts
    """
    __slots__ = ('_breakpoints', '_labels')

    def __init__(self, breakpoints, funds):
        """Initialize SectorPartition."""
        breakpoints = np.asarray(breakpoints, dtype=float)
        assert np.all(np.diff(breakpoints) > 0), \
            'Sector breakpoints must be strictly increasing.'
        self._breakpoints = breakpoints
        self._labels = self.assign(funds)

    @property
    def breakpoints(self):
        """Get the array of breakpoints."""
        return self._breakpoints

    @property
    def labels(self):
        """Get an array with the sector of every fund value."""
        return self._labels

    @property
    def sector_count(self):
        """Get the number of sectors, including the empty ones."""
        return len(self._breakpoints) + 1

    @property
    def counts(self):
        """Get an array with the number of points of each sector."""
        return np.bincount(self._labels, minlength=self.sector_count)

    def assign(self, funds):
        """Get the sector of each fund value of an array."""
        return np.searchsorted(self._breakpoints, np.asarray(funds, dtype=float),
                               side='right')

    def indices(self, sector):
        """Get the indices of the points in a sector."""
        return np.flatnonzero(self._labels == sector)

    def __len__(self):
        return self.sector_count

    def __repr__(self):
        return 'SectorPartition: [sectors: {}] [points: {}]'.format(
            self.sector_count, len(self._labels))


def _median_cut(values):
    """Get the cut that best halves sorted values, or None if they are all equal.

    Values below the cut fall in the first half.
    """
    unique, counts = np.unique(values, return_counts=True)
    if len(unique) < 2:
        return None
    below = np.cumsum(counts)[:-1]
    k = int(np.argmin(np.abs(below - 0.5 * len(values)))) + 1
    return float(unique[k])


def partition_sectors(funds, contract, m, max_share=0.2):
    """Partition the fund values at anniversary m into regression sectors.

    The base breakpoints come from the floor and the cap of the benefits at
    m. Any sector holding more than max_share of the points is split at its
    median until no sector is too large or the crowded sectors hold a single
    distinct value.

    Args:
        funds: An array of fund values at anniversary m.
        contract: The ElvaContract.
        m: An integer for the anniversary.
        max_share: A number for the largest share of the points in a sector.
            (Default: 0.2).
    """
    funds = np.asarray(funds, dtype=float)
    ordered = np.sort(funds)
    limit = max_share * len(funds)
    cuts = [float(b) for b in contract.surrender_thresholds(m)]
    changed = True
    while changed:
        changed = False
        edges = [-np.inf] + cuts + [np.inf]
        for lo, hi in zip(edges[:-1], edges[1:]):
            start, end = np.searchsorted(ordered, [lo, hi], side='left')
            if end - start > limit:
                cut = _median_cut(ordered[start:end])
                if cut is not None:
                    cuts.append(cut)
                    changed = True
        cuts.sort()
    return SectorPartition(cuts, funds)
