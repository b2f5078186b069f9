"""scikit-learn style wrapper around the multiplicity formulas.

``fit`` tabulates the dominant weight diagram of the chosen representation;
``predict`` maps each row of an integer weight matrix to its multiplicity by
Weyl symmetry. Multiplicities are returned in an ``object`` array so large
values stay exact.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .combinatorics import COUNTERS
from .multiplicity import REPRESENTATIONS, weight_diagram
from .weights import check_highest_weight, check_rank, dominant_rep, layer_index


class WeightMultiplicity(TransformerMixin, BaseEstimator):
    """Weight multiplicities of a fixed sp(2r, C) representation.

    Parameters
    ----------
    rank : int
        Rank ``r >= 2``.
    n, m : int
        Degrees. For ``rep="irrep"`` the highest weight is ``(n, m, 0, ...)``
        and ``n >= m`` is required; ``rep="sym"`` needs ``m = 0``.
    rep : {"irrep", "tensor", "sym"}
    counter : {"dp", "sieve"}
        Bounded composition counter used while fitting.

    Attributes
    ----------
    table_ : dict
        Dominant weight -> multiplicity for every weight in the support.
    dimension_ : int
        Sum of multiplicities over the full diagram.
    n_features_in_ : int
        Equal to ``rank``.
    """

    def __init__(self, rank=2, n=1, m=0, rep="irrep", counter="dp"):
        self.rank = rank
        self.n = n
        self.m = m
        self.rep = rep
        self.counter = counter

    def _validate_params(self):
        check_rank(self.rank)
        if self.rep not in REPRESENTATIONS:
            raise ValueError(f"rep must be one of {REPRESENTATIONS}, got {self.rep!r}")
        if self.counter not in COUNTERS:
            raise ValueError(f"counter must be one of {COUNTERS}, got {self.counter!r}")
        if self.n < 0 or self.m < 0:
            raise ValueError("degrees must be non-negative")
        if self.rep == "irrep":
            check_highest_weight(self.n, self.m)
        if self.rep == "sym" and self.m != 0:
            raise ValueError("rep='sym' needs m=0")

    def fit(self, X=None, y=None):
        """Tabulate the diagram. ``X`` and ``y`` are ignored."""
        self._validate_params()
        records = weight_diagram(self.n, self.m, self.rank, rep=self.rep, counter=self.counter)
        self.table_ = {rec.weight: rec.multiplicity for rec in records}
        self.dimension_ = sum(rec.multiplicity * rec.orbit_size for rec in records)
        self.n_features_in_ = self.rank
        return self

    def predict(self, X):
        """Multiplicity of each weight (row) of ``X``, shape ``(n_samples,)``."""
        check_is_fitted(self, "table_")
        X = check_array(X, dtype=np.int64, ensure_min_samples=0)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        out = np.empty(X.shape[0], dtype=object)
        for i, row in enumerate(X.tolist()):
            if layer_index(row, self.n, self.m) is None:
                out[i] = 0
            else:
                out[i] = self.table_.get(dominant_rep(row), 0)
        return out

    def transform(self, X):
        """Column vector of multiplicities, shape ``(n_samples, 1)``."""
        return self.predict(X).reshape(-1, 1)
