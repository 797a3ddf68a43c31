"""Closed-form spectra and spanning-tree counts for the three families, and their verification.

Two spanning-tree numbers are carried per family. ``tree_count_as_printed``
is the product of the non-zero Laplacian eigenvalues, which is how the
published corollaries state it. ``tree_count_corrected`` divides that product
by ``n`` as the matrix-tree theorem requires, and is the one that matches the
reduced-Laplacian determinant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .constructors import Family, FamilyParams
from .graph_core import INF, diameter
from .spectral import (
    Spectrum,
    distance_laplacian_spectrum,
    dl_spectrum_via_transfer,
    laplacian_spectrum,
    spanning_tree_count,
)


@dataclass(frozen=True)
class Prediction:
    params: FamilyParams
    l_spectrum: Spectrum
    dl_spectrum: Spectrum
    tree_count_corrected: int
    tree_count_as_printed: int


def _prediction(params: FamilyParams, l_items, dl_items, printed: int) -> Prediction:
    n = params.n
    corrected, rem = divmod(printed, n)
    assert rem == 0, "printed tree count must be divisible by n"
    return Prediction(
        params,
        Spectrum.from_multiplicities(l_items),
        Spectrum.from_multiplicities(dl_items),
        corrected,
        printed,
    )


def predict_cocktail(n: int) -> Prediction:
    params = FamilyParams(Family.COCKTAIL_PARTY, n)
    h = n // 2
    return _prediction(
        params,
        [(0, 1), (n - 2, h), (n, h - 1)],
        [(0, 1), (n + 2, h), (n, h - 1)],
        (n - 2) ** h * n ** (h - 1),
    )


def predict_supergraph(n: int, n1: int) -> Prediction:
    params = FamilyParams(Family.SUPERGRAPH, n, n1)
    h = n // 2
    return _prediction(
        params,
        [(0, 1), (n - 2, h - n1), (n, h + n1 - 1)],
        [(0, 1), (n + 2, h - n1), (n, h + n1 - 1)],
        (n - 2) ** (h - n1) * n ** (h + n1 - 1),
    )


def predict_two_clique(n: int, n1: int) -> Prediction:
    params = FamilyParams(Family.TWO_CLIQUE, n, n1)
    return _prediction(
        params,
        [(0, 1), (1, 1), (n, 1), (n1 + 1, n1 - 1), (n - n1, n - n1 - 2)],
        [(0, 1), (2 * n - 1, 1), (n, 1), (2 * n - (n1 + 1), n1 - 1), (n + n1, n - n1 - 2)],
        n * (n1 + 1) ** (n1 - 1) * (n - n1) ** (n - (n1 + 2)),
    )


def predict(params: FamilyParams) -> Prediction:
    if params.family is Family.COCKTAIL_PARTY:
        return predict_cocktail(params.n)
    if params.family is Family.SUPERGRAPH:
        return predict_supergraph(params.n, params.n1)
    return predict_two_clique(params.n, params.n1)


@dataclass(frozen=True)
class VerificationReport:
    params: FamilyParams
    l_match: bool
    dl_match: bool
    dl_direct_match: bool | None  # None when diameter > 2
    tree_match_corrected: bool
    tree_match_printed: bool
    details: dict[str, dict[str, Any]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Every check that follows from the exact pipeline agrees."""
        return self.l_match and self.dl_match and self.dl_direct_match is not False and self.tree_match_corrected

    def to_json(self) -> dict:
        p = self.params
        return {
            "family": p.family.value,
            "n": p.n,
            "n1": p.n1,
            "l_match": self.l_match,
            "dl_match": self.dl_match,
            "dl_direct_match": self.dl_direct_match,
            "tree_match_corrected": self.tree_match_corrected,
            "tree_match_printed": self.tree_match_printed,
            "details": self.details,
        }


def verify_family(params: FamilyParams) -> VerificationReport:
    pred = predict(params)
    g = params.build()
    n = params.n

    l_spec = laplacian_spectrum(g)
    dl_transfer = dl_spectrum_via_transfer(l_spec, n)
    d = diameter(g)
    direct = distance_laplacian_spectrum(g) if d is not INF and d <= 2 else None  # type: ignore[operator]
    trees = spanning_tree_count(g)

    details: dict[str, dict[str, Any]] = {
        "l_spectrum": {"expected": pred.l_spectrum.to_json(), "actual": l_spec.to_json()},
        "dl_spectrum_transfer": {"expected": pred.dl_spectrum.to_json(), "actual": dl_transfer.to_json()},
        "dl_spectrum_direct": {
            "expected": pred.dl_spectrum.to_json(),
            "actual": direct.to_json() if direct is not None else None,
        },
        "diameter": {"expected": "<= 2", "actual": str(d)},
        "tree_count": {
            "expected_corrected": str(pred.tree_count_corrected),
            "expected_as_printed": str(pred.tree_count_as_printed),
            "actual": str(trees),
        },
    }
    return VerificationReport(
        params=params,
        l_match=l_spec == pred.l_spectrum,
        dl_match=dl_transfer == pred.dl_spectrum,
        dl_direct_match=None if direct is None else (direct == pred.dl_spectrum and direct == dl_transfer),
        tree_match_corrected=trees == pred.tree_count_corrected,
        tree_match_printed=trees == pred.tree_count_as_printed,
        details=details,
    )
