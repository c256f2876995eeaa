"""Dessins d'enfants, coset enumeration, homology covers, ends estimation
and truncated superelliptic curves."""

from ._core import (
    Dessin,
    abelianization,
    affine_equivalent,
    analyze,
    canonical_form,
    coset_enumeration,
    cover_tower_genus,
    ends_estimate,
    enumerate_dessins,
    genus,
    genus_formula,
    homology_cover,
    isomorphic,
    kn_invariants,
    mirror,
    mobius_eval,
    sine_eval,
    triangle_roundtrip_ok,
)

__all__ = [
    "Dessin",
    "abelianization",
    "affine_equivalent",
    "analyze",
    "canonical_form",
    "coset_enumeration",
    "cover_tower_genus",
    "ends_estimate",
    "enumerate_dessins",
    "genus",
    "genus_formula",
    "homology_cover",
    "isomorphic",
    "kn_invariants",
    "mirror",
    "mobius_eval",
    "sine_eval",
    "triangle_roundtrip_ok",
]

__version__ = "0.1.0"
