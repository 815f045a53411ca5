"""Rank-2 symplectic matroids and the torus geometry of SpG(2, 2n).

Matroids are lists of signed label pairs: i is written as i and i* as -i.
Rationals come back as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _sympmat
from ._sympmat import (
    SympmatError,
    admissible_order_count,
    admissible_pairs,
    betti_numbers,
    enumerate_symplectic,
    is_symplectic_matroid,
    run_cli,
    strata_csv,
)

__all__ = [
    "SympmatError",
    "admissible_order_count",
    "admissible_pairs",
    "betti_numbers",
    "cell_dims",
    "classify",
    "enumerate_symplectic",
    "is_representable",
    "is_symplectic_matroid",
    "orbits",
    "polytope",
    "run_cli",
    "schubert",
    "stabilizer",
    "strata_csv",
    "verify_witness",
    "witness",
]


def _pairs(bases):
    return [tuple(p) for p in bases]


def orbits(n, group="bcn"):
    return json.loads(_sympmat.orbits_json(n, group))


def is_representable(n, bases):
    return json.loads(_sympmat.representability_json(n, _pairs(bases)))


def witness(n, bases=None):
    """Certified witness for the matroid; every admissible pair when bases is None."""
    if bases is None:
        bases = admissible_pairs(n)
    raw = json.loads(_sympmat.witness_json(n, _pairs(bases)))
    raw["matrix"] = [[Fraction(x) for x in row] for row in raw["matrix"]]
    raw["plucker"] = {tuple(e["pair"]): Fraction(e["value"]) for e in raw["plucker"]}
    raw["symplectic_sum"] = Fraction(raw["symplectic_sum"])
    return raw


def verify_witness(n, matrix, bases):
    doc = {"n": n, "matrix": [[str(Fraction(x)) for x in row] for row in matrix]}
    return json.loads(_sympmat.verify_json(json.dumps(doc), _pairs(bases)))


def cell_dims(n, bases):
    return json.loads(_sympmat.cell_dims_json(n, _pairs(bases)))


def stabilizer(n, bases, torus="T"):
    return json.loads(_sympmat.stabilizer_json(n, _pairs(bases), torus))


def polytope(n, bases):
    return json.loads(_sympmat.polytope_json(n, _pairs(bases)))


def classify(n):
    return json.loads(_sympmat.classify_json(n))


def schubert(n, pair):
    return json.loads(_sympmat.schubert_json(n, tuple(pair)))
