"""
surjectivity.py
===============

Constructive surjectivity runs: enumerate the product of the row projective
spaces, lift every target (or a seeded sample) into the level-``J``
congruence subgroup and check each certificate plus the projective class of
every lifted row.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from functools import partial
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ContractError
from ..evaluation.metrics import run_stats
from ..parallel import ordered_map
from ..projective import ProjPoint, WeightVector, enumerate_pf, proj_equiv
from ..rings import BaseRing, Ideal
from .certificate import GroupKind, LiftCertificate, verify_certificate
from .pipelines import lift_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurjectivityReport:
    kind: GroupKind
    k: int
    ideals: Tuple[int, ...]
    level: int
    weights: Tuple[Tuple[int, ...], ...]
    class_counts: Tuple[int, ...]
    targets: int
    lifted: int
    exhaustive: bool
    seed: Optional[int]
    certificates: Tuple[LiftCertificate, ...] = ()
    stats: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def verdict(self) -> bool:
        return self.lifted == self.targets

    def to_json(self, include_certificates: bool = False) -> dict:
        payload: Dict[str, Any] = {
            "group": {"kind": self.kind.value, "k": self.k},
            "ideals": [str(i) for i in self.ideals],
            "level": str(self.level),
            "weights": [list(w) for w in self.weights],
            "class_counts": list(self.class_counts),
            "targets": self.targets,
            "lifted": self.lifted,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
            "verdict": self.verdict,
        }
        if include_certificates:
            payload["certificates"] = [c.to_json() for c in self.certificates]
        return payload


def _row_classes(dimension: int, ideal: Ideal, weights: WeightVector, position: int) -> List[ProjPoint]:
    if ideal.is_unit:
        # the singleton class; any unimodular row stands for it
        ring = ideal.ring
        rep = tuple(ring.one if j == position else ring.zero for j in range(dimension))
        return [ProjPoint(ideal, weights, rep)]
    return enumerate_pf(dimension - 1, weights, ideal)


def _lift_target(target: Sequence[ProjPoint], kind: GroupKind, ideals: Sequence[Ideal], level: Ideal) -> Tuple[LiftCertificate, bool]:
    rows = [p.rep for p in target]
    certificate = lift_for(kind)(rows, ideals, level)
    ok = verify_certificate(certificate)
    for i, point in enumerate(target):
        if point.is_singleton:
            continue
        ok = ok and proj_equiv(certificate.matrix.row(i), point.rep, point.ideal, point.weights)
    return certificate, ok


def surjectivity(
    kind: GroupKind,
    k: int,
    ideals: Sequence[int],
    level: int,
    weights: Sequence[WeightVector],
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> SurjectivityReport:
    """Lift every target of the projective product, or ``samples`` seeded ones.

    Raises
    ------
    ContractError
        On a sampling request without a seed, or when the number of ideals
        or weight vectors does not match the group dimension.
    """
    dimension = k + 1 if kind is GroupKind.SL else 2 * k
    if len(ideals) != dimension or len(weights) != dimension:
        raise ContractError(f"{kind.value} with k={k} needs {dimension} ideals and weight vectors")
    if samples is not None and seed is None:
        raise ContractError("sampling requires an explicit seed")
    ring = BaseRing.integers()
    parsed = [Ideal.principal(ring, i) for i in ideals]
    level_ideal = Ideal.principal(ring, level)

    started = time.perf_counter()
    classes = [_row_classes(dimension, ideal, w, i) for i, (ideal, w) in enumerate(zip(parsed, weights))]
    counts = tuple(len(c) for c in classes)
    total = prod(counts)
    if samples is None:
        chosen = [[]]
        for options in classes:
            chosen = [prefix + [p] for prefix in chosen for p in options]
        exhaustive = True
    else:
        rng = np.random.default_rng(seed)
        chosen = [[options[int(rng.integers(0, len(options)))] for options in classes] for _ in range(samples)]
        exhaustive = False

    work = partial(_lift_target, kind=kind, ideals=parsed, level=level_ideal)
    results = ordered_map(work, chosen, n_jobs)
    certificates = tuple(c for c, _ in results)
    lifted = sum(1 for _, ok in results if ok)
    logger.info("%s surjectivity over %s at level %s: %d/%d lifted (%d classes in product)",
                kind.value, ideals, level, lifted, len(chosen), total)
    return SurjectivityReport(
        kind=kind,
        k=k,
        ideals=tuple(int(i) for i in ideals),
        level=int(level),
        weights=tuple(w.weights for w in weights),
        class_counts=counts,
        targets=len(chosen),
        lifted=lifted,
        exhaustive=exhaustive,
        seed=seed,
        certificates=certificates,
        stats=run_stats(len(chosen), started),
    )