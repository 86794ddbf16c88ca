"""
Seeded fuzzing of an identity over generated instances.

Instance `i` of a run is fully determined by (seed, identity, i): its seed is
derived by hashing, so results do not depend on worker count or scheduling.
Outcomes are aggregated by ordinal and failing instances are written out as
instance files that replay through `verify`.
"""

import hashlib
import logging
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..algebra import AlgebraContext, ContextKind
from ..drazin.models import DEFAULT_POLICY, SeriesPolicy
from ..errors import GeneratorError, PDrazinError
from ..generators import RandomSpec, gen_instance, random_index
from ..instances import InstanceLoader, complex_to_json
from ..instances.models import InstanceFile
from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .suite import get_identity, verify


def derive_seed(seed: int, *parts: object) -> int:
    """64-bit seed derived from a base seed and any labels."""
    h = hashlib.blake2b(digest_size=8)
    h.update(str(seed).encode("utf-8"))
    for part in parts:
        h.update(b"|")
        h.update(str(part).encode("utf-8"))
    return int.from_bytes(h.digest(), byteorder="big", signed=False)


@dataclass(frozen=True)
class FuzzConfig:
    """Parameters of one fuzz run.

    Attributes:
        identity: Identity tag to fuzz
        count: Number of instances
        seed: Base seed
        dims: Inclusive (low, high) range of context sizes
        context_kind: Algebra family the instances live in
        lam: λ for the λ-commuting identities
        workers: Thread count
        out_dir: Where failing instances are written (None disables writing)
        indices: Inclusive (low, high) range of Drazin indices for the element
            the instance is built around (None draws any reachable index)
    """

    identity: str
    count: int
    seed: int
    dims: Tuple[int, int] = (2, 8)
    context_kind: ContextKind = ContextKind.FULL_MATRIX
    lam: Optional[complex] = None
    workers: int = 4
    out_dir: Optional[Path] = None
    indices: Optional[Tuple[int, int]] = None

    def __post_init__(self) -> None:
        info = get_identity(self.identity)
        object.__setattr__(self, "identity", info.tag)
        if self.count < 1:
            raise GeneratorError(f"count must be >= 1, got {self.count}")
        low, high = self.dims
        if not 1 <= low <= high:
            raise GeneratorError(f"invalid dimension range {low}..{high}")
        if info.needs_lambda and self.lam is None:
            raise GeneratorError(f"{info.tag} needs λ (--lambda)")
        if self.lam is not None and complex(self.lam) == 0:
            raise GeneratorError("λ must be nonzero")
        if self.workers < 1:
            raise GeneratorError(f"workers must be >= 1, got {self.workers}")
        if self.indices is not None and not 0 <= self.indices[0] <= self.indices[1]:
            raise GeneratorError(
                f"invalid index range {self.indices[0]}..{self.indices[1]}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "count": self.count,
            "seed": self.seed,
            "dims": list(self.dims),
            "context": self.context_kind.value,
            "lambda": None if self.lam is None else complex_to_json(self.lam),
            "indices": None if self.indices is None else list(self.indices),
        }


@dataclass
class InstanceOutcome:
    """Result of verifying one generated instance."""

    ordinal: int
    seed: int
    context: str
    passed: bool
    report: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    instance: Optional[InstanceFile] = field(default=None, repr=False)
    counterexample: Optional[str] = None

    @property
    def formula_residual(self) -> Optional[float]:
        return None if self.report is None else self.report.get("formula_residual")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ordinal": self.ordinal,
            "seed": self.seed,
            "context": self.context,
            "pass": self.passed,
            "formula_residual": self.formula_residual,
            "error": self.error,
            "counterexample": self.counterexample,
            "failures": [] if self.report is None else self.report.get("failures", []),
            "report": self.report,
        }


@dataclass
class FuzzSummary:
    """Aggregated outcomes of a fuzz run, ordered by instance ordinal."""

    config: FuzzConfig
    outcomes: List[InstanceOutcome]

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def failures(self) -> List[InstanceOutcome]:
        return [o for o in self.outcomes if not o.passed]

    def residual_stats(self) -> Dict[str, Optional[float]]:
        values = [r for o in self.outcomes if (r := o.formula_residual) is not None]
        if not values:
            return {"max": None, "median": None}
        return {"max": max(values), "median": float(statistics.median(values))}

    def series_terms_max(self) -> Dict[str, int]:
        result: Dict[str, int] = {}
        for o in self.outcomes:
            if o.report is None:
                continue
            for name, terms in o.report.get("series_terms", {}).items():
                result[name] = max(result.get(name, 0), terms)
        return result

    def identity_residual_max(self) -> Dict[str, float]:
        result: Dict[str, float] = {}
        for o in self.outcomes:
            if o.report is None:
                continue
            for section in ("identity_residuals", "axiom_residuals"):
                for name, value in o.report.get(section, {}).items():
                    key = f"{section.split('_')[0]}.{name}"
                    result[key] = max(result.get(key, 0.0), value)
        return result

    def to_dict(self) -> Dict[str, Any]:
        stats = self.residual_stats()
        return {
            **self.config.to_dict(),
            "pass": self.passed,
            "passed": len(self.outcomes) - len(self.failures),
            "failed": len(self.failures),
            "max_formula_residual": stats["max"],
            "median_formula_residual": stats["median"],
            "max_residuals": self.identity_residual_max(),
            "max_series_terms": self.series_terms_max(),
            "failures": [o.to_dict() for o in self.failures],
        }


class FuzzRunner:
    """Generates, verifies and aggregates instances for one identity.

    Tolerances and series policy are the base values every instance is
    verified with.
    """

    def __init__(
        self,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        policy: SeriesPolicy = DEFAULT_POLICY,
    ):
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")
        self.tolerances = tolerances
        self.policy = policy
        self.loader = InstanceLoader()

    def build_instance(self, config: FuzzConfig, ordinal: int) -> InstanceFile:
        """Deterministic instance number `ordinal` of the run described by `config`."""
        instance_seed = derive_seed(config.seed, config.identity, ordinal)
        rng = np.random.default_rng([instance_seed, 1])
        low, high = config.dims
        dim = int(rng.integers(low, high + 1))
        context = AlgebraContext.from_kind(config.context_kind, dim)
        first, last = config.indices or (0, context.rep_dim)
        target = random_index(context, rng, min(last, context.rep_dim), first)
        spec = RandomSpec(instance_seed, context, target, config.lam)
        return gen_instance(config.identity, spec)

    def run_one(self, config: FuzzConfig, ordinal: int) -> InstanceOutcome:
        instance_seed = derive_seed(config.seed, config.identity, ordinal)
        try:
            instance = self.build_instance(config, ordinal)
        except PDrazinError as e:
            self.logger.error(f"Instance {ordinal}: generation failed: {e}")
            return InstanceOutcome(
                ordinal, instance_seed, "", False, error=f"{type(e).__name__}: {e}"
            )

        context = instance.context.describe()
        try:
            report = verify(instance, config.identity, self.tolerances, self.policy)
        except PDrazinError as e:
            self.logger.error(f"Instance {ordinal} ({context}): {type(e).__name__}: {e}")
            return InstanceOutcome(
                ordinal,
                instance_seed,
                context,
                False,
                error=f"{type(e).__name__}: {e}",
                instance=instance,
            )
        data = report.to_dict()
        data["failures"] = report.failures()
        return InstanceOutcome(
            ordinal,
            instance_seed,
            context,
            report.passed,
            report=data,
            instance=None if report.passed else instance,
        )

    def run(self, config: FuzzConfig) -> FuzzSummary:
        self.logger.info(
            f"Fuzzing {config.identity}: {config.count} instances, seed {config.seed}, "
            f"{config.context_kind.value} {config.dims[0]}..{config.dims[1]}, "
            f"{config.workers} worker(s)"
        )
        ordinals = range(config.count)
        if config.workers == 1:
            outcomes = [self.run_one(config, i) for i in ordinals]
        else:
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                outcomes = list(pool.map(lambda i: self.run_one(config, i), ordinals))

        summary = FuzzSummary(config, outcomes)
        for outcome in summary.failures:
            self._save_counterexample(config, outcome)
        self.logger.info(
            f"Fuzzing {config.identity} done: "
            f"{len(outcomes) - len(summary.failures)}/{len(outcomes)} passed"
        )
        return summary

    def _save_counterexample(self, config: FuzzConfig, outcome: InstanceOutcome) -> None:
        if config.out_dir is None or outcome.instance is None:
            return
        path = config.out_dir / f"{config.identity}-s{config.seed}-{outcome.ordinal}.json"
        self.loader.save(outcome.instance, path)
        outcome.counterexample = str(path)
        self.logger.warning(f"Counterexample {outcome.ordinal} written to {path}")
