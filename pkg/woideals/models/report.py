"""
Report models: power comparisons, theorem verdicts and sweep reports.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from woideals.models.monomial import Monomial


@dataclass(frozen=True)
class EqualityReport:
    """
    Outcome of comparing the symbolic power I^(s) with the ordinary power I^s.

    Attributes:
        s: The power.
        ordinary_gens: Number of minimal generators of I^s.
        symbolic_gens: Number of minimal generators of I^(s).
        equal: Whether the two ideals coincide.
        witness: Canonically smallest minimal generator of I^(s) outside I^s, when unequal.
        method_agreement: Whether the grouped formula and the localisation oracle agree.
        elapsed_ms: Wall time of the comparison, when measured.
    """
    s: int
    ordinary_gens: int
    symbolic_gens: int
    equal: bool
    witness: Optional[Monomial]
    method_agreement: bool
    elapsed_ms: Optional[float] = None

    def to_dict(self, timings: bool = True) -> Dict:
        """
        Convert the report to a dictionary.

        Args:
            timings: Include the elapsed_ms field.

        Returns:
            Dict: The JSON report.
        """
        data = {
            's': self.s,
            'equal': self.equal,
            'ordinary_gens': self.ordinary_gens,
            'symbolic_gens': self.symbolic_gens,
            'witness': self.witness.to_text() if self.witness is not None else None,
            'methods_agree': self.method_agreement
        }
        if timings:
            data['elapsed_ms'] = round(self.elapsed_ms, 3) if self.elapsed_ms is not None else None
        return data


@dataclass(frozen=True)
class ConstructionWitness:
    """
    A witness monomial taken from a proof construction.

    Attributes:
        monomial: The witness.
        s: The power it is claimed to separate.
        in_symbolic: Membership in I^(s).
        in_ordinary: Membership in I^s.
    """
    monomial: Monomial
    s: int
    in_symbolic: bool
    in_ordinary: bool

    @property
    def verified(self) -> bool:
        return self.in_symbolic and not self.in_ordinary

    def to_dict(self) -> Dict:
        return {
            'monomial': self.monomial.to_text(),
            's': self.s,
            'in_symbolic': self.in_symbolic,
            'in_ordinary': self.in_ordinary,
            'verified': self.verified
        }


@dataclass(frozen=True)
class TheoremVerdict:
    """
    Evaluation of one theorem's claim on one graph for s = 2..s_max.

    Attributes:
        family: The predicate tag.
        relation: 'implication' or 'biconditional'.
        hypothesis: Truth value of the hypothesis on the graph.
        conclusion: Truth value of the conclusion over the tested powers.
        comparisons: One EqualityReport per tested power.
        converse: 'checked', 'untested' (s_max below the witness power) or 'not-applicable'.
        satisfied: Whether the theorem's statement holds on the tested range.
        construction_witness: The proof's witness, when the hypothesis fails and one is defined.
        notes: Extra observations.
    """
    family: str
    relation: str
    hypothesis: bool
    conclusion: bool
    comparisons: Tuple[EqualityReport, ...]
    converse: str
    satisfied: bool
    construction_witness: Optional[ConstructionWitness] = None
    notes: Tuple[str, ...] = ()

    @property
    def tested_s(self) -> List[int]:
        return [report.s for report in self.comparisons]

    def to_dict(self, timings: bool = False) -> Dict:
        """
        Convert the verdict to a dictionary.

        Args:
            timings: Include per-power timings.

        Returns:
            Dict: The JSON verdict.
        """
        return {
            'family': self.family,
            'relation': self.relation,
            'tested_s': self.tested_s,
            'hypothesis': self.hypothesis,
            'conclusion': self.conclusion,
            'converse': self.converse,
            'satisfied': self.satisfied,
            'comparisons': [report.to_dict(timings) for report in self.comparisons],
            'construction_witness': (
                self.construction_witness.to_dict() if self.construction_witness is not None else None
            ),
            'notes': list(self.notes)
        }


@dataclass(frozen=True)
class SweepSpec:
    """
    Parameters of a theorem sweep.

    Attributes:
        family: The family to sweep.
        sizes: Family sizes (cycle length, star order, path length, ...).
        parts: Part sizes for complete multipartite sweeps.
        weights: Weight alphabet.
        samples: Number of seeded random instances per size.
        seed: Seed of the instance generator.
        s_max: Largest power tested.
        jobs: Parallelism degree.
    """
    family: str
    sizes: Tuple[int, ...] = ()
    parts: Tuple[Tuple[int, ...], ...] = ()
    weights: Tuple[int, ...] = (1, 2)
    samples: int = 10
    seed: int = 0
    s_max: int = 3
    jobs: int = 1

    def to_dict(self) -> Dict:
        return {
            'family': self.family,
            'sizes': list(self.sizes),
            'parts': [list(p) for p in self.parts],
            'weights': list(self.weights),
            'samples': self.samples,
            'seed': self.seed,
            's_max': self.s_max
        }


@dataclass
class SweepReport:
    """
    Aggregated sweep outcome.

    Attributes:
        spec: The sweep parameters.
        instances: One entry per instance with its label, graph and verdict.
        satisfied: Instances whose verdict holds.
        violated: Instances whose verdict fails.
        skipped: Instances rejected by the family precondition.
        failures: Violated instances with the graph serialized for replay.
    """
    spec: SweepSpec
    instances: List[Dict] = field(default_factory=list)
    satisfied: int = 0
    violated: int = 0
    skipped: int = 0
    failures: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violated == 0

    def to_dict(self) -> Dict:
        """
        Convert the report to a dictionary.

        Returns:
            Dict: Spec, counts, per-instance verdicts and replayable failures.
        """
        return {
            'spec': self.spec.to_dict(),
            'passed': self.passed,
            'counts': {
                'satisfied': self.satisfied,
                'violated': self.violated,
                'skipped': self.skipped
            },
            'failures': self.failures,
            'instances': self.instances
        }
