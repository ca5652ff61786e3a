"""
Monomial ideal model: ideals stored by their minimal generating sets.
"""
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from woideals.errors import CapExceededError, ParseError, PowerError, UniverseMismatchError
from woideals.limits import DEFAULT_LIMITS
from woideals.models.monomial import Monomial, VariableUniverse


def _divides(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Monomial ideal given by its minimal generators in canonical order.

    Instances are built through `minimalize` (or the operations below); the
    constructor trusts that `gens` is already minimal and sorted.

    Attributes:
        universe: The variable universe.
        gens: Minimal generators, duplicate-free, in canonical order. Empty for the zero ideal.
    """
    universe: VariableUniverse
    gens: Tuple[Monomial, ...]

    @staticmethod
    def minimalize(universe: VariableUniverse, gens: Iterable[Monomial],
                   max_generators: Optional[int] = None) -> 'MonomialIdeal':
        """
        Reduce a generating set to the minimal antichain under divisibility.

        Args:
            universe: The universe every generator must belong to.
            gens: Any generating set.
            max_generators: Ceiling on the size of the result.

        Returns:
            MonomialIdeal: The ideal generated by `gens`.
        """
        unique = set()
        for g in gens:
            if g.universe is not universe and g.universe != universe:
                raise UniverseMismatchError(f"Generator {g} is not over {list(universe.names)}")
            unique.add(g)
        kept: List[Monomial] = []
        # Ascending degree, so a divisor is always seen before its multiples.
        for m in sorted(unique, key=Monomial.sort_key):
            exps = m.exps
            if not any(_divides(k.exps, exps) for k in kept):
                kept.append(m)
        ceiling = DEFAULT_LIMITS.max_generators if max_generators is None else max_generators
        if len(kept) > ceiling:
            raise CapExceededError(
                f"Ideal has {len(kept)} minimal generators, above the ceiling of {ceiling} "
                f"(pass --max-generators or raise WOIDEALS_MAX_GENERATORS)"
            )
        return MonomialIdeal(universe, tuple(kept))

    @staticmethod
    def zero(universe: VariableUniverse) -> 'MonomialIdeal':
        return MonomialIdeal(universe, ())

    @staticmethod
    def unit(universe: VariableUniverse) -> 'MonomialIdeal':
        return MonomialIdeal(universe, (universe.one(),))

    @staticmethod
    def of_variables(universe: VariableUniverse, names: Iterable[str]) -> 'MonomialIdeal':
        """The monomial prime (C) generated by the named variables."""
        return MonomialIdeal.minimalize(universe, [universe.variable(name) for name in names])

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def _check(self, other: 'MonomialIdeal') -> None:
        if other.universe is not self.universe and other.universe != self.universe:
            raise UniverseMismatchError(
                f"Ideals from different universes: {list(self.universe.names)} vs {list(other.universe.names)}"
            )

    def contains(self, m: Monomial) -> bool:
        if m.universe is not self.universe and m.universe != self.universe:
            raise UniverseMismatchError(f"Monomial {m} is not over {list(self.universe.names)}")
        exps = m.exps
        return any(_divides(g.exps, exps) for g in self.gens)

    def intersect(self, other: 'MonomialIdeal', max_generators: Optional[int] = None) -> 'MonomialIdeal':
        self._check(other)
        return MonomialIdeal.minimalize(
            self.universe, (f.lcm(g) for f in self.gens for g in other.gens), max_generators
        )

    def product(self, other: 'MonomialIdeal', max_generators: Optional[int] = None) -> 'MonomialIdeal':
        self._check(other)
        return MonomialIdeal.minimalize(
            self.universe, (f * g for f in self.gens for g in other.gens), max_generators
        )

    def power(self, s: int, max_generators: Optional[int] = None) -> 'MonomialIdeal':
        """
        Compute the ordinary power I^s by repeated multiplication.

        Args:
            s: A positive integer.
            max_generators: Ceiling on every intermediate generating set.

        Returns:
            MonomialIdeal: I^s.
        """
        if not isinstance(s, int) or s < 1:
            raise PowerError(f"Power must be a positive integer, got {s!r}")
        result = self
        for _ in range(s - 1):
            result = result.product(self, max_generators)
        return result

    def sum(self, other: 'MonomialIdeal', max_generators: Optional[int] = None) -> 'MonomialIdeal':
        self._check(other)
        return MonomialIdeal.minimalize(self.universe, self.gens + other.gens, max_generators)

    def radical(self) -> 'MonomialIdeal':
        return MonomialIdeal.minimalize(self.universe, (g.squarefree() for g in self.gens))

    def is_subset(self, other: 'MonomialIdeal') -> bool:
        self._check(other)
        return all(other.contains(g) for g in self.gens)

    def localize_contract(self, keep: Iterable[str], max_generators: Optional[int] = None) -> 'MonomialIdeal':
        """
        Contract the localisation at the monomial prime (keep) back to the ring.

        For monomial ideals this sets every variable outside `keep` to 1. The
        result is the unit ideal when some generator lies entirely outside `keep`.

        Args:
            keep: Names of the variables generating the prime.
            max_generators: Ceiling on the result.

        Returns:
            MonomialIdeal: I R_(keep) intersected with R.
        """
        keep = list(keep)
        return MonomialIdeal.minimalize(self.universe, (g.restrict(keep) for g in self.gens), max_generators)

    def map_generators(self, fn, max_generators: Optional[int] = None) -> 'MonomialIdeal':
        """Apply a monomial map to every generator and minimalize."""
        return MonomialIdeal.minimalize(self.universe, (fn(g) for g in self.gens), max_generators)

    def texts(self) -> List[str]:
        return [g.to_text() for g in self.gens]

    def to_text(self) -> str:
        """
        Render as '(g1, g2, ...)' in canonical order; '(0)' for the zero ideal.

        Returns:
            str: The text form.
        """
        if not self.gens:
            return '(0)'
        return '(' + ', '.join(self.texts()) + ')'

    def __str__(self) -> str:
        return self.to_text()

    @staticmethod
    def parse(universe: VariableUniverse, text: str) -> 'MonomialIdeal':
        """
        Parse the text form produced by to_text.

        Args:
            universe: The universe to read variable names in.
            text: Text such as '(x1*x2^2, x2*x3)'.

        Returns:
            MonomialIdeal: The parsed ideal, minimalized.
        """
        body = text.strip()
        if not (body.startswith('(') and body.endswith(')')):
            raise ParseError(f"Ideal text must be enclosed in parentheses: {text!r}")
        body = body[1:-1].strip()
        if body in ('', '0'):
            return MonomialIdeal.zero(universe)
        return MonomialIdeal.minimalize(universe, [Monomial.parse(universe, part) for part in body.split(',')])

    def to_dict(self) -> Dict:
        """
        Convert the ideal to a dictionary.

        Returns:
            Dict: Variable names and the exponent vectors of the generators.
        """
        return {
            'variables': list(self.universe.names),
            'generators': [list(g.exps) for g in self.gens]
        }

    @staticmethod
    def from_dict(data: Dict) -> 'MonomialIdeal':
        """
        Create an ideal from its dictionary form.

        Args:
            data: Dictionary with 'variables' and 'generators'.

        Returns:
            MonomialIdeal: The ideal, minimalized.
        """
        try:
            universe = VariableUniverse(tuple(data['variables']))
            gens = [Monomial(universe, tuple(int(e) for e in exps)) for exps in data['generators']]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed ideal JSON: {e}") from None
        return MonomialIdeal.minimalize(universe, gens)


def minimalize(universe: VariableUniverse, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal.minimalize(universe, gens)


def contains_monomial(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains(m)


def intersect(i: MonomialIdeal, j: MonomialIdeal, max_generators: Optional[int] = None) -> MonomialIdeal:
    return i.intersect(j, max_generators)


def intersect_all(universe: VariableUniverse, ideals: Iterable[MonomialIdeal],
                  max_generators: Optional[int] = None) -> MonomialIdeal:
    """
    Left-fold intersection, minimalizing after every step.

    Args:
        universe: Universe of the result (the unit ideal when `ideals` is empty).
        ideals: The ideals to intersect.
        max_generators: Ceiling on every intermediate result.

    Returns:
        MonomialIdeal: The intersection.
    """
    return reduce(lambda acc, ideal: acc.intersect(ideal, max_generators), ideals, MonomialIdeal.unit(universe))


def product(i: MonomialIdeal, j: MonomialIdeal, max_generators: Optional[int] = None) -> MonomialIdeal:
    return i.product(j, max_generators)


def power(i: MonomialIdeal, s: int, max_generators: Optional[int] = None) -> MonomialIdeal:
    return i.power(s, max_generators)


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal, max_generators: Optional[int] = None) -> MonomialIdeal:
    return i.sum(j, max_generators)


def radical(i: MonomialIdeal) -> MonomialIdeal:
    return i.radical()


def ideal_equals(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    """Equality of canonical minimal generating sets."""
    i._check(j)
    return i.gens == j.gens


def is_subset(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    return i.is_subset(j)


def localize_contract(i: MonomialIdeal, keep: Iterable[str], max_generators: Optional[int] = None) -> MonomialIdeal:
    return i.localize_contract(keep, max_generators)
