"""
Monomial model: exponent vectors over a fixed, ordered variable universe.
"""
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from woideals.errors import ExponentOverflowError, ParseError, UniverseMismatchError

# Exponent cap; anything larger is rejected, never wrapped.
MAX_EXPONENT = 2 ** 16

_NAME = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
_FACTOR = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)(?:\^([0-9]+))?$')


@dataclass(frozen=True)
class VariableUniverse:
    """
    Ordered set of distinct variable names, one position per name.

    Attributes:
        names: The variable names in declaration order.
        index: Map from name to position (derived).
    """
    names: Tuple[str, ...]
    index: Dict[str, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, 'names', names)
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise ParseError(f"Invalid variable name: {name!r}")
        if len(set(names)) != len(names):
            raise ParseError(f"Duplicate variable names in {list(names)}")
        object.__setattr__(self, 'index', {name: i for i, name in enumerate(names)})

    def __hash__(self) -> int:
        return hash(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def position(self, name: str) -> int:
        """
        Get the position of a variable.

        Args:
            name: The variable name.

        Returns:
            int: Its position in the universe.
        """
        try:
            return self.index[name]
        except KeyError:
            raise UniverseMismatchError(f"Unknown variable '{name}'") from None

    def one(self) -> 'Monomial':
        """Return the constant monomial 1."""
        return Monomial(self, (0,) * len(self.names))

    def variable(self, name: str, exponent: int = 1) -> 'Monomial':
        """Return the monomial name^exponent."""
        exps = [0] * len(self.names)
        exps[self.position(name)] = exponent
        return Monomial(self, tuple(exps))

    def monomial(self, powers: Mapping[str, int]) -> 'Monomial':
        """Build a monomial from a name -> exponent mapping."""
        exps = [0] * len(self.names)
        for name, exponent in powers.items():
            exps[self.position(name)] += exponent
        return Monomial(self, tuple(exps))

    def ordered(self, names: Iterable[str]) -> List[str]:
        """Sort names by their position in the universe."""
        return sorted(set(names), key=self.position)

    def to_dict(self) -> Dict:
        return {'variables': list(self.names)}


@dataclass(frozen=True)
class Monomial:
    """
    A monomial x^a as an exponent vector.

    Attributes:
        universe: The variable universe the monomial lives in.
        exps: One non-negative exponent per variable; all zeros is 1.
    """
    universe: VariableUniverse
    exps: Tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exps)
        object.__setattr__(self, 'exps', exps)
        if len(exps) != len(self.universe.names):
            raise UniverseMismatchError(
                f"Exponent vector of length {len(exps)} for a universe of {len(self.universe.names)} variables"
            )
        if exps and min(exps) < 0:
            raise ParseError(f"Negative exponent in {exps}")
        if exps and max(exps) > MAX_EXPONENT:
            raise ExponentOverflowError(f"Exponent {max(exps)} exceeds the maximum {MAX_EXPONENT}")

    def __hash__(self) -> int:
        return hash(self.exps)

    def _check(self, other: 'Monomial') -> None:
        if other.universe is not self.universe and other.universe != self.universe:
            raise UniverseMismatchError(
                f"Monomials from different universes: {list(self.universe.names)} vs {list(other.universe.names)}"
            )

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> FrozenSet[str]:
        return frozenset(name for name, e in zip(self.universe.names, self.exps) if e)

    def is_one(self) -> bool:
        return not any(self.exps)

    def sort_key(self) -> Tuple:
        """
        Key of the canonical order: ascending degree, then lexicographic with
        the earlier variable heavier first.
        """
        return (sum(self.exps), tuple(-e for e in self.exps))

    def divides(self, other: 'Monomial') -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: 'Monomial') -> 'Monomial':
        self._check(other)
        return Monomial(self.universe, tuple(a if a >= b else b for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        self._check(other)
        return Monomial(self.universe, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def restrict(self, keep: Iterable[str]) -> 'Monomial':
        """
        Set the exponents of every variable outside `keep` to zero.

        Args:
            keep: Names of the variables that survive.

        Returns:
            Monomial: The substituted monomial (possibly 1).
        """
        positions = {self.universe.position(name) for name in keep}
        return Monomial(self.universe, tuple(e if i in positions else 0 for i, e in enumerate(self.exps)))

    def phi(self, sink_weights: Mapping[str, int]) -> 'Monomial':
        """
        Apply the substitution x_j -> x_j^{w_j} for the variables in `sink_weights`.

        Args:
            sink_weights: Map from variable name to its positive weight.

        Returns:
            Monomial: The image monomial.
        """
        factors = [1] * len(self.exps)
        for name, weight in sink_weights.items():
            if weight < 1:
                raise ParseError(f"Weight of {name} must be positive, got {weight}")
            factors[self.universe.position(name)] = weight
        return Monomial(self.universe, tuple(e * f for e, f in zip(self.exps, factors)))

    def squarefree(self) -> 'Monomial':
        return Monomial(self.universe, tuple(1 if e else 0 for e in self.exps))

    def to_text(self) -> str:
        """
        Render as text, e.g. x1^2*x2*x5^4 (exponent 1 elided, 1 for the constant).

        Returns:
            str: The canonical text form.
        """
        factors = []
        for name, e in zip(self.universe.names, self.exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return '*'.join(factors) if factors else '1'

    def __str__(self) -> str:
        return self.to_text()

    @staticmethod
    def parse(universe: VariableUniverse, text: str) -> 'Monomial':
        """
        Parse the text form produced by to_text.

        Args:
            universe: The universe to interpret variable names in.
            text: Text such as 'x1^2*x2'.

        Returns:
            Monomial: The parsed monomial.
        """
        text = text.strip()
        if text == '1':
            return universe.one()
        exps = [0] * len(universe.names)
        for offset, factor in enumerate(text.split('*')):
            match = _FACTOR.match(factor.strip())
            if not match:
                raise ParseError(f"Malformed factor {factor!r} at position {offset} of {text!r}")
            name, exponent = match.group(1), match.group(2)
            if name not in universe.index:
                raise ParseError(f"Unknown variable '{name}' in {text!r}")
            exps[universe.index[name]] += int(exponent) if exponent is not None else 1
        return Monomial(universe, tuple(exps))


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return a.divides(b)


def lcm_mono(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def mul_mono(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def subst_one(m: Monomial, keep: Iterable[str]) -> Monomial:
    """Substitute 1 for every variable outside `keep`."""
    return m.restrict(keep)


def phi_map(m: Monomial, sink_weights: Mapping[str, int]) -> Monomial:
    return m.phi(sink_weights)
