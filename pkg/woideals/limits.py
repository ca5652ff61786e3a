"""
Resource caps shared by the cover enumeration and the ideal arithmetic.
"""
from dataclasses import dataclass, replace
from typing import Mapping


@dataclass(frozen=True)
class Limits:
    """
    Desk-scale resource bounds.

    Attributes:
        cover_cap: Largest vertex count for which all vertex subsets are enumerated.
        max_power: Largest power s accepted by the power computations.
        max_generators: Largest minimal generating set any ideal may reach.
        allow_large: Lift the cover cap (the generator ceiling still applies).
    """
    cover_cap: int = 24
    max_power: int = 6
    max_generators: int = 200_000
    allow_large: bool = False

    @staticmethod
    def from_config(config: Mapping) -> 'Limits':
        """
        Build limits from a resolved configuration mapping.

        Args:
            config: Mapping with COVER_CAP, MAX_POWER and MAX_GENERATORS keys.

        Returns:
            Limits: The corresponding limits, large enumeration disabled.
        """
        return Limits(
            cover_cap=int(config.get('COVER_CAP', DEFAULT_LIMITS.cover_cap)),
            max_power=int(config.get('MAX_POWER', DEFAULT_LIMITS.max_power)),
            max_generators=int(config.get('MAX_GENERATORS', DEFAULT_LIMITS.max_generators))
        )

    def lifted(self) -> 'Limits':
        """Return a copy with the cover cap lifted."""
        return replace(self, allow_large=True)


DEFAULT_LIMITS = Limits()
