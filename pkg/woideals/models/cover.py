"""
Vertex cover models: the L1/L2/L3 partition of a cover and the strong-cover census.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple


@dataclass(frozen=True)
class CoverPartition:
    """
    A vertex cover C with its partition C = L1 + L2 + L3.

    Attributes:
        cover: The vertices of C in variable order.
        l1: Vertices with an out-neighbour outside C.
        l2: Remaining vertices with an in-neighbour outside C.
        l3: Vertices whose whole neighbourhood lies in C.
        is_minimal: True iff L3 is empty.
        is_strong: True iff every L3 vertex has a weighted in-neighbour in C minus L1.
    """
    cover: Tuple[str, ...]
    l1: Tuple[str, ...]
    l2: Tuple[str, ...]
    l3: Tuple[str, ...]
    is_minimal: bool
    is_strong: bool

    @property
    def vertices(self) -> FrozenSet[str]:
        return frozenset(self.cover)

    def to_dict(self) -> Dict:
        """
        Convert the partition to a dictionary.

        Returns:
            Dict: The cover, its three parts and both flags.
        """
        return {
            'cover': list(self.cover),
            'L1': list(self.l1),
            'L2': list(self.l2),
            'L3': list(self.l3),
            'minimal': self.is_minimal,
            'strong': self.is_strong
        }


@dataclass(frozen=True)
class StrongCoverCensus:
    """
    All strong covers of a graph grouped under the maximal ones.

    Attributes:
        strong_covers: Every strong cover, in canonical subset order.
        maximal_groups: Pairs (index of a maximal strong cover, indices of all
            strong covers contained in it, itself included). A strong cover
            contained in several maximal ones appears in each group.
    """
    strong_covers: Tuple[CoverPartition, ...]
    maximal_groups: Tuple[Tuple[int, Tuple[int, ...]], ...]

    def maximal(self) -> List[CoverPartition]:
        return [self.strong_covers[top] for top, _ in self.maximal_groups]

    def groups(self) -> List[List[CoverPartition]]:
        return [[self.strong_covers[i] for i in members] for _, members in self.maximal_groups]

    def cover_sets(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(p.vertices for p in self.strong_covers)

    def to_dict(self) -> Dict:
        return {
            'strong_covers': [p.to_dict() for p in self.strong_covers],
            'maximal_groups': [
                {'maximal': top, 'members': list(members)} for top, members in self.maximal_groups
            ]
        }
