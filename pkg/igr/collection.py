from __future__ import annotations

import dataclasses
from typing import ClassVar, Dict, Iterable, List, Sequence

import igr.parse as parse
from igr.errors import ParseError
from igr.weights import TwistedBundle, bundles


@dataclasses.dataclass
class CollectionSpec:
    """An ordered collection of objects, usually twisted Schur bundles.

    Members only need `twisted(l)` and `text()`, so formal complexes may
    sit next to bundles.
    """

    name: str
    members: List[TwistedBundle]

    B1: ClassVar[CollectionSpec]
    B2: ClassVar[CollectionSpec]
    B1B2: ClassVar[CollectionSpec]
    S1: ClassVar[CollectionSpec]
    S2: ClassVar[CollectionSpec]
    S: ClassVar[CollectionSpec]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def valid(self) -> bool:
        """Members must be pairwise distinct."""
        return len(set(self.members)) == len(self.members)

    def sorted(self) -> CollectionSpec:
        return CollectionSpec(self.name, sorted(self.members))

    def union(self, other: CollectionSpec, name: str) -> CollectionSpec:
        seen = list(self.members)
        seen.extend(m for m in other.members if m not in seen)
        return CollectionSpec(name, sorted(seen))

    def without(self, member: TwistedBundle, name: str) -> CollectionSpec:
        return CollectionSpec(name, [m for m in self.members if m != member])

    @staticmethod
    def parse(lines: Iterable[str], name: str = "file") -> CollectionSpec:
        members = [TwistedBundle.parse(line) for line in parse.remove_comments(lines)]
        collection = CollectionSpec(name, members)
        assert collection.valid(), f"duplicate members in {name}"
        return collection

    def serialize(self, out) -> None:
        print(f"# {self.name}", file=out)
        for member in self.members:
            print(member.text(), file=out)

    def serialize_to_string(self) -> str:
        return parse.serialize_to_string_impl(self.serialize)

    @staticmethod
    def preset(name: str) -> CollectionSpec:
        try:
            return PRESETS[name.upper()]
        except KeyError:
            raise ParseError(
                f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}"
            ) from None


def _named(name: str, weights: Sequence[Sequence[int]]) -> CollectionSpec:
    return CollectionSpec(name, list(bundles(weights)))


CollectionSpec.B1 = _named(
    "B1",
    [(0, 0, -2), (0, 0, -1), (1, 0, -1), (2, 0, -1), (0, 0, 0), (1, 0, 0), (2, 0, 0)],
)
CollectionSpec.B2 = _named(
    "B2",
    [(0, 0, -1), (1, 0, -1), (2, 0, -1), (0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)],
)
CollectionSpec.B1B2 = CollectionSpec.B1.union(CollectionSpec.B2, "B1B2")
CollectionSpec.S1 = _named("S1", [(0, 0, 0), (1, 0, 0), (2, 0, 0)])
CollectionSpec.S2 = _named("S2", [(0, 0, -2), (0, 0, -1), (1, 0, -1)])
CollectionSpec.S = CollectionSpec.B1.without(TwistedBundle.of(2, 0, -1), "S")

PRESETS: Dict[str, CollectionSpec] = {
    c.name: c
    for c in (
        CollectionSpec.B1,
        CollectionSpec.B2,
        CollectionSpec.B1B2,
        CollectionSpec.S1,
        CollectionSpec.S2,
        CollectionSpec.S,
    )
}
