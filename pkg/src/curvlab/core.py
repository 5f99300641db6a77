"""Group oracles, breadth-first word metrics, and sphere/ball enumeration.

Every group handled by this library is supplied as an explicit
:class:`GroupOracle`: generators, composition, inversion, identity, and a
canonical byte encoding of elements.  :func:`bfs_metric` turns an oracle into
a :class:`MetricTable` of exact word lengths out to a chosen horizon.  The
table is both the metric source for groups without a closed-form length and
the independent cross-check for groups that have one.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

Element = Any  # canonical hashable value; each oracle fixes its own shape

DEFAULT_BUDGET = 50_000_000


class CurvlabError(Exception):
    """Base class for errors raised by this library."""


class OutOfHorizonError(CurvlabError):
    """A word length was requested beyond the table horizon with no closed form to fall back on."""


class ResourceLimitError(CurvlabError):
    """BFS enumeration exceeded the configured element budget; lower the horizon or raise the budget."""


class IdentityElementError(CurvlabError):
    """The requested quantity is undefined at the identity element."""


def plain_encode(value: Any) -> bytes:
    """Serialize a plain nested-tuple/int value to canonical bytes."""
    return repr(value).encode("ascii")


def plain_decode(data: bytes) -> Any:
    return ast.literal_eval(data.decode("ascii"))


@dataclass(frozen=True)
class GeneratorSet:
    """An ordered, inverse-closed generating set.

    ``inverse[i]`` is the index of the formal inverse of ``labels[i]``.  The
    pairing must be a self-inverse bijection; a generator paired with itself
    is an involution and contributes a single entry.
    """

    labels: tuple[str, ...]
    inverse: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n == 0:
            raise ValueError("generating set must be nonempty")
        if len(set(self.labels)) != n:
            raise ValueError("generator labels must be distinct")
        if len(self.inverse) != n:
            raise ValueError("inverse pairing must cover every generator")
        for i, j in enumerate(self.inverse):
            if not (0 <= j < n) or self.inverse[j] != i:
                raise ValueError("inverse pairing must be a self-inverse bijection on indices")

    def is_involution(self, i: int) -> bool:
        return self.inverse[i] == i

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class GroupOracle:
    """A group presented through explicit arithmetic on canonical elements.

    ``encode`` must be injective (equal keys exactly for equal group
    elements) and ``decode`` must invert it; BFS layer order, cache files and
    all deterministic output orderings derive from the encode keys.
    ``closed_length`` may return ``None`` for elements outside the domain of
    the closed formula, in which case callers fall back to a BFS table.
    """

    group_id: str
    generator_set: GeneratorSet
    generators: tuple[Element, ...]
    identity: Element
    compose: Callable[[Element, Element], Element]
    invert: Callable[[Element], Element]
    encode: Callable[[Element], bytes]
    decode: Callable[[bytes], Element]
    closed_length: Optional[Callable[[Element], Optional[int]]] = None

    def generator(self, label: str) -> Element:
        try:
            return self.generators[self.generator_set.labels.index(label)]
        except ValueError:
            raise KeyError(f"{self.group_id} has no generator {label!r}") from None

    def evaluate(self, labels: Iterable[str]) -> Element:
        """Compose a word given as a sequence of generator labels."""
        out = self.identity
        for lab in labels:
            out = self.compose(out, self.generator(lab))
        return out

    def conjugate(self, g: Element, w: Element) -> Element:
        """w^-1 g w."""
        return self.compose(self.compose(self.invert(w), g), w)


@dataclass(frozen=True)
class MetricTable:
    """Exact word lengths for the ball of radius ``horizon`` around the identity.

    ``layers[r]`` holds the sphere of radius r sorted by encode key; the table
    is immutable after construction and safe for concurrent readers.
    """

    group_id: str
    horizon: int
    layers: tuple[tuple[Element, ...], ...]
    dist: dict[Element, int] = field(repr=False)

    def distance(self, element: Element) -> Optional[int]:
        return self.dist.get(element)

    def __contains__(self, element: Element) -> bool:
        return element in self.dist

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def ball_size(self, r: int) -> int:
        if r > self.horizon:
            raise OutOfHorizonError(f"radius {r} exceeds horizon {self.horizon}")
        return sum(len(self.layers[i]) for i in range(r + 1))


def bfs_metric(oracle: GroupOracle, horizon: int, *, budget: int = DEFAULT_BUDGET) -> MetricTable:
    """Breadth-first enumeration of the ball of radius ``horizon``.

    Layers are generated in lexicographic encode order, so the result is
    deterministic regardless of hash seeds.  Raises
    :class:`ResourceLimitError` once more than ``budget`` elements would be
    retained.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    dist: dict[Element, int] = {oracle.identity: 0}
    layers: list[tuple[Element, ...]] = [(oracle.identity,)]
    frontier: Sequence[Element] = layers[0]
    for r in range(1, horizon + 1):
        fresh: set[Element] = set()
        for el in frontier:
            for gen in oracle.generators:
                h = oracle.compose(el, gen)
                if h not in dist:
                    fresh.add(h)
        if len(dist) + len(fresh) > budget:
            raise ResourceLimitError(
                f"ball of radius {r} for {oracle.group_id} exceeds the element budget "
                f"({budget}); lower the horizon or raise the budget"
            )
        frontier = tuple(sorted(fresh, key=oracle.encode))
        for el in frontier:
            dist[el] = r
        layers.append(frontier)
    return MetricTable(oracle.group_id, horizon, tuple(layers), dist)


def sphere(table: MetricTable, r: int) -> tuple[Element, ...]:
    """The sphere of radius r around the identity, in deterministic order."""
    if r < 0 or r > table.horizon:
        raise OutOfHorizonError(f"radius {r} outside table horizon {table.horizon}")
    return table.layers[r]


def ball(table: MetricTable, r: int) -> tuple[Element, ...]:
    """The ball of radius r around the identity (identity included)."""
    if r < 0 or r > table.horizon:
        raise OutOfHorizonError(f"radius {r} outside table horizon {table.horizon}")
    out: list[Element] = []
    for i in range(r + 1):
        out.extend(table.layers[i])
    return tuple(out)


def word_length(oracle: GroupOracle, element: Element, table: Optional[MetricTable] = None) -> int:
    """Exact distance from the identity, from the table or the closed form.

    The two sources agree wherever both apply (checked exhaustively in the
    test suite); the table is consulted first because it is authoritative.
    """
    if table is not None:
        d = table.distance(element)
        if d is not None:
            return d
    if oracle.closed_length is not None:
        v = oracle.closed_length(element)
        if v is not None:
            return v
    raise OutOfHorizonError(
        f"length of {element!r} in {oracle.group_id} is not covered by the table"
        + (f" (horizon {table.horizon})" if table is not None else " (no table)")
        + " and no closed form applies; raise the horizon"
    )
