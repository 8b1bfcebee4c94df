"""Formal iterated brackets of generators and their skew-symmetric normal form."""

from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import ParameterError, TermCapExceededError

TERM_CACHE_SIZE = 256


class BracketTree:
    """
    A leaf x_i (generator i, 1-based) or a bracket of n subtrees.

    Weight counts bracket applications: a leaf has weight 1 and a node has
    the sum of its children's weights minus n - 2, so [x1, ..., xn] has
    weight 2. Trees are totally ordered by key: weight first, then the
    children's keys lexicographically, leaves by generator.
    """

    __slots__ = ("generator", "children", "weight", "key")

    def __init__(self, generator: int = 0, children: Sequence["BracketTree"] = ()):
        self.generator = generator
        self.children = tuple(children)
        if self.children:
            self.weight = sum(c.weight for c in self.children) - len(self.children) + 2
            self.key = (self.weight, tuple(c.key for c in self.children))
        else:
            if generator < 1:
                raise ParameterError(f"generators are numbered from 1, got {generator}")
            self.weight = 1
            self.key = (1, generator)

    @classmethod
    def leaf(cls, generator: int) -> "BracketTree":
        return cls(generator)

    @classmethod
    def node(cls, *children: "BracketTree") -> "BracketTree":
        if len(children) < 2:
            raise ParameterError("a bracket needs at least two arguments")
        return cls(0, children)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __eq__(self, other) -> bool:
        return isinstance(other, BracketTree) and self.key == other.key

    def __lt__(self, other: "BracketTree") -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        if self.is_leaf:
            return f"x{self.generator}"
        return "[" + ",".join(str(c) for c in self.children) + "]"

    def __repr__(self) -> str:
        return f"BracketTree({self})"


def sort_descending(trees: Sequence[BracketTree]) -> Tuple[int, Tuple[BracketTree, ...]]:
    """
    Sort trees strictly descending.

    Returns:
        Tuple of (sign of the sorting permutation, sorted trees); the sign is
        0 when two trees coincide
    """
    items = list(trees)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1].key < items[j].key:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    if any(items[i] == items[i + 1] for i in range(len(items) - 1)):
        return 0, tuple(items)
    return sign, tuple(items)


def normalize(tree: BracketTree) -> Optional[Tuple[int, BracketTree]]:
    """
    Skew-symmetric normal form.

    Returns:
        (sign, canonical tree) with tree = sign * canonical tree, or None
        when the tree vanishes because some node has two equal children
    """
    if tree.is_leaf:
        return 1, tree
    sign = 1
    children = []
    for child in tree.children:
        normal = normalize(child)
        if normal is None:
            return None
        sign *= normal[0]
        children.append(normal[1])
    order, children = sort_descending(children)
    if not order:
        return None
    return sign * order, BracketTree(0, children)


def weight_splits(total: int, parts: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of positive integers <= largest summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total - parts + 1, largest), 0, -1):
        for rest in weight_splits(total - first, parts - 1, first):
            yield (first,) + rest


def descending_tuples(
    weights: Tuple[int, ...],
    terms_of_weight,
) -> Iterator[Tuple[BracketTree, ...]]:
    """
    Strictly descending tuples of canonical trees with the given weights.

    weights must be non-increasing; terms_of_weight(u) returns the canonical
    trees of weight u in ascending order.
    """
    groups: List[Tuple[int, int]] = []
    for u in weights:
        if groups and groups[-1][0] == u:
            groups[-1] = (u, groups[-1][1] + 1)
        else:
            groups.append((u, 1))
    choices = [
        [tuple(reversed(c)) for c in combinations(terms_of_weight(u), count)]
        for u, count in groups
    ]
    for picked in product(*choices):
        yield tuple(t for group in picked for t in group)


@lru_cache(maxsize=4 * TERM_CACHE_SIZE)
def count_terms(d: int, n: int, w: int) -> int:
    """Number of canonical trees of weight w, without building them."""
    if w == 1:
        return d
    total = 0
    for weights in weight_splits(w + n - 2, n, w - 1):
        size = 1
        for u in set(weights):
            size *= comb(count_terms(d, n, u), weights.count(u))
        total += size
    return total


@lru_cache(maxsize=TERM_CACHE_SIZE)
def _terms(d: int, n: int, w: int) -> Tuple[BracketTree, ...]:
    if w == 1:
        return tuple(BracketTree.leaf(i) for i in range(1, d + 1))
    trees = []
    for weights in weight_splits(w + n - 2, n, w - 1):
        for children in descending_tuples(weights, lambda u: _terms(d, n, u)):
            trees.append(BracketTree(0, children))
    trees.sort(key=lambda t: t.key)
    return tuple(trees)


def enumerate_terms(d: int, n: int, w: int, term_cap: Optional[int] = None) -> List[BracketTree]:
    """
    Canonical trees of weight w on generators x1..xd, in ascending order.

    Raises:
        TermCapExceededError: if more than term_cap trees would be built
    """
    if d < 0 or n < 2 or w < 1:
        raise ParameterError(f"invalid parameters d={d}, n={n}, w={w}")
    if term_cap is not None:
        for u in range(1, w + 1):
            count = count_terms(d, n, u)
            if count > term_cap:
                raise TermCapExceededError(count, term_cap, u)
    return list(_terms(d, n, w))


def term_index(terms: Sequence[BracketTree]) -> Dict[BracketTree, int]:
    return {t: i for i, t in enumerate(terms)}
