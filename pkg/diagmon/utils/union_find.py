# https://en.wikipedia.org/wiki/Disjoint-set_data_structure

import collections
from collections.abc import Hashable, Iterable
from typing import Generic, TypeVar

T = TypeVar("T", bound=Hashable)


class DisjointSet(Generic[T]):
    def __init__(self, elements: Iterable[T] = ()):
        self.parent = {}
        self.rank = {}
        for e in elements:
            self.make_set(e)

    def __contains__(self, e: T) -> bool:
        return e in self.parent

    def __len__(self) -> int:
        return len(self.parent)

    def make_set(self, e: T):
        if e in self.parent:
            return
        self.parent[e] = e
        self.rank[e] = 0

    # find with path compression
    def find(self, e: T) -> T:
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    # union by rank; returns False when already joined
    def union(self, x: T, y: T) -> bool:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return False
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root

        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1
        return True

    def same(self, x: T, y: T) -> bool:
        return self.find(x) == self.find(y)

    def sets(self) -> frozenset[frozenset[T]]:
        sets = collections.defaultdict(set)
        for e in self.parent:
            sets[self.find(e)].add(e)
        return frozenset(frozenset(s) for s in sets.values())

    def groups(self) -> list[list[T]]:
        """Classes as lists, in first-insertion order of their earliest member."""
        groups = {}
        for e in self.parent:
            groups.setdefault(self.find(e), []).append(e)
        return list(groups.values())

    def count(self) -> int:
        return sum(1 for e in self.parent if self.parent[e] == e)
