"""Itemized, exactly additive energy budgets."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidInputError


@dataclass(frozen=True)
class EnergyLedger:
    """Ordered ``(category, joules)`` items.

    Labels are dotted (``water.dig``); :meth:`grouped` folds them on the first
    segment. The total is the correctly rounded sum of the items.
    """

    items: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        items = tuple((str(k), float(v)) for k, v in self.items)
        labels = [k for k, _ in items]
        if len(set(labels)) != len(labels):
            raise InvalidInputError("duplicate ledger category")
        object.__setattr__(self, "items", items)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, float]]) -> "EnergyLedger":
        return cls(tuple(pairs))

    @property
    def total(self) -> float:
        return math.fsum(v for _, v in self.items)

    @property
    def categories(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.items)

    def __iter__(self) -> Iterator[tuple[str, float]]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, category: str) -> float:
        for k, v in self.items:
            if k == category:
                return v
        raise KeyError(category)

    def get(self, category: str, default: float = 0.0) -> float:
        try:
            return self[category]
        except KeyError:
            return default

    def group_total(self, prefix: str) -> float:
        """Sum of every item whose label is ``prefix`` or starts with ``prefix.``."""
        return math.fsum(v for k, v in self.items
                         if k == prefix or k.startswith(prefix + "."))

    def grouped(self) -> "EnergyLedger":
        order: list[str] = []
        for k, _ in self.items:
            head = k.split(".", 1)[0]
            if head not in order:
                order.append(head)
        return EnergyLedger(tuple((h, self.group_total(h)) for h in order))

    def percents(self) -> tuple[tuple[str, float], ...]:
        """Share of the total per item, in percent; all zero for an empty budget."""
        total = self.total
        if total == 0:
            return tuple((k, 0.0) for k, _ in self.items)
        return tuple((k, 100.0 * v / total) for k, v in self.items)

    def share(self, prefix: str) -> float:
        total = self.total
        return 100.0 * self.group_total(prefix) / total if total else 0.0

    def scaled(self, factor: float) -> "EnergyLedger":
        return EnergyLedger(tuple((k, v * factor) for k, v in self.items))
