"""Fixed-point character formulas and configuration enumeration.

All formulas are Laurent polynomials in the local chart variables; the
outer partition (size n1) plays the role of Z1 and the inner partition
(size n2) the role of Z2.  That pairing is fixed by two constraints
checked in the tests: the diagonal Z1 = Z2 reduces to the Hilbert-scheme
tangent character, and the signed rank of the nested tangent character
equals n1 + n2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .charalg import LocalCharacter
from .errors import InvalidNesting
from .partitions import Partition, box_char, nested_pairs, partitions_of
from .toric import ToricSurfaceDescriptor

# (1 - t1)(1 - t2) / (t1 t2), the two-variable Koszul factor
_KOSZUL = LocalCharacter(
    {(-1, -1): 1, (0, -1): -1, (-1, 0): -1, (0, 0): 1}
)
_INV_T1T2 = LocalCharacter.monomial(-1, -1)


def nested_tangent_char(Z1: LocalCharacter, Z2: LocalCharacter) -> LocalCharacter:
    """Virtual tangent character of the nested scheme at one chart."""
    return (
        Z1
        + Z2.bar() * _INV_T1T2
        + (Z1.bar() * Z2 - Z1.bar() * Z1 - Z2.bar() * Z2) * _KOSZUL
    )


def hilb_tangent_char(Z: LocalCharacter) -> LocalCharacter:
    """Tangent character of the (smooth) Hilbert scheme of points at one chart."""
    return Z + Z.bar() * _INV_T1T2 - Z.bar() * Z * _KOSZUL


def em_char(Z1: LocalCharacter, Z2: LocalCharacter) -> LocalCharacter:
    """Local character of the virtual extension class of rank n1 + n2.

    The twisting line bundle enters as a weight translation applied by
    the caller after chart substitution.
    """
    return Z2 + Z1.bar() * _INV_T1T2 - Z1.bar() * Z2 * _KOSZUL


def taut_char(Z: LocalCharacter) -> LocalCharacter:
    """Local character of a tautological bundle; the bundle weight is
    applied by the caller."""
    return Z


def twisted_tangent_char(Z: LocalCharacter) -> LocalCharacter:
    """Local character of the twisted tangent bundle of the Hilbert
    scheme; same shape as the tangent, twist applied by the caller."""
    return hilb_tangent_char(Z)


@dataclass(frozen=True)
class FixedConfig:
    """An assignment of one partition pair to each fixed point.

    In nested mode every pair satisfies boxwise containment; in product
    mode the two partitions are independent.
    """

    assignment: tuple[tuple[Partition, Partition], ...]
    n1: int
    n2: int

    def outer_chars(self) -> list[LocalCharacter]:
        return [box_char(p1) for p1, _ in self.assignment]

    def inner_chars(self) -> list[LocalCharacter]:
        return [box_char(p2) for _, p2 in self.assignment]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_configs(
    S: ToricSurfaceDescriptor, n1: int, n2: int, mode: str = "nested"
) -> Iterator[FixedConfig]:
    """All fixed-point configurations with totals (n1, n2), in a
    deterministic order."""
    if mode not in ("nested", "product"):
        raise ValueError(f"unknown mode {mode!r}")
    if n1 < 0 or n2 < 0 or (mode == "nested" and n1 < n2):
        raise InvalidNesting(f"invalid sizes ({n1}, {n2}) for mode {mode!r}")
    npts = S.euler_number

    for sizes1 in _compositions(n1, npts):
        for sizes2 in _compositions(n2, npts):
            if mode == "nested" and any(b > a for a, b in zip(sizes1, sizes2)):
                continue
            per_point: list[list[tuple[Partition, Partition]]] = []
            for a, b in zip(sizes1, sizes2):
                if mode == "nested":
                    per_point.append([(pr.outer, pr.inner) for pr in nested_pairs(a, b)])
                else:
                    per_point.append(
                        [(p1, p2) for p1 in partitions_of(a) for p2 in partitions_of(b)]
                    )
            for combo in _product_of(per_point):
                yield FixedConfig(tuple(combo), n1, n2)


def _product_of(choices: list[list]) -> Iterator[list]:
    if not choices:
        yield []
        return
    for head in choices[0]:
        for tail in _product_of(choices[1:]):
            yield [head] + tail
