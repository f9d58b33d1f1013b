"""Built-in loops: the octonion loop O16, Q8, the smallest CC loop, reference groups.

Each entry carries a list of expected properties that is checked the first
time the entry is materialized; a failing check raises
:class:`CatalogSelfCheckFailed`.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import CatalogSelfCheckFailed, InvalidOrder, UnknownCatalogEntry
from .table import Loop

# Quaternion basis 1, i, j, k as 0..3; a signed unit is (sign, basis) with sign in {1, -1}.
_QUAT_BASIS = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def _qmul(a, b):
    s, basis = _QUAT_BASIS[a[1], b[1]]
    return a[0] * b[0] * s, basis


def _qconj(a):
    return a if a[1] == 0 else (-a[0], a[1])


def _qneg(a):
    return -a[0], a[1]


def _octonion_mul(u, v):
    """Cayley-Dickson product on units (half, quaternion): (a,b)(c,d) = (ac - d*b, da + bc*)."""
    (hu, a), (hv, c) = u, v
    if hu == 0 and hv == 0:
        return 0, _qmul(a, c)
    if hu == 0:  # (a,0)(0,d) = (0, da)
        return 1, _qmul(c, a)
    if hv == 0:  # (0,b)(c,0) = (0, bc*)
        return 1, _qmul(a, _qconj(c))
    return 0, _qneg(_qmul(_qconj(c), a))  # (0,b)(0,d) = (-d*b, 0)


def _octonion_units():
    # e_k = +unit k for k = 0..7 (index k), -e_k has index k + 8
    units = []
    for sign in (1, -1):
        for half in (0, 1):
            for basis in range(4):
                units.append((half, (sign, basis)))
    return units


def _octonion_index(u) -> int:
    half, (sign, basis) = u
    return 4 * half + basis + (0 if sign == 1 else 8)


def octonion_table() -> Loop:
    units = _octonion_units()
    units.sort(key=_octonion_index)
    rows = [[_octonion_index(_octonion_mul(u, v)) for v in units] for u in units]
    return Loop.from_rows(rows)


def quaternion_table() -> Loop:
    # 1, i, j, k, -1, -i, -j, -k as 0..7
    units = [(s, b) for s in (1, -1) for b in range(4)]
    index = {u: i for i, u in enumerate(units)}
    return Loop.from_rows([[index[_qmul(u, v)] for v in units] for u in units])


def cyclic_table(n: int) -> Loop:
    if n < 1:
        raise InvalidOrder(f"cyclic group order must be positive, got {n}")
    return Loop.from_rows([[(a + b) % n for b in range(n)] for a in range(n)])


def elementary_abelian_table(n: int) -> Loop:
    if n < 1 or n & (n - 1):
        raise InvalidOrder(f"elementary abelian 2-group order must be a power of 2, got {n}")
    return Loop.from_rows([[a ^ b for b in range(n)] for a in range(n)])


# First order-6 table in lexicographic order that is CC and not associative;
# reproduced by enumerate_loops(EnumerationJob(6, ("cc", "nonassociative"))).
SMALLEST_CC_ROWS = (
    (0, 1, 2, 3, 4, 5),
    (1, 2, 0, 4, 5, 3),
    (2, 0, 1, 5, 3, 4),
    (3, 5, 4, 1, 0, 2),
    (4, 3, 5, 2, 1, 0),
    (5, 4, 3, 0, 2, 1),
)


# -- expected-property checks -------------------------------------------------

def _check(name: str) -> Callable[[Loop], object]:
    from . import identities, probability, structure, table, theorems

    def quotient_is_ea8(t: Loop) -> bool:
        q = structure.quotient(t, structure.nucleus(t)).loop
        return q.order == 8 and table.isomorphic(q, elementary_abelian_table(8)) is not None

    checks = {
        "order": lambda t: t.order,
        "associative": lambda t: identities.is_associative(t).holds,
        "moufang": lambda t: identities.is_moufang(t, "all").holds,
        "cc": lambda t: identities.is_cc(t).holds,
        "nucleus_size": lambda t: len(structure.nucleus(t)),
        "index": lambda t: structure.cosets(t, structure.nucleus(t)).index,
        "quotient_is_elementary_abelian_8": quotient_is_ea8,
        "nuclear_commutators": theorems.has_nuclear_commutators,
        "p_assoc": probability.p_assoc,
        "p_comm": probability.p_comm,
        "center_size": lambda t: sum(1 for x in t.elements
                                     if all(t.mul(x, y) == t.mul(y, x) for y in t.elements)),
    }
    return checks[name]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    table: Loop
    provenance: str
    expected: tuple[tuple[str, object], ...]

    def failed_expectations(self) -> list[tuple[str, object, object]]:
        out = []
        for prop, want in self.expected:
            got = _check(prop)(self.table)
            if got != want:
                out.append((prop, want, got))
        return out


_cache: dict[str, CatalogEntry] = {}
_lock = threading.Lock()


def _materialize(name: str, build: Callable[[], tuple[Loop, str, tuple]]) -> CatalogEntry:
    with _lock:
        entry = _cache.get(name)
        if entry is None:
            table, provenance, expected = build()
            entry = CatalogEntry(name, table, provenance, expected)
            bad = entry.failed_expectations()
            if bad:
                raise CatalogSelfCheckFailed(
                    f"{name}: " + "; ".join(f"{p} expected {w}, got {g}" for p, w, g in bad))
            _cache[name] = entry
        return entry


def o16() -> CatalogEntry:
    """The 16-element octonion loop; e_k is element k and -e_k is element k + 8."""
    return _materialize("o16", lambda: (
        octonion_table(),
        "units +-e0..+-e7 of the octonions by Cayley-Dickson doubling of the quaternion group",
        (("order", 16), ("moufang", True), ("associative", False), ("nucleus_size", 2),
         ("index", 8), ("quotient_is_elementary_abelian_8", True),
         ("p_assoc", Fraction(43, 64))),
    ))


def q8() -> CatalogEntry:
    """Quaternion group; 1, i, j, k, -1, -i, -j, -k are elements 0..7."""
    return _materialize("q8", lambda: (
        quaternion_table(),
        "quaternion group {+-1, +-i, +-j, +-k}",
        (("order", 8), ("associative", True), ("p_comm", Fraction(5, 8)), ("center_size", 2)),
    ))


def smallest_cc() -> CatalogEntry:
    return _materialize("smallest_cc", lambda: (
        Loop.from_rows(SMALLEST_CC_ROWS),
        "first nonassociative CC loop of order 6 in lexicographic enumeration order",
        (("order", 6), ("cc", True), ("associative", False), ("p_assoc", Fraction(7, 8))),
    ))


def cyclic(n: int) -> CatalogEntry:
    return _materialize(f"cyclic{n}", lambda: (
        cyclic_table(n), f"integers modulo {n} under addition",
        (("order", n), ("associative", True), ("p_assoc", Fraction(1))),
    ))


def elementary_abelian(n: int) -> CatalogEntry:
    return _materialize(f"elementary_abelian{n}", lambda: (
        elementary_abelian_table(n), f"bit vectors of length log2({n}) under xor",
        (("order", n), ("associative", True), ("p_comm", Fraction(1))),
    ))


def klein4() -> CatalogEntry:
    return _materialize("klein4", lambda: (
        elementary_abelian_table(4), "Klein four-group Z/2 x Z/2",
        (("order", 4), ("associative", True)),
    ))


FIXED = {"o16": o16, "q8": q8, "smallest_cc": smallest_cc, "klein4": klein4}
PARAMETRIZED = {"cyclic": cyclic, "elementary_abelian": elementary_abelian}


def names() -> list[str]:
    return sorted(FIXED) + [f"{k}<n>" for k in sorted(PARAMETRIZED)]


def get(name: str) -> CatalogEntry:
    """Look up ``o16``, ``q8``, ``smallest_cc``, ``klein4``, ``cyclic<n>`` or ``elementary_abelian<n>``.

    ``cyclic(6)`` and ``cyclic6`` are both accepted.
    """
    if name in FIXED:
        return FIXED[name]()
    m = re.fullmatch(r"([a-z_]+?)_?\(?(\d+)\)?", name)
    if m and m.group(1) in PARAMETRIZED:
        return PARAMETRIZED[m.group(1)](int(m.group(2)))
    raise UnknownCatalogEntry(f"unknown catalog entry {name!r}; known: {', '.join(names())}")
