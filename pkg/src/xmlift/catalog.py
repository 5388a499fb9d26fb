"""Built-in groups addressable by keyword: Z<n>, Z2xZ2, S3, D4, Q8."""

from __future__ import annotations

import re

from .errors import UnresolvedReference
from .groups import FiniteGroup, make_group


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise UnresolvedReference(f"cyclic group order must be positive, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return make_group(table, names=[str(i) for i in range(n)])


def klein_four() -> FiniteGroup:
    # index 2a+b for the pair (a, b); the operation is componentwise xor
    table = [[(i ^ j) for j in range(4)] for i in range(4)]
    names = [f"({i >> 1},{i & 1})" for i in range(4)]
    return make_group(table, names=names)


def _perm_group(perms: list[tuple[int, ...]], names: list[str]) -> FiniteGroup:
    pos = {p: i for i, p in enumerate(perms)}
    table = [
        [pos[tuple(p[q[x]] for x in range(len(p)))] for q in perms]
        for p in perms
    ]
    return make_group(table, names=names)


def symmetric_3() -> FiniteGroup:
    """S3 with elements in lexicographic one-line order, identity first."""
    perms = [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ]
    names = ["e", "(1 2)", "(0 1)", "(0 1 2)", "(0 2 1)", "(0 2)"]
    return _perm_group(perms, names)


# 3-cycles of symmetric_3: the alternating subgroup
A3_ELEMENTS = (0, 3, 4)


def dihedral_4() -> FiniteGroup:
    """Symmetries of the square as vertex permutations, listed e, r, r2, r3, s, rs, r2s, r3s."""
    r = (1, 2, 3, 0)
    s = (3, 2, 1, 0)

    def mul(p, q):
        return tuple(p[q[x]] for x in range(4))

    e = (0, 1, 2, 3)
    rots = [e, r, mul(r, r), mul(r, mul(r, r))]
    perms = rots + [mul(rot, s) for rot in rots]
    names = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
    return _perm_group(perms, names)


def quaternion_8() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k."""
    units = ["1", "i", "j", "k"]
    rules = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(sign, u) for u in units for sign in (1, -1)]
    pos = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        sign, unit = rules[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    table = [[pos[mul(a, b)] for b in elems] for a in elems]
    names = [("" if sign > 0 else "-") + unit for sign, unit in elems]
    return make_group(table, names=names)


_FIXED = {
    "Z2XZ2": klein_four,
    "V4": klein_four,
    "S3": symmetric_3,
    "D4": dihedral_4,
    "Q8": quaternion_8,
}

CATALOG_SUMMARY = (
    ("Z<n>", "cyclic group of order n, n >= 1"),
    ("Z2xZ2", "Klein four-group (alias V4)"),
    ("S3", "symmetric group on three letters"),
    ("D4", "dihedral group of order 8"),
    ("Q8", "quaternion group of order 8"),
)


def catalog_group(keyword: str) -> FiniteGroup:
    """Look a group up by keyword; Z<n> accepts any positive n."""
    key = keyword.strip().upper()
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"Z(\d+)", key)
    if m:
        return cyclic(int(m.group(1)))
    raise UnresolvedReference(f"unknown catalog group keyword '{keyword}'")
