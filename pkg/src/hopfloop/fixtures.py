"""Deterministic fixture builders used by tests, scripts and docs."""

from __future__ import annotations

from itertools import permutations

from .loops import CayleyTable, chein_double, table_from_rows


def cyclic_table(n: int, name=None) -> CayleyTable:
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return table_from_rows(rows, name or f"c{n}")


def symmetric_table(n: int, name=None) -> CayleyTable:
    """Symmetric group on n letters; (s*t)(i) = s(t(i)); identity first."""
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    rows = [[index[tuple(s[t[i]] for i in range(n))] for t in elems] for s in elems]
    return table_from_rows(rows, name or f"s{n}")


def direct_product_table(a: CayleyTable, b: CayleyTable, name=None) -> CayleyTable:
    na, nb = a.order, b.order
    rows = [[0] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for k in range(nb):
            for j in range(na):
                for l in range(nb):
                    rows[i * nb + k][j * nb + l] = a.table[i][j] * nb + b.table[k][l]
    return table_from_rows(rows, name)


def moufang12_table() -> CayleyTable:
    """Smallest nonassociative Moufang loop, the Chein double of S3."""
    return chein_double(symmetric_table(3))


# First order-5 Latin square with identity violating the inverse property,
# in row-lexicographic search order; re-verified by tests.
LATIN5_NON_IP_ROWS = (
    (0, 1, 2, 3, 4),
    (1, 0, 3, 4, 2),
    (2, 3, 4, 0, 1),
    (3, 4, 1, 2, 0),
    (4, 2, 0, 1, 3),
)

# First IP loop of order 7 violating the Moufang identity, found by exhaustive
# search over inverse-compatible Latin squares; flexible but not alternative.
IP7_NON_MOUFANG_ROWS = (
    (0, 1, 2, 3, 4, 5, 6),
    (1, 2, 0, 5, 6, 4, 3),
    (2, 0, 1, 6, 5, 3, 4),
    (3, 6, 5, 4, 0, 1, 2),
    (4, 5, 6, 0, 3, 2, 1),
    (5, 3, 4, 2, 1, 6, 0),
    (6, 4, 3, 1, 2, 0, 5),
)


def latin5_non_ip_table() -> CayleyTable:
    return table_from_rows(LATIN5_NON_IP_ROWS, "latin5-non-ip")


def ip7_non_moufang_table() -> CayleyTable:
    return table_from_rows(IP7_NON_MOUFANG_ROWS, "ip7-non-moufang")
