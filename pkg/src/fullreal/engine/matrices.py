"""Invertible matrices over F2 that sum to the identity without being inverse."""

from __future__ import annotations

from dataclasses import dataclass

from ..gf2 import Gf2Matrix, block_matrix, rank

U = Gf2Matrix.from_lists([[0, 1, 1], [0, 0, 1], [1, 0, 0]])
V = Gf2Matrix.from_lists([[1, 1, 1], [0, 1, 1], [1, 0, 1]])
# As usually printed, S has equal second and fourth rows and is singular.
PRINTED_S = Gf2Matrix.from_lists([[1, 0, 1, 1], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]])
PRINTED_T = Gf2Matrix.from_lists([[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
# Flipping entry (3, 2) of both keeps S + T = I and makes both invertible.
S = Gf2Matrix.from_lists([[1, 0, 1, 1], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 1, 1]])
T = Gf2Matrix.from_lists([[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 1, 0]])


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    A: Gf2Matrix
    B: Gf2Matrix
    sum_is_identity: bool
    rank_a: int
    rank_b: int
    product_is_identity: bool

    @property
    def ok(self) -> bool:
        return (self.sum_is_identity and self.rank_a == self.n and self.rank_b == self.n
                and not self.product_is_identity)


def decomposition(n: int, printed: bool = False) -> tuple[Gf2Matrix, Gf2Matrix]:
    """``A``, ``B`` of size ``n``: ``[[I, I, 0], [I, 0, 0], [0, 0, X]]`` and
    ``[[0, I, 0], [I, I, 0], [0, 0, Y]]`` with ``(X, Y) = (U, V)`` for odd ``n``
    and ``(S, T)`` for even ``n``.  ``printed=True`` uses the singular
    printed ``S`` and ``T``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2:
        X, Y = U, V
    else:
        X, Y = (PRINTED_S, PRINTED_T) if printed else (S, T)
    r = (n - X.n_rows) // 2
    if r == 0:
        return X, Y
    I = Gf2Matrix.identity(r)
    Z = Gf2Matrix.zeros(r, r)
    zc = Gf2Matrix.zeros(r, X.n_cols)
    zr = Gf2Matrix.zeros(X.n_rows, r)
    A = block_matrix([[I, I, zc], [I, Z, zc], [zr, zr, X]])
    B = block_matrix([[Z, I, zc], [I, I, zc], [zr, zr, Y]])
    return A, B


def verify_matrix_decomposition(n: int, printed: bool = False) -> DecompositionReport:
    A, B = decomposition(n, printed)
    ident = Gf2Matrix.identity(n)
    return DecompositionReport(n, A, B, A + B == ident, rank(A), rank(B), A @ B == ident)


__all__ = ["DecompositionReport", "PRINTED_S", "PRINTED_T", "S", "T", "U", "V", "decomposition", "verify_matrix_decomposition"]
