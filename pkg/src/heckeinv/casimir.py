"""The q-deformed quadratic Casimir of SU_q(N) on Young diagrams.

The rescaled Casimir has eigenvalue ``sum_{k=1}^{N-1} q^{2(l_k - k)}`` on the
irrep with row lengths ``l_k``.  The exponents strictly decrease, so a
diagram can be read back from any eigenvalue, block by block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .diagrams import Partition, as_partition, fundamental_eigenvalue
from .errors import MalformedSpectrum, TooManyRows
from .laurent import DeltaSeries, LaurentPoly, RationalFunction, exact_div, to_delta_series

__all__ = [
    "CasimirSpectrum",
    "BlockDecoding",
    "casimir_eigenvalue",
    "decode_spectrum",
    "decode_blocks",
    "casimir_delta_series",
    "hecke_casimir_relation_check",
]


@dataclass(frozen=True)
class CasimirSpectrum:
    """Exponent data ``L_1 > L_2 > ... > L_{N-1}`` with ``L_k = l_k - k``."""

    N: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be at least 2")
        if len(self.exponents) != self.N - 1:
            raise MalformedSpectrum(f"need {self.N - 1} exponents, got {len(self.exponents)}")
        if any(a <= b for a, b in zip(self.exponents, self.exponents[1:])):
            raise MalformedSpectrum(f"exponents {self.exponents} are not strictly decreasing")

    @classmethod
    def of(cls, g, N: int) -> "CasimirSpectrum":
        g = as_partition(g)
        if N < 2:
            raise ValueError("N must be at least 2")
        if len(g) > N - 1:
            raise TooManyRows(f"{g} has {len(g)} rows; SU_q({N}) allows at most {N - 1}")
        rows = g.parts + (0,) * (N - 1 - len(g))
        return cls(N, tuple(l - k for k, l in enumerate(rows, start=1)))

    def partition(self) -> Partition:
        rows = [L + k for k, L in enumerate(self.exponents, start=1)]
        if rows and rows[-1] < 0:
            raise MalformedSpectrum(f"row lengths {rows} would be negative")
        return Partition([l for l in rows if l])

    def eigenvalue(self) -> LaurentPoly:
        return LaurentPoly({2 * L: 1 for L in self.exponents})


def casimir_eigenvalue(g, N: int) -> LaurentPoly:
    return CasimirSpectrum.of(g, N).eigenvalue()


def decode_spectrum(v: LaurentPoly, N: int) -> Partition:
    """Recover the diagram from a Casimir eigenvalue."""
    if N < 2:
        raise ValueError("N must be at least 2")
    items = sorted(v.items(), reverse=True)
    for e, c in items:
        if c != 1:
            raise MalformedSpectrum(f"{v}: coefficient {c} of q^{e} is not 1")
        if e % 2:
            raise MalformedSpectrum(f"{v}: odd exponent {e}")
    if len(items) != N - 1:
        raise MalformedSpectrum(f"{v}: expected {N - 1} terms for N={N}, found {len(items)}")
    return CasimirSpectrum(N, tuple(e // 2 for e, _ in items)).partition()


class BlockDecoding(NamedTuple):
    diagrams: list  # Partition, or None where the block failed
    errors: list  # (block index, MalformedSpectrum)

    @property
    def ok(self) -> bool:
        return not self.errors


def decode_blocks(vs: Sequence[LaurentPoly], N: int) -> BlockDecoding:
    """Decode the eigenvalue of each unit block of a (reducible) Casimir matrix."""
    diagrams, errors = [], []
    for i, v in enumerate(vs):
        try:
            diagrams.append(decode_spectrum(v, N))
        except MalformedSpectrum as exc:
            diagrams.append(None)
            errors.append((i, exc))
    return BlockDecoding(diagrams, errors)


def casimir_delta_series(g, N: int, order: int) -> DeltaSeries:
    return to_delta_series(casimir_eigenvalue(g, N), order)


def hecke_casimir_relation_check(g, N: int) -> dict:
    """Compare both sides of the C_n / Casimir eigenvalue relation exactly.

    ``((q^2-1)/q^2)^2 Lambda(q^2) + ((q^2-1)/q^2) n`` against
    ``Casimir + (q^{2(1-N)} - 1)/(q^2 - 1)``, where ``Lambda(q^2)`` is the
    fundamental eigenvalue with ``q`` replaced by ``q^2``.
    """
    g = as_partition(g)
    cas = casimir_eigenvalue(g, N)
    n = g.n
    q2m1 = LaurentPoly({2: 1, 0: -1})
    factor = RationalFunction(q2m1, LaurentPoly.monomial(2))
    lam = fundamental_eigenvalue(g).subs_power(2)
    lhs = factor * factor * lam + factor * n
    tail = exact_div(LaurentPoly({2 * (1 - N): 1, 0: -1}), q2m1)
    rhs = RationalFunction.coerce(cas + tail)
    return {
        "diagram": str(g),
        "N": N,
        "lhs": str(lhs),
        "rhs": str(rhs),
        "equal": lhs == rhs,
    }
