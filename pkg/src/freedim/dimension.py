"""Independent sets of variables, combinatorial dimension and Krull dimension (lex)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, require_free
from .polyring import mono_support

MAX_VARIABLES = 20


class UnitIdealError(ValueError):
    """The ideal is the whole ring, so the residue ring is zero."""


class OrderError(ValueError):
    """The requested computation is not valid for the basis' monomial order."""


def _supports(G) -> list:
    """Variable supports of the leading monomials, or of raw exponent tuples."""
    if isinstance(G, GroebnerBasis):
        monos = G.leading_monomials()
    else:
        monos = list(G)
    return [mono_support(m) for m in monos]


def _nvars(G, n):
    if n is not None:
        return n
    if isinstance(G, GroebnerBasis):
        return G.ring.n
    raise ValueError("number of variables required for raw monomials")


def _check_size(n):
    if n > MAX_VARIABLES:
        raise ValueError(f"subset enumeration capped at {MAX_VARIABLES} variables, got {n}")


def _check_proper(G):
    if isinstance(G, GroebnerBasis) and G.is_unit_ideal:
        raise UnitIdealError("the ideal is the unit ideal; the residue ring is zero")
    if any(not s for s in _supports(G)):
        raise UnitIdealError("a leading monomial is 1; the ideal has no independent sets")


def _independent(S: frozenset, supports) -> bool:
    return not any(s <= S for s in supports)


def is_strongly_independent(S: Iterable[int], G) -> bool:
    """No leading monomial of ``G`` lives purely in the variables ``S``."""
    return _independent(frozenset(S), _supports(G))


def left_basic_set(G, n: int | None = None, scan: str = "ascending") -> tuple:
    """Greedy maximal strongly independent set.

    ``ascending`` scans the smallest variable first (the last declared one);
    ``descending`` scans in declaration order.
    """
    n = _nvars(G, n)
    supports = _supports(G)
    if scan == "ascending":
        variables = range(n - 1, -1, -1)
    elif scan == "descending":
        variables = range(n)
    else:
        raise ValueError(f"unknown scan order {scan!r}")
    S = frozenset()
    for x in variables:
        if _independent(S | {x}, supports):
            S = S | {x}
    return tuple(sorted(S))


def _extend(supports, S: frozenset, U: Sequence[int], found: list) -> None:
    # recursive step: grow S by each remaining u, then record S unless already covered
    for k, u in enumerate(U):
        T = S | {u}
        if _independent(T, supports):
            _extend(supports, T, U[k + 1:], found)
    if not any(S <= M for M in found):
        found.append(S)


def maximal_independent_sets(G, n: int | None = None) -> list:
    """All subset-maximal strongly independent sets, largest first."""
    n = _nvars(G, n)
    _check_size(n)
    supports = _supports(G)
    if any(not s for s in supports):
        return []
    found: list = []
    _extend(supports, frozenset(), list(range(n)), found)
    maximal = {M for M in found if not any(M < other for other in found)}
    return sorted((tuple(sorted(M)) for M in maximal), key=lambda t: (-len(t), t))


def combinatorial_dimension(G, n: int | None = None, require_monic: bool = False) -> int:
    if require_monic:
        require_free(G)
    _check_proper(G)
    sets = maximal_independent_sets(G, n)
    return max(len(S) for S in sets)


def krull_dimension_lex(G: GroebnerBasis, domain=None) -> int:
    """kdim(A) + cdim for a monic basis with respect to a lex order."""
    if G.order.kind != "lex":
        raise OrderError(f"the combinatorial route needs a lex order, got {G.order}; "
                         "use the Hilbert polynomial route for degree-compatible orders")
    require_free(G)
    domain = domain or G.domain
    return domain.krull_dim + combinatorial_dimension(G)


@dataclass
class DimensionReport:
    cdim: int
    maximal_sets: list
    left_basic_set: tuple
    kdim: int | None = None
    warnings: list = field(default_factory=list)


def dimension_report(G: GroebnerBasis, scan: str = "ascending") -> DimensionReport:
    """cdim, maximal sets and left basic set of a monic basis."""
    require_free(G)
    _check_proper(G)
    sets = maximal_independent_sets(G)
    cdim = max(len(S) for S in sets)
    lbs = left_basic_set(G, scan=scan)
    report = DimensionReport(cdim, sets, lbs)
    if len(lbs) < cdim:
        report.warnings.append(
            f"left basic set has {len(lbs)} variables but cdim is {cdim}")
    return report
