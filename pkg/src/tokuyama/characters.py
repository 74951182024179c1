"""
Both sides of the tableau Casselman-Shalika identity, and Schur polynomials.

Left side:  ``z^rho * s_lambda(z) * prod_{i<j} (1 - t z_j / z_i)``
Right side: sum over gapless ``T`` in ``B(lambda + rho)`` of
``(-t)^flush(T) (1-t)^(seg(T) - flush(T)) z^content(T)``.

Everything lives in ``n = r + 1`` variables with ``rho = (r, ..., 1, 0)``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

import sympy

from .laurent import T as t_poly
from .laurent import LaurentPoly
from .statistics import coefficient
from .tableaux import Shape, content, enumerate_ssyt, partition_from_weight, shape_from_weight


def _normalize_partition(partition: Sequence[int], n: int) -> tuple[int, ...]:
    parts = tuple(int(p) for p in partition)
    if any(p < 0 for p in parts):
        raise ValueError(f"partition {parts} has a negative part")
    if any(b > a for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition {parts} is not weakly decreasing")
    nonzero = tuple(p for p in parts if p)
    if len(nonzero) > n:
        raise ValueError(f"partition {parts} has more than {n} nonzero parts")
    return nonzero


def schur(partition: Sequence[int], n: int) -> LaurentPoly:
    """Schur polynomial ``s_partition(z_1, ..., z_n)`` as a sum over tableaux."""
    parts = _normalize_partition(partition, n)
    if not parts:
        return LaurentPoly.one(n)
    shape = Shape(parts, strict=False)
    return LaurentPoly.from_terms(n, ((content(tab), 1) for tab in enumerate_ssyt(shape, n)))


def rho(r: int) -> tuple[int, ...]:
    return tuple(range(r, -1, -1))


def deformed_denominator(r: int) -> LaurentPoly:
    """``prod_{1 <= i < j <= r+1} (1 - t z_j / z_i)``."""
    n = r + 1
    result = LaurentPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            root = [0] * n
            root[i] = -1
            root[j] = 1
            result = result * (1 - LaurentPoly.monomial(root, t_poly))
    return result


def lhs(weight: Sequence[int], r: int) -> LaurentPoly:
    lam = partition_from_weight(weight, r)
    n = r + 1
    return LaurentPoly.monomial(rho(r)) * schur(lam, n) * deformed_denominator(r)


def _rhs_shard(args: tuple[tuple[int, ...], int, tuple[int, int] | None]) -> tuple[LaurentPoly, int]:
    parts, n, shard = args
    terms = []
    count = 0
    for tab in enumerate_ssyt(parts, n, shard=shard):
        count += 1
        coeff = coefficient(tab)
        if coeff:
            terms.append((content(tab), coeff))
    return LaurentPoly.from_terms(n, terms), count


def _rhs_counted(weight: Sequence[int], r: int, shards: int) -> tuple[LaurentPoly, int]:
    shape = shape_from_weight(weight, r)
    n = r + 1
    if shards <= 1:
        return _rhs_shard((shape.parts, n, None))
    jobs = [(shape.parts, n, (k, shards)) for k in range(shards)]
    with ProcessPoolExecutor(max_workers=shards) as pool:
        partials = list(pool.map(_rhs_shard, jobs))
    total = LaurentPoly.zero(n)
    for part, _ in partials:
        total = total + part
    return total, sum(count for _, count in partials)


def rhs(weight: Sequence[int], r: int, shards: int = 1) -> LaurentPoly:
    """Sum of Tokuyama coefficients times ``z^content`` over ``B(lambda + rho)``.

    ``shards > 1`` splits the enumeration across worker processes; partial
    sums are merged in shard order, so the result does not depend on it.
    """
    return _rhs_counted(weight, r, shards)[0]


@dataclass
class VerificationReport:
    rank: int
    weight: tuple[int, ...]
    shape: tuple[int, ...]
    tableau_count: int
    lhs_terms: int
    rhs_terms: int
    equal: bool
    mismatches: list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        data = asdict(self)
        data["weight"] = list(self.weight)
        data["shape"] = list(self.shape)
        data["mismatches"] = [
            {"exp": list(exp), "lhs": list(left), "rhs": list(right)} for exp, left, right in self.mismatches
        ]
        return data


def compare(left: LaurentPoly, right: LaurentPoly) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """Exponents where the two polynomials differ, with both coefficients."""
    diffs = []
    for exp in sorted(left.exponents() | right.exponents()):
        a, b = left.coefficient(exp), right.coefficient(exp)
        if a != b:
            diffs.append((exp, a.coeffs, b.coeffs))
    return diffs


def verify_identity(weight: Sequence[int], r: int, shards: int = 1) -> VerificationReport:
    """Build both sides exactly and compare them term by term."""
    start = time.perf_counter()
    weight = tuple(weight)
    shape = shape_from_weight(weight, r)
    left = lhs(weight, r)
    right, count = _rhs_counted(weight, r, shards)
    diffs = compare(left, right)
    return VerificationReport(
        rank=r,
        weight=weight,
        shape=shape.parts,
        tableau_count=count,
        lhs_terms=len(left),
        rhs_terms=len(right),
        equal=not diffs,
        mismatches=diffs,
        seconds=time.perf_counter() - start,
    )


def weights_up_to(r: int, level: int) -> Iterator[tuple[int, ...]]:
    """All dominant weights of rank ``r`` with coefficient sum at most ``level``."""
    for total in range(level + 1):
        for combo in combinations_with_replacement(range(r), total):
            weight = [0] * r
            for idx in combo:
                weight[idx] += 1
            yield tuple(weight)


def sweep(max_rank: int, max_level: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for r in range(1, max_rank + 1):
        for weight in sorted(set(weights_up_to(r, max_level))):
            yield r, weight


def bialternant(partition: Sequence[int], point: Sequence[int]) -> Fraction:
    """``det(z_i^(lambda_j + n - j)) / det(z_i^(n - j))`` at an integer point."""
    n = len(point)
    parts = _normalize_partition(partition, n)
    lam = parts + (0,) * (n - len(parts))
    numerator = sympy.Matrix(n, n, lambda i, j: sympy.Integer(point[i]) ** (lam[j] + n - 1 - j)).det()
    denominator = sympy.Matrix(n, n, lambda i, j: sympy.Integer(point[i]) ** (n - 1 - j)).det()
    if denominator == 0:
        raise ZeroDivisionError(f"degenerate point {tuple(point)}")
    ratio = sympy.Rational(numerator, denominator)
    return Fraction(int(ratio.p), int(ratio.q))


def _random_point(rng: random.Random, n: int, bound: int) -> tuple[int, ...]:
    while True:
        point = tuple(rng.randint(-bound, bound) for _ in range(n))
        if 0 not in point and len(set(point)) == n:
            return point


def schur_crosscheck(partition: Sequence[int], n: int, trials: int = 25, seed: int = 0) -> bool:
    """Compare :func:`schur` with the bialternant formula at random points."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    poly = schur(partition, n)
    rng = random.Random(seed)
    for _ in range(trials):
        point = _random_point(rng, n, bound=max(n + 2, 6))
        if poly.eval_at(point, 0) != bialternant(partition, point):
            return False
    return True
