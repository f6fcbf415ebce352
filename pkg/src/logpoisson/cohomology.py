"""Graded cohomology of the two complexes by exact linear algebra.

Everything is computed one weight at a time: the weight of a cochain is the
total degree of its coefficients plus a fixed slot weight (see
``complexes.slot_weights``), and both differentials raise weight by
``weight_shift(spec)``. Each graded piece is finite dimensional.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import complexes, linalg
from .complexes import CochainElement, ComplexSpec, weight_shift
from .linalg import RatMatrix, Span, Vector
from .polynomial import BiPoly, antiderivative_x, antiderivative_y, euler_y, monomial_basis

# aligns classical weight w with logarithmic weight w + s_k, k = 0, 1, 2
ALIGNMENT_SHIFTS = (0, 0, 1)

DEFAULT_WINDOW = (-2, 25)


@dataclass(frozen=True)
class WeightWindow:
    min_w: int = DEFAULT_WINDOW[0]
    max_w: int = DEFAULT_WINDOW[1]

    def __post_init__(self):
        if self.min_w > self.max_w:
            raise ValueError(f"empty window {self.min_w}..{self.max_w}")

    def __iter__(self):
        return iter(range(self.min_w, self.max_w + 1))

    def __len__(self):
        return self.max_w - self.min_w + 1


# graded bases

BasisKey = Tuple[int, Tuple[int, int]]  # (slot, (y-exp, x-exp))


@lru_cache(maxsize=None)
def _basis_keys(spec: ComplexSpec, k: int, w: int) -> Tuple[BasisKey, ...]:
    keys = []
    for slot, sw in enumerate(complexes.slot_weights(spec, k)):
        keys.extend((slot, m) for m in monomial_basis(w - sw))
    return tuple(keys)


@lru_cache(maxsize=None)
def _basis_index(spec: ComplexSpec, k: int, w: int) -> Dict[BasisKey, int]:
    return {key: idx for idx, key in enumerate(_basis_keys(spec, k, w))}


def _key_element(spec: ComplexSpec, k: int, key: BasisKey) -> CochainElement:
    slot, (i, j) = key
    m = BiPoly.monomial(i, j)
    if k == 1:
        payload = (m, BiPoly.zero()) if slot == 0 else (BiPoly.zero(), m)
        return CochainElement(1, payload, spec)
    return CochainElement(k, m, spec)


def graded_basis(spec: ComplexSpec, k: int, w: int) -> List[CochainElement]:
    """Monomial cochains of weight ``w``: slot by slot, each slot in (y, x)-exponent order.

    Empty for k >= 3 (there are no cochains there).
    """
    if k < 0:
        raise ValueError("degree must be non-negative")
    return [_key_element(spec, k, key) for key in _basis_keys(spec, k, w)]


def to_coords(c: CochainElement, w: int) -> Vector:
    """Coordinates of ``c`` in graded_basis(spec, degree, w); raises if c has other weights."""
    index = _basis_index(c.spec, c.degree, w)
    parts = c.payload if c.degree == 1 else (c.payload,)
    out: Vector = {}
    for slot, poly in enumerate(parts):
        for m, coeff in poly.items():
            idx = index.get((slot, m))
            if idx is None:
                raise complexes.NotHomogeneous(f"term {m} in slot {slot} has weight != {w}")
            out[idx] = coeff
    return out


def from_coords(spec: ComplexSpec, k: int, w: int, v: Vector) -> CochainElement:
    keys = _basis_keys(spec, k, w)
    parts: List[Dict] = [{} for _ in complexes.slot_weights(spec, k)]
    for idx, coeff in v.items():
        slot, m = keys[idx]
        parts[slot][m] = coeff
    polys = [BiPoly(p) for p in parts]
    payload = tuple(polys) if k == 1 else polys[0]
    return CochainElement(k, payload, spec)


@lru_cache(maxsize=4096)
def matrix_of_d(spec: ComplexSpec, k: int, w: int) -> RatMatrix:
    """Matrix of the differential out of C^k at weight w (k = 0: d1, k = 1: d2)."""
    if k not in (0, 1):
        raise ValueError("only d1 (k=0) and d2 (k=1) have nonzero matrices")
    target_w = w + weight_shift(spec)
    rows = len(_basis_keys(spec, k + 1, target_w))
    columns = []
    for e in graded_basis(spec, k, w):
        columns.append(to_coords(complexes.differential(e), target_w))
    return RatMatrix.from_columns(rows, columns)


# cohomology


@dataclass
class CohomologyReport:
    variant: str
    n: Optional[int]
    k: int
    w: int
    dimZ: int
    dimB: int
    dimH: int
    predicted: Optional[int]
    match: bool
    representatives: Optional[List[CochainElement]] = field(default=None, compare=False)

    def row(self) -> dict:
        return {
            "variant": self.variant,
            "n": self.n,
            "k": self.k,
            "w": self.w,
            "dimZ": self.dimZ,
            "dimB": self.dimB,
            "dimH": self.dimH,
            "predicted": self.predicted,
            "match": self.match,
        }


def predicted_log_dims(n: int, k: int, w: int) -> int:
    """Per-weight dimension of the logarithmic cohomology, by counting representatives.

    k=1 counts mu(y^i x^j), i <= n-2 (weight i+j) plus (y^k, 0), k <= n-1
    (weight k-1); k=2 counts y^i x^j, i <= n-2 in the top slot (weight i+j-1).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if k == 0:
        return 1 if w == 0 else 0
    if k == 1:
        mu_part = min(n - 1, w + 1) if w >= 0 else 0
        return mu_part + (1 if -1 <= w <= n - 2 else 0)
    if k == 2:
        return min(n - 1, w + 2) if w >= -1 else 0
    return 0


def predicted_dims(spec: ComplexSpec, k: int, w: int) -> Optional[int]:
    if spec.n is None:
        return None
    if spec.is_log:
        return predicted_log_dims(spec.n, k, w)
    shift = ALIGNMENT_SHIFTS[k] if k < 3 else 0
    return predicted_log_dims(spec.n, k, w + shift)


def coboundary_columns(spec: ComplexSpec, k: int, w: int) -> List[Vector]:
    """Coboundaries inside C^k_w, as coordinate vectors."""
    if k == 0 or k > 2:
        return []
    return matrix_of_d(spec, k - 1, w - weight_shift(spec)).columns()


def cocycle_basis(spec: ComplexSpec, k: int, w: int) -> linalg.KernelBasis:
    if k in (0, 1):
        return linalg.kernel(matrix_of_d(spec, k, w))
    size = len(_basis_keys(spec, k, w)) if k == 2 else 0
    return linalg.KernelBasis(tuple({i: 1} for i in range(size)), size)


def cohomology_at(spec: ComplexSpec, k: int, w: int, representatives: bool = False) -> CohomologyReport:
    if k < 0:
        raise ValueError("degree must be non-negative")
    if k > 2:
        dimZ = dimB = 0
        reps = [] if representatives else None
    else:
        if k in (0, 1):
            M = matrix_of_d(spec, k, w)
            dimZ = M.cols - linalg.rank(M)
        else:
            dimZ = len(_basis_keys(spec, 2, w))
        if k == 0:
            dimB = 0
        else:
            dimB = linalg.rank(matrix_of_d(spec, k - 1, w - weight_shift(spec)))
        reps = None
        if representatives:
            kern = cocycle_basis(spec, k, w)
            comp = linalg.complement_basis(kern, coboundary_columns(spec, k, w))
            reps = [from_coords(spec, k, w, v) for v in comp]
    dimH = dimZ - dimB
    if dimH < 0:
        raise linalg.ImageNotInKernel(f"dim B > dim Z at {spec.label()}, k={k}, w={w}")
    predicted = predicted_dims(spec, k, w)
    return CohomologyReport(
        variant=spec.variant,
        n=spec.n,
        k=k,
        w=w,
        dimZ=dimZ,
        dimB=dimB,
        dimH=dimH,
        predicted=predicted,
        match=predicted is None or predicted == dimH,
        representatives=reps,
    )


def _cell(args):
    spec, k, w = args
    return cohomology_at(spec, k, w)


def dimension_table(
    specs: Sequence[ComplexSpec],
    window: Iterable[int],
    degrees: Sequence[int] = (0, 1, 2, 3),
    jobs: int = 1,
) -> List[CohomologyReport]:
    """cohomology_at over a grid; output order is (spec order, k, w) for any ``jobs``."""
    cells = [(spec, k, w) for spec in specs for k in degrees for w in window]
    if jobs <= 1 or len(cells) < 2:
        return [_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_cell, cells, chunksize=max(1, len(cells) // (4 * jobs))))


# structure of the degree-1 cocycles


def mu(b: BiPoly, n: int) -> Tuple[BiPoly, BiPoly]:
    """b -> (int ((n-1) b - y b_y) dx, b)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return (antiderivative_x(b.scale(n - 1) - euler_y(b)), b)


def _log_cochain(n: int, pair) -> CochainElement:
    return CochainElement(1, pair, ComplexSpec.logarithmic(n))


def h1_family(n: int, w: int) -> List[Tuple[str, CochainElement]]:
    """The expected H^1 basis at weight w: mu(y^i x^j), i <= n-2, and y^k d1, k <= n-1."""
    fam = []
    for i, j in monomial_basis(w, y_le=n - 2):
        fam.append((f"mu(y^{i}*x^{j})", _log_cochain(n, mu(BiPoly.monomial(i, j), n))))
    k = w + 1
    if 0 <= k <= n - 1:
        fam.append((f"(y^{k}, 0)", _log_cochain(n, (BiPoly.monomial(k, 0), BiPoly.zero()))))
    return fam


def z2_generators(n: int, w: int) -> Dict[str, List[Tuple[str, CochainElement]]]:
    """Generators of the four summands of the degree-1 cocycles at weight w."""
    out: Dict[str, List[Tuple[str, CochainElement]]] = {"mu_low": [], "mu_high": [], "y_low": [], "y_high": []}
    for i, j in monomial_basis(w, y_le=n - 2):
        out["mu_low"].append((f"mu(y^{i}*x^{j})", _log_cochain(n, mu(BiPoly.monomial(i, j), n))))
    for i, j in monomial_basis(w, y_ge=n - 1):
        out["mu_high"].append((f"mu(y^{i}*x^{j})", _log_cochain(n, mu(BiPoly.monomial(i, j), n))))
    k = w + 1
    if k >= 0:
        gen = (f"(y^{k}, 0)", _log_cochain(n, (BiPoly.monomial(k, 0), BiPoly.zero())))
        out["y_low" if k <= n - 1 else "y_high"].append(gen)
    return out


@dataclass
class StructureCheck:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)


def _vec(c: CochainElement, w: int) -> Vector:
    return to_coords(c, w)


def verify_h1_family(n: int, window: Iterable[int]) -> StructureCheck:
    """Cocycle, non-coboundary and spanning-mod-B checks for the H^1 family."""
    spec = ComplexSpec.logarithmic(n)
    report = StructureCheck(f"h1-family(n={n})")
    for w in window:
        report.checked += 1
        fam = h1_family(n, w)
        for name, c in fam:
            if not complexes.d2(spec, c.payload).is_zero():
                report.fail(f"w={w}: {name} = {c} is not a cocycle")
        image = coboundary_columns(spec, 1, w)
        span = Span.of(image)
        dim_b = len(span)
        for name, c in fam:
            if linalg.membership(_vec(c, w), image) and not c.is_zero():
                report.fail(f"w={w}: {name} = {c} is a coboundary")
        for name, c in fam:
            if not span.add(_vec(c, w)):
                report.fail(f"w={w}: {name} = {c} is dependent modulo coboundaries")
        dim_z = len(cocycle_basis(spec, 1, w))
        if dim_b + len(fam) != dim_z:
            report.fail(f"w={w}: family of {len(fam)} + dim B {dim_b} != dim Z {dim_z}")
    return report


def verify_z2_structure(n: int, window: Iterable[int]) -> StructureCheck:
    """Degree-1 cocycles split as mu(low) + mu(high) + (F_{n-1}[y], 0) + (y^n F[y], 0).

    Per weight: every generator is a cocycle, the generators are independent
    and as many as dim Z; image columns of d1 are divisible by y^n / y^(n-1)
    slot-wise, so no coboundary meets mu(low) + (F_{n-1}[y], 0); the high
    summands are coboundaries with the explicit preimages; mu is injective.
    """
    spec = ComplexSpec.logarithmic(n)
    report = StructureCheck(f"z2-structure(n={n})")
    for w in window:
        report.checked += 1
        gens = z2_generators(n, w)
        everything = [g for part in gens.values() for g in part]
        for name, c in everything:
            if not complexes.d2(spec, c.payload).is_zero():
                report.fail(f"w={w}: generator {name} is not a cocycle")
        span = Span()
        for name, c in everything:
            if not span.add(_vec(c, w)):
                report.fail(f"w={w}: generator {name} is dependent on the previous ones")
        dim_z = len(cocycle_basis(spec, 1, w))
        if len(everything) != dim_z:
            report.fail(f"w={w}: {len(everything)} generators but dim Z = {dim_z}")

        # divisibility of coboundaries
        src_w = w - weight_shift(spec)
        for e in graded_basis(spec, 0, src_w):
            psi1, psi2 = complexes.d1(spec, e.payload)
            if not (psi1.divisible_by_y_power(n) and psi2.divisible_by_y_power(n - 1)):
                report.fail(f"w={w}: d1({e}) = ({psi1}, {psi2}) breaks the y-divisibility bound")
        image = coboundary_columns(spec, 1, w)
        img_span = Span.of(image)
        dim_b = len(img_span)
        low = gens["mu_low"] + gens["y_low"]
        for name, c in low:
            if not img_span.add(_vec(c, w)):
                report.fail(f"w={w}: {name} meets the coboundaries")
        if len(img_span) != dim_b + len(low):
            report.fail(f"w={w}: coboundaries intersect the low summands")

        # explicit preimages of the high summands
        for i, j in monomial_basis(w - n + 1):
            b = BiPoly.monomial(i, j)
            pre = -antiderivative_x(b)
            lhs = complexes.d1(spec, pre)
            rhs = mu(b.shift_y(n - 1), n)
            if lhs != rhs:
                report.fail(f"w={w}: d1(-int {b} dx) = {lhs} != mu(y^(n-1) {b}) = {rhs}")
            elif not linalg.membership(_vec(_log_cochain(n, rhs), w), image):
                report.fail(f"w={w}: mu(y^(n-1) {b}) not found in the image span")
        k = w + 1
        if k >= n:
            b1 = BiPoly.monomial(k - n, 0)
            pre = antiderivative_y(b1)
            lhs = complexes.d1(spec, pre)
            target = (b1.shift_y(n), BiPoly.zero())
            if lhs != target:
                report.fail(f"w={w}: d1(int {b1} dy) = {lhs} != (y^n {b1}, 0)")
            elif not linalg.membership(_vec(_log_cochain(n, target), w), image):
                report.fail(f"w={w}: (y^{k}, 0) not found in the image span")

        # mu is injective on degree-w inputs
        mu_cols = [_vec(_log_cochain(n, mu(BiPoly.monomial(i, j), n)), w) for i, j in monomial_basis(w)]
        if len(Span.of(mu_cols)) != len(mu_cols):
            report.fail(f"w={w}: mu has a kernel")
    return report


def verify_b3_complement(n: int, window: Iterable[int]) -> StructureCheck:
    """Top-degree coboundaries: y^i x^j (i <= n-2) are independent modulo B, and
    every y^(n-1) * monomial is d2 of (int (n b - y b_y) dx, b)."""
    spec = ComplexSpec.logarithmic(n)
    report = StructureCheck(f"b3-complement(n={n})")
    for w in window:
        report.checked += 1
        image = coboundary_columns(spec, 2, w)
        span = Span.of(image)
        for i, j in monomial_basis(w + 1, y_le=n - 2):
            m = CochainElement(2, BiPoly.monomial(i, j), spec)
            if not span.add(_vec(m, w)):
                report.fail(f"w={w}: y^{i}*x^{j} is a coboundary modulo the earlier ones")
        for i, j in monomial_basis(w + 1, y_ge=n - 1):
            target = BiPoly.monomial(i, j)
            b = BiPoly.monomial(i - (n - 1), j)
            a = antiderivative_x(b.scale(n) - euler_y(b))
            if complexes.d2(spec, (a, b)) != target:
                report.fail(f"w={w}: d2({a}, {b}) != {target}")
    return report


def verify_d1_kernel(n: int, window: Iterable[int]) -> StructureCheck:
    """d1 is injective away from weight 0 and has the constants as kernel at weight 0."""
    spec = ComplexSpec.logarithmic(n)
    report = StructureCheck(f"d1-kernel(n={n})")
    for w in window:
        if w < 0:
            continue
        report.checked += 1
        kern = linalg.kernel(matrix_of_d(spec, 0, w))
        expected = [{0: 1}] if w == 0 else []
        if [dict(v) for v in kern] != expected:
            report.fail(f"w={w}: kernel of d1 is {list(kern)}")
    return report


# classical versus logarithmic


@dataclass
class ComparisonCell:
    n: int
    k: int
    w: int
    classical: int
    log_w: int
    log: int

    @property
    def match(self) -> bool:
        return self.classical == self.log


@dataclass
class ComparisonReport:
    n: int
    cells: List[ComparisonCell]
    totals: Dict[int, Tuple[int, int]]

    @property
    def cells_ok(self) -> bool:
        return all(c.match for c in self.cells)

    @property
    def totals_ok(self) -> bool:
        return all(a == b for a, b in self.totals.values())


def compare_variants(n: int, window: Iterable[int], degrees: Sequence[int] = (0, 1, 2)) -> ComparisonReport:
    """dim H_classical(k, w) against dim H_log(k, w + s_k), plus per-degree totals."""
    cl = ComplexSpec.classical_yn(n)
    lg = ComplexSpec.logarithmic(n)
    cells = []
    totals: Dict[int, Tuple[int, int]] = {}
    ws = list(window)
    for k in degrees:
        s = ALIGNMENT_SHIFTS[k] if k < 3 else 0
        tc = tl = 0
        for w in ws:
            a = cohomology_at(cl, k, w).dimH
            b = cohomology_at(lg, k, w + s).dimH
            cells.append(ComparisonCell(n, k, w, a, w + s, b))
            tc += a
            tl += b
        totals[k] = (tc, tl)
    return ComparisonReport(n, cells, totals)


def clear_caches() -> None:
    _basis_keys.cache_clear()
    _basis_index.cache_clear()
    matrix_of_d.cache_clear()


__all__ = [
    "ALIGNMENT_SHIFTS",
    "WeightWindow",
    "graded_basis",
    "to_coords",
    "from_coords",
    "matrix_of_d",
    "CohomologyReport",
    "cohomology_at",
    "cocycle_basis",
    "coboundary_columns",
    "predicted_log_dims",
    "predicted_dims",
    "dimension_table",
    "mu",
    "h1_family",
    "z2_generators",
    "verify_h1_family",
    "verify_z2_structure",
    "verify_b3_complement",
    "verify_d1_kernel",
    "compare_variants",
    "ComparisonReport",
    "clear_caches",
]
