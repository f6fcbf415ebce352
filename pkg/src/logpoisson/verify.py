"""Seeded identity suites shared by the ``verify`` command and the tests.

Random polynomials: a uniformly chosen subset of the monomials of degree
<= cap, each with a nonzero integer coefficient in [-9, 9], drawn from
``random.Random(seed)``. The same seed always reproduces the same inputs.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from . import cohomology, complexes, loggeom
from .complexes import CochainElement, ComplexSpec
from .loggeom import LogOneForm
from .polynomial import BiPoly, partial_x

COEFF_RANGE = 9
DEFAULT_SEED = 42
CLASSICAL_PHIS = ("y^2", "x + y^2", "x^2*y - 1")


_NONZERO = [c for c in range(-COEFF_RANGE, COEFF_RANGE + 1) if c]


def random_poly(rng: random.Random, max_degree: int, max_terms: Optional[int] = None, dense: bool = False) -> BiPoly:
    """Seeded random polynomial of degree <= max_degree.

    ``dense`` draws a coefficient in [-9, 9] (zero allowed) for every monomial;
    otherwise up to ``max_terms`` distinct monomials get nonzero coefficients.
    """
    monos = [(i, d - i) for d in range(max_degree + 1) for i in range(d + 1)]
    if dense:
        return BiPoly({m: rng.randint(-COEFF_RANGE, COEFF_RANGE) for m in monos})
    k = rng.randint(0, len(monos) if max_terms is None else min(max_terms, len(monos)))
    return BiPoly({m: rng.choice(_NONZERO) for m in rng.sample(monos, k)})


def random_form(rng: random.Random, n: int, max_degree: int = 4, max_terms: int = 5) -> LogOneForm:
    return LogOneForm(random_poly(rng, max_degree, max_terms), random_poly(rng, max_degree, max_terms), n)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    counterexample: Optional[str] = None
    checked: int = 0

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "counterexample": self.counterexample}


def _form_text(w: LogOneForm) -> str:
    return f"({w.a})·dx + ({w.b})·dy/y"


def suite_complex(n: int, seed: int, max_weight: int = 30, samples: int = 200, extra_phis: Sequence[BiPoly] = ()) -> SuiteResult:
    """d2 o d1 = 0 on graded monomials for both variants and on random inputs for general phi."""
    from .parsing import parse_poly

    rng = random.Random(f"complex/{n}/{seed}")
    checked = 0
    for spec in (ComplexSpec.logarithmic(n), ComplexSpec.classical_yn(n)):
        report = complexes.check_complex(spec, max_weight=max_weight)
        checked += report.checked
        if not report.ok:
            return SuiteResult(f"complex(n={n})", False, f"{spec.label()}: d2(d1({report.failures[0]})) != 0", checked)
    phis = [parse_poly(p) for p in CLASSICAL_PHIS] + list(extra_phis)
    for phi in phis:
        spec = ComplexSpec.classical(phi)
        polys = [random_poly(rng, 6, dense=True) for _ in range(samples)]
        report = complexes.check_complex(spec, polys)
        checked += report.checked
        if not report.ok:
            return SuiteResult(f"complex(n={n})", False, f"{spec.label()}: d2(d1({report.failures[0]})) != 0", checked)
    return SuiteResult(f"complex(n={n})", True, None, checked)


def suite_oracle(n: int, seed: int, samples: int = 200) -> SuiteResult:
    """Alternating-sum differential against the closed forms."""
    rng = random.Random(f"oracle/{n}/{seed}")
    spec = ComplexSpec.logarithmic(n)
    name = f"oracle-d-generic(n={n})"
    for _ in range(samples):
        f = random_poly(rng, 6, 8)
        got = complexes.d_generic(spec, CochainElement(0, f, spec)).payload
        if got != complexes.d1(spec, f):
            return SuiteResult(name, False, f"degree 0, f = {f}", samples)
        a = (random_poly(rng, 6, 8), random_poly(rng, 6, 8))
        got = complexes.d_generic(spec, CochainElement(1, a, spec)).payload
        if got != complexes.d2(spec, a):
            return SuiteResult(name, False, f"degree 1, a = ({a[0]}, {a[1]})", samples)
    return SuiteResult(name, True, None, 2 * samples)


def suite_koszul(n: int, seed: int, pairs: int = 200, triples: int = 100, compat_degree: int = 6) -> List[SuiteResult]:
    rng = random.Random(f"koszul/{n}/{seed}")
    out = []

    name = f"koszul-antisymmetry(n={n})"
    bad = None
    for _ in range(pairs):
        a, b = random_form(rng, n), random_form(rng, n)
        s = loggeom.koszul(a, b) + loggeom.koszul(b, a)
        if not (s.a.is_zero() and s.b.is_zero()):
            bad = f"alpha = {_form_text(a)}, beta = {_form_text(b)}"
            break
    out.append(SuiteResult(name, bad is None, bad, pairs))

    name = f"koszul-jacobi(n={n})"
    bad = None
    k = loggeom.koszul
    for _ in range(triples):
        a, b, c = (random_form(rng, n, 4, 4) for _ in range(3))
        s = k(a, k(b, c)) + k(b, k(c, a)) + k(c, k(a, b))
        if not (s.a.is_zero() and s.b.is_zero()):
            bad = f"{_form_text(a)}, {_form_text(b)}, {_form_text(c)}"
            break
    out.append(SuiteResult(name, bad is None, bad, triples))

    name = f"koszul-compatibility(n={n})"
    bad = None
    checked = 0
    for d in range(compat_degree + 1):
        for i in range(d + 1):
            a = BiPoly.monomial(i, d - i)
            for p in (1, 2):
                wp = loggeom.basis_form(p, n)
                for q in (1, 2):
                    wq = loggeom.basis_form(q, n)
                    lhs = loggeom.koszul(wp, wq.times(a))
                    rhs = wq.times(loggeom.apply(loggeom.ham_tilde(wp), a)) + loggeom.koszul_base(p, q, n).times(a)
                    checked += 1
                    if lhs != rhs and bad is None:
                        bad = f"[w{p}, ({a}) w{q}]"
    out.append(SuiteResult(name, bad is None, bad, checked))

    # base values and the exact-form identities [du, dv] = d{u, v}
    name = f"koszul-base(n={n})"
    bad = None
    yn = BiPoly.monomial(n, 0)
    w1, w2 = loggeom.omega1(n), loggeom.omega2(n)
    expected_12 = loggeom.d_tilde(BiPoly.monomial(n - 1, 0), n)
    if loggeom.koszul(w1, w2) != expected_12:
        bad = "[dx, dy/y] != d(y^(n-1))"
    elif loggeom.koszul(w2, w2) != LogOneForm.zero(n) or loggeom.koszul(w1, w1) != LogOneForm.zero(n):
        bad = "[w_i, w_i] != 0"
    elif loggeom.koszul_base(1, 2, n) != LogOneForm(BiPoly.zero(), BiPoly.monomial(n - 1, 0, n - 1), n):
        bad = "[w1, w2] != (n-1) y^(n-1) w2"
    else:
        for _ in range(50):
            u, v = random_poly(rng, 3, 4), random_poly(rng, 3, 4)
            lhs = loggeom.koszul(loggeom.d_tilde(u, n), loggeom.d_tilde(v, n))
            rhs = loggeom.d_tilde(loggeom.poisson_bracket(u, v, yn), n)
            if lhs != rhs:
                bad = f"[du, dv] != d{{u, v}} for u = {u}, v = {v}"
                break
    out.append(SuiteResult(name, bad is None, bad, 53))
    return out


def suite_schouten(n: int, seed: int, samples: int = 100) -> SuiteResult:
    rng = random.Random(f"schouten/{n}/{seed}")
    spec = ComplexSpec.logarithmic(n)
    name = f"schouten(n={n})"
    for _ in range(samples):
        f = random_poly(rng, 6, 8)
        sn = loggeom.sn_bracket_pi_f(f, n)
        via_ham = -loggeom.ham_tilde(loggeom.d_tilde(f, n))
        if sn != via_ham or sn.coords() != complexes.d1(spec, f):
            return SuiteResult(name, False, f"f = {f}", samples)
    return SuiteResult(name, True, None, samples)


def suite_dims(n: int, window: Sequence[int]) -> List[SuiteResult]:
    spec = ComplexSpec.logarithmic(n)
    out = []
    for k, label in ((0, "H0"), (1, "H1"), (2, "H2"), (3, "Hk>2")):
        bad = None
        for w in window:
            if k == 3 and cohomology.graded_basis(spec, 3, w):
                bad = f"w={w}: C^3 is not empty"
                break
            r = cohomology.cohomology_at(spec, k, w)
            if not r.match:
                bad = f"w={w}: dim H = {r.dimH}, predicted {r.predicted}"
                break
        out.append(SuiteResult(f"dims-{label}(n={n})", bad is None, bad, len(window)))
    return out


def _structure(check: cohomology.StructureCheck) -> SuiteResult:
    return SuiteResult(check.name, check.ok, check.failures[0] if check.failures else None, check.checked)


def suite_structure(n: int, window: Sequence[int], z2_max_weight: int = 20) -> List[SuiteResult]:
    z2_window = [w for w in window if w <= z2_max_weight]
    return [
        _structure(cohomology.verify_d1_kernel(n, window)),
        _structure(cohomology.verify_h1_family(n, window)),
        _structure(cohomology.verify_z2_structure(n, z2_window)),
        _structure(cohomology.verify_b3_complement(n, window)),
    ]


def suite_variants(n: int, window: Sequence[int]) -> List[SuiteResult]:
    rep = cohomology.compare_variants(n, window)
    bad_cell = next((c for c in rep.cells if not c.match), None)
    cells = SuiteResult(
        f"variants-cells(n={n})",
        bad_cell is None,
        None if bad_cell is None else f"k={bad_cell.k}: classical w={bad_cell.w} dim {bad_cell.classical} != log w={bad_cell.log_w} dim {bad_cell.log}",
        len(rep.cells),
    )
    bad_total = next((k for k, (a, b) in rep.totals.items() if a != b), None)
    totals = SuiteResult(
        f"variants-totals(n={n})",
        bad_total is None,
        None if bad_total is None else f"k={bad_total}: totals {rep.totals[bad_total]}",
        len(rep.totals),
    )
    return [cells, totals]


def suite_polynomial(seed: int, samples: int = 100) -> SuiteResult:
    """Leibniz rule and antiderivative round trips on random polynomials."""
    from .polynomial import antiderivative_x, antiderivative_y, partial_y

    rng = random.Random(f"polynomial/{seed}")
    for _ in range(samples):
        p, q = random_poly(rng, 6, 8), random_poly(rng, 6, 8)
        if partial_x(p * q) != partial_x(p) * q + p * partial_x(q):
            return SuiteResult("polynomial-identities", False, f"Leibniz fails for p = {p}, q = {q}", samples)
        if partial_x(antiderivative_x(p)) != p or partial_y(antiderivative_y(p)) != p:
            return SuiteResult("polynomial-identities", False, f"antiderivative round trip fails for {p}", samples)
    return SuiteResult("polynomial-identities", True, None, samples)


def _guarded(name: str, fn, *args, **kwargs) -> List[SuiteResult]:
    # a broken engine may raise instead of producing a wrong value; report it as a failure
    try:
        res = fn(*args, **kwargs)
    except Exception as exc:  # noqa: BLE001
        return [SuiteResult(name, False, f"{type(exc).__name__}: {exc}", 0)]
    return res if isinstance(res, list) else [res]


def suites_for_n(n: int, window: Sequence[int], seed: int = DEFAULT_SEED, extra_phis: Sequence[BiPoly] = ()) -> List[SuiteResult]:
    out = _guarded(f"complex(n={n})", suite_complex, n, seed, extra_phis=extra_phis)
    out += _guarded(f"oracle(n={n})", suite_oracle, n, seed)
    out += _guarded(f"koszul(n={n})", suite_koszul, n, seed)
    out += _guarded(f"schouten(n={n})", suite_schouten, n, seed)
    out += _guarded(f"dims(n={n})", suite_dims, n, window)
    out += _guarded(f"structure(n={n})", suite_structure, n, window)
    out += _guarded(f"variants(n={n})", suite_variants, n, window)
    return out


def _suites_task(args) -> List[SuiteResult]:
    return suites_for_n(*args)


def run_all(ns: Sequence[int], window: Sequence[int], seed: int = DEFAULT_SEED, extra_phis: Sequence[BiPoly] = (),
            progress: Optional[Callable[[SuiteResult], None]] = None, jobs: int = 1) -> List[SuiteResult]:
    """Every suite, in a fixed order, for each n. With ``jobs > 1`` the values of n run in worker processes."""
    cohomology.clear_caches()
    results: List[SuiteResult] = []

    def emit(batch):
        for r in batch:
            results.append(r)
            if progress:
                progress(r)

    emit(_guarded("polynomial-identities", suite_polynomial, seed))
    tasks = [(n, list(window), seed, list(extra_phis)) for n in ns]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            for batch in pool.map(_suites_task, tasks):
                emit(batch)
    else:
        for t in tasks:
            emit(_suites_task(t))
    return results
