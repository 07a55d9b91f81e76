"""Executable identity checks over configurable sample sets.

Each ``check_*`` returns a :class:`CheckResult`; a failed check carries a
witness with the offending point and both sides rendered exactly. Nothing
here raises on a mathematical failure.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .exact import apostol_sum, divisors, format_rational, sigma
from .hecke import (
    ELLS,
    eigen_family_n,
    eigenvalue,
    hecke_apply,
    hecke_symbol,
    is_prime,
    nonzero_points,
    tau,
    tau_prime_closed_form,
)
from .qseries import qexp_eigenform
from .symbols import (
    DedekindSymbol,
    HomogeneousPolynomial,
    SymbolPoint,
    e_family,
    eisenstein_symbol,
    g_symbol,
    i_sum,
    parse_symbol_spec,
    s_reciprocity_poly,
)
from .unimodular import EnumerationBox

__all__ = [
    "CheckResult",
    "SampleSpec",
    "CONGRUENCE_MODULI",
    "check_symbol_axioms",
    "check_hecke_closure",
    "check_kernel_reciprocity",
    "check_reciprocity",
    "check_cocycle",
    "check_eigen",
    "check_kpr",
    "check_eisenstein_eigen",
    "check_congruence",
    "check_box_stability",
    "check_route_equivalence",
    "SUITE_GROUPS",
    "build_suite",
    "run_suite",
    "report_json",
]

CONGRUENCE_MODULI = {
    10: 691,
    14: 3617,
    16: 43867,
    18: 283 * 617,
    20: 131 * 593,
    24: 657931,
}


@dataclass
class CheckResult:
    check_name: str
    parameters: str
    passed: bool
    witness: dict | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failed check needs a witness")


@dataclass(frozen=True)
class SampleSpec:
    h_max: int = 6
    k_max: int = 12
    c_max: int = 3
    n_max: int = 6
    prime_max: int = 13
    eigen_points: int = 5
    explicit_points: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        for name in ("h_max", "k_max", "c_max", "n_max", "prime_max", "eigen_points"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    def points(self) -> list[SymbolPoint]:
        """(h, k) with 1 <= h <= h_max and |k| <= k_max, or the explicit list."""
        if self.explicit_points is not None:
            return [SymbolPoint(*p) for p in self.explicit_points]
        return [SymbolPoint(h, k) for h in range(1, self.h_max + 1)
                for k in range(-self.k_max, self.k_max + 1)]

    def positive_points(self) -> list[SymbolPoint]:
        if self.explicit_points is not None:
            return [SymbolPoint(*p) for p in self.explicit_points if p[1] >= 1]
        return [SymbolPoint(h, k) for h in range(1, self.h_max + 1)
                for k in range(1, min(self.k_max, self.h_max) + 1)]

    def primes(self) -> list[int]:
        return [p for p in range(2, self.prime_max + 1) if is_prime(p)]


def _witness(relation: str, point, lhs, rhs, **extra) -> dict:
    w = {"relation": relation, "point": list(point) if point is not None else None,
         "lhs": format_rational(lhs), "rhs": format_rational(rhs)}
    w.update(extra)
    return w


def _result(name: str, params: str, witness: dict | None) -> CheckResult:
    return CheckResult(name, params, witness is None, witness)


# --- symbol axioms -----------------------------------------------------------

def _axiom_witness(E: DedekindSymbol, points: Iterable[SymbolPoint], c_max: int):
    for h, k in points:
        v = E(h, k)
        other = E(h, k + h)
        if other != v:
            return _witness("E(h,k+h) = E(h,k)", (h, k), other, v)
        for c in range(2, c_max + 1):
            lhs = E(c * h, c * k)
            if lhs != c**E.weight * v:
                return _witness("E(ch,ck) = c^w E(h,k)", (h, k), lhs, c**E.weight * v, c=c)
        if E.parity is not None:
            sign = 1 if E.parity == "even" else -1
            lhs = E(h, -k)
            if lhs != sign * v:
                return _witness(f"E(h,-k) = {'+' if sign > 0 else '-'}E(h,k)", (h, k), lhs, sign * v)
    return None


def check_symbol_axioms(E: DedekindSymbol, spec: SampleSpec = SampleSpec()) -> CheckResult:
    """Periodicity, homogeneity and declared parity at every sampled point."""
    return _result("symbol_axioms", f"{E.name} parity={E.parity} {_spec_str(spec)}",
                   _axiom_witness(E, spec.points(), spec.c_max))


def check_hecke_closure(E: DedekindSymbol, n: int, spec: SampleSpec = SampleSpec()) -> CheckResult:
    """T_n E is again a symbol of the same weight and parity."""
    T = hecke_symbol(E, n)
    return _result("hecke_closure", f"{E.name} n={n} {_spec_str(spec)}",
                   _axiom_witness(T, spec.points(), spec.c_max))


def check_kernel_reciprocity(w: int, spec: SampleSpec = SampleSpec()) -> CheckResult:
    """G_w(h,k) - G_w(k,-h) = 0: the gcd symbol has zero reciprocity function."""
    G = g_symbol(w)
    for h, k in spec.positive_points():
        lhs = G(h, k) - G(k, -h)
        if lhs != 0:
            return _result("kernel_reciprocity", f"w={w}", _witness("G(h,k)-G(k,-h) = 0", (h, k), lhs, 0))
    return _result("kernel_reciprocity", f"w={w} {_spec_str(spec)}", None)


# --- reciprocity and cocycle -------------------------------------------------

def check_reciprocity(w: int, n: int, spec: SampleSpec = SampleSpec(),
                      poly: HomogeneousPolynomial | None = None) -> CheckResult:
    """E_{w,n}(h,k) - E_{w,n}(k,-h) = S_{w,n}(h,k) for h, k >= 1.

    ``poly`` replaces S_{w,n} (used for negative controls).
    """
    E = e_family(w, n)
    S = poly if poly is not None else s_reciprocity_poly(w, n)
    params = f"w={w} n={n} {_spec_str(spec)}"
    for h, k in spec.positive_points():
        lhs = E(h, k) - E(k, -h)
        rhs = S(h, k)
        if lhs != rhs:
            return _result("reciprocity", params, _witness("E(h,k)-E(k,-h) = S(h,k)", (h, k), lhs, rhs))
    return _result("reciprocity", params, None)


def check_cocycle(w: int, n: int, poly: HomogeneousPolynomial | None = None) -> CheckResult:
    """g(h+k,k) + g(h,h+k) = g(h,k) coefficientwise, and g(1,1) = 0."""
    g = poly if poly is not None else s_reciprocity_poly(w, n)
    params = f"w={w} n={n}"
    diff = g.substitute_shear_left() + g.substitute_shear_right() - g
    if not diff.is_zero():
        i = max(diff.coefficients)
        return _result("cocycle", params, _witness(
            "g(h+k,k)+g(h,h+k)-g(h,k) = 0", None, diff.coeff(i), 0,
            monomial=f"h^{i} k^{g.degree - i}"))
    at_one = g(1, 1)
    if at_one != 0:
        return _result("cocycle", params, _witness("g(1,1) = 0", (1, 1), at_one, 0))
    return _result("cocycle", params, None)


# --- Hecke eigen-relations ---------------------------------------------------

def check_eigen(ell: int, m: int, num_points: int = 5) -> CheckResult:
    """T_m E_{ell,n0} = tau E_{ell,n0} at num_points points, tau equal to the oracle."""
    E = e_family(ell, eigen_family_n(ell))
    params = f"ell={ell} m={m} points={num_points}"
    report = eigenvalue(E, m, base_point=SymbolPoint(1, 0))
    lam = report.eigenvalue
    oracle = qexp_eigenform(ell, max(m, 1))[m]
    if lam != oracle:
        return _result("eigen", params, _witness("T_m E(1,0)/E(1,0) = a_f(m)", (1, 0), lam, oracle))
    points = nonzero_points(E, num_points)
    if len(points) < num_points:
        return _result("eigen", params, _witness("enough nonzero points", None, len(points), num_points))
    for p in points:
        lhs = hecke_apply(E, m, *p)
        rhs = lam * E(*p)
        if lhs != rhs:
            return _result("eigen", params, _witness("T_m E(p) = tau E(p)", p, lhs, rhs))
    return _result("eigen", params, None)


def kpr_sides(w: int, n: int, h: int, k: int) -> tuple[Fraction, Fraction]:
    lhs = sum((d**w * apostol_sum(w + 1, a * k + b * h, d * h)
               for d in divisors(n) for a in (n // d,) for b in range(d)), Fraction(0))
    rhs = sigma(w + 1, n) * apostol_sum(w + 1, k, h)
    return lhs, rhs


def check_kpr(w: int, n: int, spec: SampleSpec = SampleSpec()) -> CheckResult:
    """sum_{ad=n} sum_{b mod d} d^w s_{w+1}(ak+bh, dh) = sigma_{w+1}(n) s_{w+1}(k, h)."""
    params = f"w={w} n={n} {_spec_str(spec)}"
    for h, k in spec.points():
        lhs, rhs = kpr_sides(w, n, h, k)
        if lhs != rhs:
            return _result("kpr", params, _witness("Hecke sum of Apostol sums = sigma s", (h, k), lhs, rhs))
    return _result("kpr", params, None)


def check_eisenstein_eigen(w: int, n: int, spec: SampleSpec = SampleSpec()) -> CheckResult:
    """T_n of the odd Eisenstein symbol equals sigma_{w+1}(n) times the symbol."""
    E = eisenstein_symbol(w)
    lam = sigma(w + 1, n)
    params = f"w={w} n={n} {_spec_str(spec)}"
    for h, k in spec.points():
        v = E(h, k)
        if v == 0:
            continue
        lhs = hecke_apply(E, n, h, k)
        if lhs != lam * v:
            return _result("eisenstein_eigen", params, _witness("T_n Eis = sigma Eis", (h, k), lhs, lam * v))
    return _result("eisenstein_eigen", params, None)


def check_congruence(ell: int, m: int) -> CheckResult:
    """tau_{ell+2}(m) = sigma_{ell+1}(m) modulo the weight's Bernoulli prime(s)."""
    if not is_prime(m):
        raise ValueError(f"needs m prime, got {m}")
    mod = CONGRUENCE_MODULI[ell]
    t = tau(ell, m)
    s = sigma(ell + 1, m)
    params = f"ell={ell} m={m} mod={mod}"
    if (t - s) % mod:
        return _result("congruence", params, _witness("tau = sigma mod M", None, t % mod, s % mod))
    return _result("congruence", params, None)


def check_route_equivalence(ell: int, m: int) -> CheckResult:
    """Operator route, prime closed form and q-expansion agree on tau(m)."""
    params = f"ell={ell} m={m}"
    t = tau(ell, m)
    oracle = qexp_eigenform(ell, m)[m]
    if t != oracle:
        return _result("routes", params, _witness("hecke = oracle", None, t, oracle))
    if is_prime(m):
        c = tau_prime_closed_form(ell, m)
        if c != t:
            return _result("routes", params, _witness("closed = hecke", None, c, t))
    return _result("routes", params, None)


def check_box_stability(w: int, n: int, spec: SampleSpec = SampleSpec(), max_slack: int = 3) -> CheckResult:
    """I_{w,n} is unchanged when the enumeration box grows by 1..max_slack."""
    if max_slack < 0:
        raise ValueError("max_slack must be >= 0")
    params = f"w={w} n={n} max_slack={max_slack} {_spec_str(spec)}"
    for h in range(1, spec.h_max + 1):
        for k in range(h):
            base = i_sum(w, n, h, k)
            for s in range(1, max_slack + 1):
                v = i_sum(w, n, h, k, EnumerationBox(slack=s))
                if v != base:
                    return _result("box_stability", params,
                                   _witness("I(slack) = I(0)", (h, k), v, base, slack=s))
    return _result("box_stability", params, None)


def _spec_str(spec: SampleSpec) -> str:
    if spec.explicit_points is not None:
        return f"points={list(map(list, spec.explicit_points))}"
    return f"h<={spec.h_max} |k|<={spec.k_max} c<={spec.c_max}"


# --- suite -------------------------------------------------------------------

RECIPROCITY_FAMILIES = ((10, 4), (10, 5), (14, 7), (16, 7), (12, 3), (12, 6))
TRIVIAL_WEIGHTS = (2, 10, 12)
KPR_WEIGHTS = (2, 4, 10)
EISENSTEIN_WEIGHTS = (2, 10)

SUITE_GROUPS = ("axioms", "closure", "reciprocity", "cocycle", "eigen", "routes",
                "kpr", "eisenstein", "congruence", "box")


def _run_task(task):
    kind, args, spec = task
    if kind in ("axioms", "closure"):
        symbol = parse_symbol_spec(args[0])
        if kind == "axioms":
            return check_symbol_axioms(symbol, spec)
        return check_hecke_closure(symbol, args[1], spec)
    fn: Callable = {
        "kernel": lambda w: check_kernel_reciprocity(w, spec),
        "reciprocity": lambda w, n: check_reciprocity(w, n, SampleSpec(h_max=5, k_max=5)),
        "cocycle": check_cocycle,
        "eigen": lambda ell, m: check_eigen(ell, m, spec.eigen_points),
        "routes": check_route_equivalence,
        "kpr": lambda w, n: check_kpr(w, n, SampleSpec(h_max=5, k_max=spec.k_max)),
        "eisenstein": lambda w, n: check_eisenstein_eigen(w, n, spec),
        "congruence": check_congruence,
        "box": lambda w, n: check_box_stability(w, n, SampleSpec(h_max=4), 3),
    }[kind]
    return fn(*args)


def build_suite(spec: SampleSpec = SampleSpec(), suite_filter: str | None = None) -> list[tuple]:
    """Ordered list of (kind, args, spec) tasks.

    ``suite_filter`` is a comma-separated list of group names from SUITE_GROUPS.
    """
    tasks: list[tuple] = []
    wanted = None if suite_filter is None else {g.strip() for g in suite_filter.split(",")}

    def add(group, kind, args):
        if wanted is None or group in wanted:
            tasks.append((kind, args, spec))

    symbols = ([f"G:{w}" for w in TRIVIAL_WEIGHTS] + [f"F:{w}" for w in TRIVIAL_WEIGHTS]
               + [f"Eis:{w}" for w in TRIVIAL_WEIGHTS]
               + [f"E:{w}:{n}" for w, n in RECIPROCITY_FAMILIES])
    for s in symbols:
        add("axioms", "axioms", (s,))
    for w in TRIVIAL_WEIGHTS:
        add("axioms", "kernel", (w,))
    closure_spec_symbols = ("G:10", "F:10", "Eis:2", "E:10:4", "E:10:5")
    for s in closure_spec_symbols:
        for n in range(1, spec.n_max + 1):
            add("closure", "closure", (s, n))
    for w, n in RECIPROCITY_FAMILIES:
        add("reciprocity", "reciprocity", (w, n))
        add("cocycle", "cocycle", (w, n))
    for ell in ELLS:
        for m in range(1, 8):
            add("eigen", "eigen", (ell, m))
        for m in spec.primes():
            add("routes", "routes", (ell, m))
            add("congruence", "congruence", (ell, m))
    for w in KPR_WEIGHTS:
        for n in range(1, spec.n_max + 1):
            add("kpr", "kpr", (w, n))
    for w in EISENSTEIN_WEIGHTS:
        for n in range(1, spec.n_max + 1):
            add("eisenstein", "eisenstein", (w, n))
    for w, n in ((10, 5), (14, 7)):
        add("box", "box", (w, n))
    return tasks


def run_suite(spec: SampleSpec = SampleSpec(), suite_filter: str | None = None,
              threads: int = 1) -> list[CheckResult]:
    """Run the selected checks; result order is the task order for any ``threads``."""
    tasks = build_suite(spec, suite_filter)
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_task, tasks))
    return [_run_task(t) for t in tasks]


def report_json(results: list[CheckResult]) -> str:
    return json.dumps([asdict(r) for r in results], indent=2, sort_keys=True)
