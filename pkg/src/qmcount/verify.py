"""Validation suites: pinned values, identities, dual routes, and sweeps.

Five suites, each returning plain CheckResult records:

- regression: recompute every pinned sequence/triangle value.
- identity: exact power-series and q-combinatorial identities.
- cross_route: the same count computed by two independent methods.
- trend: ratios at n = 10 sit near their limiting products.
- oracle: exhaustive small-field matrix sweeps match every formula.

The command-line `verify` subcommand runs all of them and fails on any
mismatch; the test suite reuses the same functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from . import oracle, regression
from .exact_series import TruncSeries
from .ffpoly import cyclotomic_factor_degrees, divisors, irreducible_poly_count
from .gfengine import (
    centralizer_order,
    euler_inverse_factor,
    extract_count,
    gf_build,
    limit_eval,
    nu_weighted_product,
    partitions_of,
    q_stirling_via_gf,
)
from .qcount import (
    PrimePower,
    diagonalizable_count,
    gaussian_binomial,
    gl_order,
    gl_order_factored,
    involution_count_char2,
    linear_derangement_count,
    linear_derangement_reduced,
    nilpotent_count,
    projection_count,
    q_bell,
    q_multinomial,
    q_stirling,
    rank_count,
)
from .sequences import _MIN_CENTRALIZER_GL2, make_spec, sequence_values, triangle_rows


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    suite: str
    name: str
    ok: bool
    detail: str = ""


def _check(results: list[CheckResult], suite: str, name: str, got, want) -> None:
    if got == want:
        results.append(CheckResult(suite, name, True))
    else:
        results.append(
            CheckResult(suite, name, False, f"expected {want!r}, got {got!r}")
        )


def _prop(results: list[CheckResult], suite: str, name: str, ok: bool, detail: str = "") -> None:
    results.append(CheckResult(suite, name, ok, "" if ok else detail))


def failures(results) -> list[CheckResult]:
    return [r for r in results if not r.ok]


# ---------------------------------------------------------------- regression


def regression_checks() -> list[CheckResult]:
    """Recompute every pinned value through the public sequence routes."""
    results: list[CheckResult] = []
    for entry in regression.SEQUENCES:
        spec = make_spec(
            entry.name,
            entry.q,
            entry.k,
            min_n=entry.start,
            max_n=entry.start + len(entry.values) - 1,
        )
        label = f"{entry.name} q={entry.q}" + (f" k={entry.k}" if entry.k else "")
        _check(results, "regression", label, tuple(sequence_values(spec)), entry.values)
    for tri in regression.TRIANGLES:
        rows = triangle_rows(
            tri.name, tri.q, tri.start_row, tri.start_row + len(tri.rows) - 1
        )
        _check(
            results,
            "regression",
            f"{tri.name} q={tri.q}",
            tuple(tuple(r) for r in rows),
            tri.rows,
        )
    for q, want in regression.DIAGONALIZABLE_D2:
        _check(results, "regression", f"diagonalizable q={q} n=2", diagonalizable_count(q, 2), want)
        _check(
            results,
            "regression",
            f"diagonalizable q={q} n=2 gf",
            extract_count(gf_build("diagonalizable", q, 4), 2, q),
            want,
        )
    return results


# ------------------------------------------------------------------ identity


def _all_ones(order: int) -> TruncSeries:
    return TruncSeries([1] * (order + 1), order)


def identity_checks() -> list[CheckResult]:
    results: list[CheckResult] = []

    # product of euler factors over every irreducible except z equals 1/(1-u)
    order = 12
    for q in (2, 3, 4):
        prod = euler_inverse_factor(q, 1, order) ** (q - 1)
        for d in range(2, order + 1):
            prod = prod * euler_inverse_factor(q, d, order) ** irreducible_poly_count(q, d)
        _check(results, "identity", f"euler product = 1/(1-u) q={q}", prod, _all_ones(order))
        _check(
            results,
            "identity",
            f"invertible gf = 1/(1-u) q={q}",
            gf_build("invertible_check", q, order),
            _all_ones(order),
        )

    # the complementary product over all irreducibles equals 1 - u
    for q in (2, 3, 4, 5):
        got = nu_weighted_product(
            q,
            lambda d, q=q: TruncSeries.one(16) - TruncSeries.monomial(Fraction(1, q**d), d, 16),
            16,
        )
        want = TruncSeries.one(16) - TruncSeries.monomial(1, 1, 16)
        _check(results, "identity", f"factored form of 1-u q={q}", got, want)

    # euler factor coefficients equal partition sums over centralizer orders
    for q in (2, 3):
        for d in (1, 2, 3):
            factor = euler_inverse_factor(q, d, 10)
            ok = True
            detail = ""
            for m in range(0, 10 // d + 1):
                want = sum(
                    (Fraction(1, centralizer_order(q**d, lam)) for lam in partitions_of(m)),
                    Fraction(0),
                )
                if factor.coeff(m * d) != want:
                    ok = False
                    detail = f"mismatch at q={q} d={d} m={m}"
                    break
            _prop(results, "identity", f"partition sum = euler factor q={q} d={d}", ok, detail)

    # summing reciprocal centralizer orders over all partitions of n
    for q in (2, 3):
        for n in range(1, 9):
            total = sum(
                (Fraction(1, centralizer_order(q, lam)) for lam in partitions_of(n)),
                Fraction(0),
            )
            _check(
                results,
                "identity",
                f"centralizer reciprocal sum q={q} n={n}",
                gl_order(q, n) * total,
                q ** (n * (n - 1)),
            )

    # q-binomial theorem: prod_{i=0}^{n-1} (1 + q^i t) as a polynomial in t
    for q in (2, 3, 4, 5):
        ok = True
        detail = ""
        for n in range(0, 11):
            poly = [1]
            for i in range(n):
                shifted = [0] + [c * q**i for c in poly]
                poly = [a + b for a, b in zip(poly + [0], shifted)]
            want = [
                q ** comb(k, 2) * gaussian_binomial(q, n, k) for k in range(n + 1)
            ]
            if poly != want:
                ok = False
                detail = f"mismatch at q={q} n={n}: {poly} != {want}"
                break
        _prop(results, "identity", f"q-binomial theorem q={q}", ok, detail)

    # conjugacy-class products: one partition per irreducible polynomial
    for q in (2, 3):
        order = 10
        pgf = TruncSeries.one(order)
        for i in range(1, order + 1):
            pgf = pgf * (TruncSeries.one(order) - TruncSeries.monomial(1, i, order)).recip()
        prod = TruncSeries.one(order)
        for d in range(1, order + 1):
            prod = prod * pgf.dilate(d) ** irreducible_poly_count(q, d)
        _check(
            results,
            "identity",
            f"class product, all matrices q={q}",
            prod,
            gf_build("conjclasses_all", q, order),
        )
        _check(
            results,
            "identity",
            f"class product, invertible q={q}",
            prod * pgf.recip(),
            gf_build("conjclasses_gl", q, order),
        )

    # irreducible-polynomial counts partition the roots of z^(q^n) - z
    for q in (2, 3, 4):
        ok = True
        detail = ""
        for n in range(1, 11):
            got = sum(d * irreducible_poly_count(q, d) for d in divisors(n))
            if got != q**n:
                ok = False
                detail = f"degree-weighted count {got} != {q}^{n}"
                break
        _prop(results, "identity", f"irreducible count sum q={q}", ok, detail)

    # factorization type of z^k - 1: degrees sum to k; linear factors = gcd(k, q-1)
    for q, ks in ((2, (1, 3, 5, 7, 9, 15)), (3, (1, 2, 4, 5, 7, 8)), (4, (3, 5, 7, 9)), (5, (2, 3, 4, 6))):
        ok = True
        detail = ""
        for k in ks:
            degs = cyclotomic_factor_degrees(q, k)
            if sum(degs) != k or degs.count(1) != gcd(k, q - 1):
                ok = False
                detail = f"bad degree profile {degs} for k={k}"
                break
        _prop(results, "identity", f"root-of-unity factor degrees q={q}", ok, detail)

    return results


# --------------------------------------------------------------- cross_route


def _gf_counts(kind: str, q: int, max_n: int, k: int | None = None) -> list[int]:
    gf = gf_build(kind, q, max_n, k=k)
    return [extract_count(gf, n, q) for n in range(max_n + 1)]


def cross_route_checks() -> list[CheckResult]:
    results: list[CheckResult] = []

    for q in (2, 3):
        _check(
            results,
            "cross_route",
            f"projections: sum formula vs gf q={q}",
            [projection_count(q, n) for n in range(11)],
            _gf_counts("projection", q, 10),
        )
        _check(
            results,
            "cross_route",
            f"diagonalizable: sum formula vs gf q={q}",
            [diagonalizable_count(q, n) for n in range(11)],
            _gf_counts("diagonalizable", q, 10),
        )
        _check(
            results,
            "cross_route",
            f"derangements: recursion vs gf q={q}",
            [linear_derangement_count(q, n) for n in range(11)],
            _gf_counts("linear_derangement", q, 10),
        )
        _check(
            results,
            "cross_route",
            f"splitting counts: sum vs exp gf q={q}",
            [
                [q_stirling(q, n, k) for k in range(1, n + 1)]
                for n in range(1, 8)
            ],
            [
                [q_stirling_via_gf(q, n, k) for k in range(1, n + 1)]
                for n in range(1, 8)
            ],
        )
        _check(
            results,
            "cross_route",
            f"splitting totals vs exp gf q={q}",
            [q_bell(q, n) for n in range(1, 7)],
            _gf_counts("bell", q, 6)[1:],
        )

    for q in (2, 3, 5):
        _check(
            results,
            "cross_route",
            f"derangement reduced form q={q}",
            [linear_derangement_count(q, n) for n in range(13)],
            [
                linear_derangement_reduced(q, n) * q ** (n * (n - 1) // 2)
                for n in range(13)
            ],
        )

    for q in (2, 3, 4):
        _check(
            results,
            "cross_route",
            f"cyclic gf forms agree q={q}",
            gf_build("cyclic", q, 12),
            gf_build("cyclic_alt", q, 12),
        )
        _check(
            results,
            "cross_route",
            f"separable gf forms agree q={q}",
            gf_build("separable", q, 12),
            gf_build("separable_alt", q, 12),
        )

    # over odd q the solutions of A^2 = I biject with projections
    for q in (3, 5):
        _check(
            results,
            "cross_route",
            f"square roots of identity vs projections q={q}",
            _gf_counts("power_identity", q, 8, k=2),
            [projection_count(q, n) for n in range(9)],
        )

    for q in (2, 3, 4, 5, 7, 8, 9):
        _check(
            results,
            "cross_route",
            f"diagonalizable n=2 polynomial q={q}",
            diagonalizable_count(q, 2),
            (q**4 - q**2 + 2 * q) // 2,
        )

    for q in (2, 3):
        _check(
            results,
            "cross_route",
            f"projections vs splitting numbers q={q}",
            [projection_count(q, n) for n in range(2, 9)],
            [2 + 2 * q_stirling(q, n, 2) for n in range(2, 9)],
        )

    _check(
        results,
        "cross_route",
        "projections = diagonalizable at q=2",
        [projection_count(2, n) for n in range(9)],
        [diagonalizable_count(2, n) for n in range(9)],
    )

    for q in (2, 3):
        ok = all(
            gaussian_binomial(q, n, k)
            == gl_order(q, n)
            // (gl_order(q, k) * gl_order(q, n - k) * q ** (k * (n - k)))
            and gaussian_binomial(q, n, k) == gaussian_binomial(q, n, n - k)
            for n in range(11)
            for k in range(n + 1)
        )
        _prop(results, "cross_route", f"subspace count group identity q={q}", ok, "index formula mismatch")
        _check(
            results,
            "cross_route",
            f"two-part multinomial q={q}",
            [q_multinomial(q, [a, b]) for a in range(5) for b in range(5)],
            [gaussian_binomial(q, a + b, a) for a in range(5) for b in range(5)],
        )
        ok = all(
            rank_count(q, m, n, k) == rank_count(q, n, m, k)
            for m in range(6)
            for n in range(6)
            for k in range(min(m, n) + 1)
        )
        _prop(results, "cross_route", f"rank count transpose symmetry q={q}", ok, "transpose mismatch")
        ok = all(
            sum(rank_count(q, n, n, k) for k in range(n + 1)) == q ** (n * n)
            for n in range(6)
        )
        _prop(results, "cross_route", f"rank counts sum to all matrices q={q}", ok, "rank total mismatch")

    for q in (2, 3, 4, 5):
        _check(
            results,
            "cross_route",
            f"invertible order factored form q={q}",
            [gl_order(q, n) for n in range(9)],
            [gl_order_factored(q, n) for n in range(9)],
        )
        _check(
            results,
            "cross_route",
            f"invertible counts via gf q={q}",
            [gl_order(q, n) for n in range(13)],
            _gf_counts("invertible_check", q, 12),
        )

    return results


# --------------------------------------------------------------------- trend


def _partial_product(q: int, terms: int = 60) -> Fraction:
    prod = Fraction(1)
    for r in range(1, terms + 1):
        prod *= 1 - Fraction(1, q**r)
    return prod


def trend_checks() -> list[CheckResult]:
    """Distances to the limiting ratios shrink and end within 10% at n = 10."""
    results: list[CheckResult] = []
    for q in (2, 3):
        limit = _partial_product(q)
        series = {
            "invertible fraction": [
                Fraction(gl_order(q, n), q ** (n * n)) for n in range(1, 11)
            ],
            "derangement fraction": [
                Fraction(linear_derangement_count(q, n), gl_order(q, n))
                for n in range(1, 11)
            ],
        }
        gf = gf_build("conjclasses_all", q, 10)
        series["class count growth"] = [
            extract_count(gf, n, q, normalized=False) / Fraction(q**n)
            for n in range(1, 11)
        ]
        targets = {
            "invertible fraction": limit,
            "derangement fraction": limit,
            "class count growth": 1 / limit,
        }
        for label, values in series.items():
            target = targets[label]
            dist = [abs(x - target) for x in values]
            ok = dist[3] >= dist[6] >= dist[9] and dist[9] <= target / 10
            _prop(
                results,
                "trend",
                f"{label} q={q}",
                ok,
                f"distances n=4,7,10: {[float(dist[i]) for i in (3, 6, 9)]}, "
                f"limit {float(target):.6f}",
            )
    return results


# -------------------------------------------------------------------- limits


def limit_checks() -> list[CheckResult]:
    """The two invertibility limits print the expected digits."""
    results: list[CheckResult] = []
    _check(results, "limit", "invertible limit q=2", limit_eval("invertible", 2, 5), "0.28878")
    _check(results, "limit", "invertible limit q=3", limit_eval("invertible", 3, 5), "0.56012")
    return results


# -------------------------------------------------------------------- oracle

SWEEP_CASES = ((2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (2, 3), (2, 4))

SWEEP_POWERS = (2, 3, 4, 5, 6)


def oracle_sweeps(
    enum_budget: int = oracle.DEFAULT_ENUM_BUDGET, jobs: int = 1
) -> dict[tuple[int, int], oracle.SweepResult]:
    """Exhaustive sweeps for every standard case within the budget."""
    sweeps = {}
    for q, n in SWEEP_CASES:
        if q ** (n * n) <= enum_budget:
            sweeps[(q, n)] = oracle.sweep_counts(
                q, n, ks=SWEEP_POWERS, budget=enum_budget, jobs=jobs
            )
    return sweeps


def _char_power_at_least(k: int, p: int, n: int) -> bool:
    """True when k is a power of p that is at least n."""
    if k < max(n, p):
        return False
    while k % p == 0:
        k //= p
    return k == 1


def oracle_checks(
    sweeps: dict[tuple[int, int], oracle.SweepResult],
    pair_budget: int = oracle.DEFAULT_PAIR_BUDGET,
) -> list[CheckResult]:
    results: list[CheckResult] = []
    for (q, n), sw in sorted(sweeps.items()):
        tag = f"q={q} n={n}"
        p = PrimePower.of(q).p
        _check(results, "oracle", f"matrix total {tag}", sw.total, q ** (n * n))
        _check(results, "oracle", f"invertible {tag}", sw.invertible, gl_order(q, n))
        _check(results, "oracle", f"nilpotent {tag}", sw.nilpotent, nilpotent_count(q, n))
        _check(results, "oracle", f"projections {tag}", sw.projection, projection_count(q, n))
        _check(
            results,
            "oracle",
            f"diagonalizable {tag}",
            sw.diagonalizable,
            diagonalizable_count(q, n),
        )
        _check(
            results,
            "oracle",
            f"derangements {tag}",
            sw.linear_derangement,
            linear_derangement_count(q, n),
        )
        order = max(n, 1)
        for kind, got in (
            ("cyclic", sw.cyclic),
            ("semisimple", sw.semisimple),
            ("separable", sw.separable),
            ("projective_derangement", sw.projective_derangement),
        ):
            _check(
                results,
                "oracle",
                f"{kind} {tag}",
                got,
                extract_count(gf_build(kind, q, order), n, q),
            )
        _check(
            results,
            "oracle",
            f"rank distribution {tag}",
            sw.rank,
            tuple(rank_count(q, n, n, k) for k in range(n + 1)),
        )
        for k, got in sorted(sw.power_identity.items()):
            if k % p:
                want = extract_count(gf_build("power_identity", q, order, k=k), n, q)
            elif k == 2 and p == 2:
                want = involution_count_char2(q, n)
            elif _char_power_at_least(k, p, n):
                # A^k = I means (A - I)^k = 0 here, i.e. A - I nilpotent
                want = nilpotent_count(q, n)
            else:
                continue
            _check(results, "oracle", f"power identity k={k} {tag}", got, want)
        _check(results, "oracle", f"flag consistency {tag}", sw.consistency_violations, 0)

    for (q, n) in ((3, 1), (3, 2)):
        if (q, n) in sweeps:
            _check(
                results,
                "oracle",
                f"square roots of identity vs projections q={q} n={n}",
                sweeps[(q, n)].power_identity[2],
                projection_count(q, n),
            )

    for q, n in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2)):
        if (q, n) not in sweeps:
            continue
        size = q ** (n * n)
        if gl_order(q, n) * size > pair_budget:
            continue
        tag = f"q={q} n={n}"
        sizes_all = oracle.conjugacy_orbit_sizes(q, n, False, pair_budget)
        sizes_gl = oracle.conjugacy_orbit_sizes(q, n, True, pair_budget)
        gamma = gl_order(q, n)
        gf_all = gf_build("conjclasses_all", q, max(n, 1))
        gf_gl = gf_build("conjclasses_gl", q, max(n, 1))
        _check(
            results,
            "oracle",
            f"class count, all matrices {tag}",
            len(sizes_all),
            extract_count(gf_all, n, q, normalized=False),
        )
        _check(
            results,
            "oracle",
            f"class count, invertible {tag}",
            len(sizes_gl),
            extract_count(gf_gl, n, q, normalized=False),
        )
        _check(results, "oracle", f"orbit sizes cover all matrices {tag}", sum(sizes_all), size)
        _check(results, "oracle", f"orbit sizes cover invertibles {tag}", sum(sizes_gl), gamma)
        _prop(
            results,
            "oracle",
            f"orbit sizes divide group order {tag}",
            all(gamma % s == 0 for s in sizes_all + sizes_gl),
            "orbit size does not divide the group order",
        )

    for n in (1, 2, 3):
        if (2, n) not in sweeps:
            continue
        if gl_order(2, n) ** 2 > pair_budget:
            continue
        got = oracle.min_centralizer_order(2, n, pair_budget)
        _check(results, "oracle", f"smallest centralizer q=2 n={n}", got, _MIN_CENTRALIZER_GL2[n])
        _check(
            results,
            "oracle",
            f"largest class q=2 n={n}",
            oracle.max_class_size(2, n, pair_budget),
            gl_order(2, n) // _MIN_CENTRALIZER_GL2[n],
        )

    return results


def run_all(
    enum_budget: int = oracle.DEFAULT_ENUM_BUDGET,
    pair_budget: int = oracle.DEFAULT_PAIR_BUDGET,
    jobs: int = 1,
) -> list[CheckResult]:
    results = regression_checks()
    results += identity_checks()
    results += cross_route_checks()
    results += trend_checks()
    results += limit_checks()
    results += oracle_checks(oracle_sweeps(enum_budget, jobs), pair_budget)
    return results
