"""Cross-path verification checks.

Every check compares two independently computed quantities over a sweep and
reports a structured result: pass/fail, case count, and the first failing
cell (n, d, which, expected, got).  Checks never raise on mismatch; they
record it, so fault injection in tests surfaces as a named failing cell.

The registry groups checks by the subsystem they exercise so the CLI can
run a single scope; skipped checks are still listed, with status "skipped".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import hj, lattice, moduli, systems, tangent
from .errors import InvariantError
from .poly import simplify


@dataclass
class CheckResult:
    name: str
    scope: str
    status: str = "run"            # "run" | "skipped"
    passed: bool = True
    cases: int = 0
    first_failure: dict | None = None
    note: str = ""

    def fail(self, **cell):
        self.passed = False
        if self.first_failure is None:
            self.first_failure = cell

    def guard(self, fn, **cell):
        """Run one cell's computation; an internal invariant breach becomes
        a recorded failure at that cell instead of aborting the sweep."""
        try:
            return fn()
        except InvariantError as exc:
            self.fail(**cell, error=str(exc))
            return None


# ----------------------------------------------------------------------
# hj-calculus
# ----------------------------------------------------------------------

def check_hj_round_trip(n_max: int = 2000) -> CheckResult:
    """hj_eval(hj_expand(n, q)) == n/q on every coprime pair with n <= n_max."""
    res = CheckResult("hj-round-trip", "hj-calculus", note=f"n <= {n_max}")
    for n in range(2, n_max + 1):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            res.cases += 1
            value = hj.hj_eval(hj.hj_expand(hj.CyclicQuotientSingularity(n, q)))
            if (value.numerator, value.denominator) != (n, q):
                res.fail(n=n, q=q, expected=f"{n}/{q}", got=str(value))
    return res


def _all_chains(max_len: int, max_entry: int):
    """Yield (entries, num, den) for every chain, continuants maintained
    incrementally (num/den are the leading continuants of the full chain
    and of its tail from the second entry)."""
    stack = [((e,), e, 1, 1, 0) for e in range(max_entry, 1, -1)]
    while stack:
        entries, p1, p0, q1, q0 = stack.pop()
        yield entries, p1, q1
        if len(entries) < max_len:
            for e in range(2, max_entry + 1):
                stack.append((entries + (e,), e * p1 - p0, p1, e * q1 - q0, q1))


def check_chain_recognizer(max_len: int = 8, max_entry: int = 6) -> CheckResult:
    """Reduction-route vs singularity-form classification on every chain."""
    res = CheckResult(
        "chain-recognizer", "hj-calculus",
        note=f"length <= {max_len}, entries <= {max_entry}",
    )
    for entries, num, den in _all_chains(max_len, max_entry):
        res.cases += 1
        kind, delta, two_g = hj.reduction_classification(hj.Chain(entries))
        by_value = hj.classify_singularity(hj.CyclicQuotientSingularity(num, den))
        if (kind, delta, two_g) != (by_value.kind, by_value.delta, by_value.two_gorenstein):
            res.fail(
                chain=list(entries),
                expected=f"{by_value.kind.value} delta={by_value.delta}",
                got=f"{kind.value} delta={delta}",
            )
    return res


# ----------------------------------------------------------------------
# picard-lattice
# ----------------------------------------------------------------------

def check_tchain_lattice(max_len: int = 12) -> CheckResult:
    """Enumerated T-chains: negative-definite Gram, |det| = value numerator,
    growth preserves delta and raises the contraction gain by exactly 1."""
    res = CheckResult("tchain-lattice", "picard-lattice", note=f"length <= {max_len}")
    for chain in hj.enumerate_t_chains(max_len):
        res.cases += 1
        gram = lattice.chain_gram(chain)
        cls = res.guard(lambda: hj.classify_chain(chain), chain=list(chain))
        if cls is None:
            continue
        if cls.kind is not hj.ChainKind.T:
            res.fail(chain=list(chain), expected="T", got=cls.kind.value)
            continue
        if not lattice.is_negative_definite(gram):
            res.fail(chain=list(chain), expected="negative definite", got="not")
            continue
        num = hj.hj_eval(chain).numerator
        det = lattice.det_exact(gram)
        if abs(det) != num:
            res.fail(chain=list(chain), expected=f"|det| = {num}", got=str(det))
            continue
        gain = hj.k2_contribution(chain)
        for side in ("left", "right"):
            grown = hj.grow_chain(chain, side)
            grown_cls = hj.classify_chain(grown)
            if grown_cls.kind is not hj.ChainKind.T or grown_cls.delta != cls.delta:
                res.fail(chain=list(grown), expected=f"T delta={cls.delta}",
                         got=f"{grown_cls.kind.value} delta={grown_cls.delta}")
            elif hj.k2_contribution(grown) != gain + 1:
                res.fail(chain=list(grown), expected=f"gain {gain + 1}",
                         got=str(hj.k2_contribution(grown)))
    return res


def check_discrepancy_constants(max_len: int = 30, general_len: int = 10) -> CheckResult:
    """2-Gorenstein chains have constant discrepancy -1/2 and contraction
    gain 1; every T-chain has discrepancies in (-1, 0]."""
    from fractions import Fraction

    res = CheckResult(
        "discrepancy-constants", "picard-lattice",
        note=f"2-Gorenstein to length {max_len}, all T-chains to length {general_len}",
    )
    half = Fraction(-1, 2)
    for chain in hj.enumerate_t_chains(max_len, only_two_gorenstein=True):
        res.cases += 1
        disc = lattice.discrepancies(chain)
        if any(a != half for a in disc):
            res.fail(chain=list(chain), expected="-1/2 vector", got=str(disc))
        elif hj.k2_contribution(chain) != 1:
            res.fail(chain=list(chain), expected="gain 1",
                     got=str(hj.k2_contribution(chain)))
    for chain in hj.enumerate_t_chains(general_len):
        res.cases += 1
        cls = hj.classify_chain(chain)
        disc = lattice.discrepancies(chain)
        if not all(-1 < a <= 0 for a in disc):
            res.fail(chain=list(chain), expected="in (-1, 0]", got=str(disc))
        elif cls.two_gorenstein and any(a != half for a in disc):
            res.fail(chain=list(chain), expected="-1/2 vector", got=str(disc))
    return res


# ----------------------------------------------------------------------
# hirzebruch-systems
# ----------------------------------------------------------------------

def _system_cells(n: int):
    for d in systems.admissible_d_range(n):
        for i in (0, 1):
            if i == 1 and d == 0:
                continue
            for j in (0, 1):
                yield d, i, j


def check_table2_two_path(n_max: int = 200) -> CheckResult:
    """Lattice dimension equals the closed form in every reduced cell, and
    dim|L_i0| = dim|L_i1| whenever both are reduced."""
    res = CheckResult("table2-two-path", "hirzebruch-systems", note=f"14 <= n <= {n_max}")
    for n in range(14, n_max + 1):
        for d, i, j in _system_cells(n):
            res.cases += 1
            analysis = res.guard(
                lambda: systems.analyze_system(systems.BlowupConfig(d, i, j), n),
                n=n, d=d, i=i, j=j)
            if analysis is None:
                continue
            closed = systems.table2_dim(analysis.regime, i, n, d)
            if not analysis.reduced:
                if closed is not None and analysis.regime == "eq2dm3" and i == 1:
                    res.fail(n=n, d=d, i=i, j=j, expected="no closed form", got=closed)
                continue
            if analysis.dim != closed:
                res.fail(n=n, d=d, i=i, j=j, expected=closed, got=analysis.dim)
        for d in systems.admissible_d_range(n):
            for i in (0, 1):
                if i == 1 and d == 0:
                    continue
                pair = res.guard(
                    lambda: (systems.analyze_system(systems.BlowupConfig(d, i, 0), n),
                             systems.analyze_system(systems.BlowupConfig(d, i, 1), n)),
                    n=n, d=d, i=i)
                if pair is None:
                    continue
                a0, a1 = pair
                if a0.reduced and a1.reduced:
                    res.cases += 1
                    if a0.dim != a1.dim:
                        res.fail(n=n, d=d, i=i, expected=a0.dim, got=a1.dim)
    return res


def check_table3_certificates(n_max: int = 200) -> CheckResult:
    """Fixed parts satisfy their defining sign conditions in every cell."""
    res = CheckResult("table3-certificates", "hirzebruch-systems", note=f"14 <= n <= {n_max}")
    for n in range(14, n_max + 1):
        for d, i, j in _system_cells(n):
            analysis = res.guard(
                lambda: systems.analyze_system(systems.BlowupConfig(d, i, j), n),
                n=n, d=d, i=i, j=j)
            if analysis is None or not analysis.reduced:
                continue
            res.cases += 1
            lat = systems.config_lattice(analysis.config)
            d_strict = systems.strict_section(analysis.config, lat)
            dl = lat.intersect(d_strict, analysis.L)
            in_z = "D'" in (analysis.Z_name or "")
            if (dl < 0) != in_z:
                res.fail(n=n, d=d, i=i, j=j,
                         expected=f"D'.L < 0 iff D' in Z (Z = {analysis.Z_name})",
                         got=f"D'.L = {dl}")
                continue
            if in_z:
                rest = lat.intersect(d_strict, analysis.L - d_strict)
                if rest < 0:
                    res.fail(n=n, d=d, i=i, j=j,
                             expected="D'.(L - D') >= 0", got=str(rest))
                    continue
            if analysis.Z_name == "D'+(E1-E2)":
                e1e2 = lat.divisor(E1=1, E2=-1)
                pairing = lat.intersect(e1e2, analysis.L - d_strict)
                if pairing != -1:
                    res.fail(n=n, d=d, i=i, j=j,
                             expected="(E1-E2).(L-D') = -1", got=str(pairing))
                    continue
            m2 = lat.intersect(analysis.M, analysis.M)
            mk = lat.intersect(analysis.M, lat.k)
            if not (m2 > 0 and mk < 0):
                res.fail(n=n, d=d, i=i, j=j,
                         expected="M^2 > 0 and M.K < 0", got=f"({m2}, {mk})")
    return res


# ----------------------------------------------------------------------
# horikawa-moduli
# ----------------------------------------------------------------------

def check_table1_two_path(n_max: int = 200) -> CheckResult:
    """Closed-form stratum dimensions equal linear-system dimension minus
    automorphism dimension, including the empty cells."""
    res = CheckResult("table1-two-path", "horikawa-moduli", note=f"14 <= n <= {n_max}")
    for n in range(14, n_max + 1):
        for d in moduli.admissible_d_range(moduli.FIRST, n):
            regime = moduli.table1_regime(n, d)
            row_prime, row_second = moduli.TABLE1[regime]
            for which, row, i, aut in (
                (moduli.D_PRIME, row_prime, 0, moduli.aut_dim_y00(d)),
                (moduli.D_SECOND, row_second, 1,
                 None if d == 0 else moduli.aut_dim_y10(d)),
            ):
                res.cases += 1
                empty = which == moduli.D_SECOND and moduli.d_second_empty(n, d)
                analysis = None
                if not (which == moduli.D_SECOND and d == 0):
                    analysis = res.guard(
                        lambda: systems.analyze_system(systems.BlowupConfig(d, i, 0), n),
                        n=n, d=d, which=which)
                    if analysis is None:
                        continue
                if empty:
                    lattice_empty = analysis is None or not analysis.reduced
                    if row[0] is not None or not lattice_empty:
                        res.fail(n=n, d=d, which=which, expected="empty",
                                 got="nonempty table row or reduced system")
                    continue
                closed = simplify(row[0](n, d))
                via_lattice = simplify(analysis.dim - aut)
                if via_lattice != closed:
                    res.fail(n=n, d=d, which=which, expected=closed, got=via_lattice)
    return res


def check_nu_consistency(n_max: int = 200) -> CheckResult:
    """dim stratum = 7n + 18 - nu in every row with 2d-2 <= n <= 3d-5."""
    res = CheckResult("nu-consistency", "horikawa-moduli", note=f"14 <= n <= {n_max}")
    for n in range(14, n_max + 1):
        for d in moduli.admissible_d_range(moduli.FIRST, n):
            if not (2 * d - 2 <= n <= 3 * d - 5):
                continue
            pair = res.guard(lambda: moduli.d_strata(n, d), n=n, d=d)
            if pair is None:
                continue
            for rec in pair:
                res.cases += 1
                expected = 7 * n + 18 - rec.nu
                if rec.dim != expected:
                    res.fail(n=n, d=d, which=rec.tag, expected=expected, got=rec.dim)
    return res


def check_top_strata(n_max: int = 200) -> CheckResult:
    """dn_components matches the parity rule, every listed component has
    dimension 7n + 18, and the exhaustive d-sweep finds no other stratum of
    that dimension."""
    res = CheckResult("top-strata", "horikawa-moduli", note=f"14 <= n <= {n_max}")
    for n in range(14, n_max + 1):
        res.cases += 1
        comps = res.guard(lambda: moduli.dn_components(n), n=n)
        if comps is None:
            continue
        expected_count = 1 if n % 4 in (2, 3) else 2
        if len(comps) != expected_count:
            res.fail(n=n, expected=f"{expected_count} components", got=len(comps))
            continue
        if any(c.dim != 7 * n + 18 for c in comps):
            res.fail(n=n, expected=f"all components of dim {7 * n + 18}",
                     got=str([c.dim for c in comps]))
            continue
        listed = {(c.d, c.which) for c in comps}
        attained = set()
        for d in moduli.admissible_d_range(moduli.FIRST, n):
            pair = res.guard(lambda: moduli.d_strata(n, d), n=n, d=d)
            if pair is None:
                continue
            for rec in pair:
                if not moduli.is_empty(rec.dim) and rec.dim >= 7 * n + 18:
                    if rec.dim > 7 * n + 18:
                        res.fail(n=n, d=d, which=rec.tag,
                                 expected="<= 7n+18", got=rec.dim)
                    attained.add((d, rec.tag))
        if attained != listed:
            res.fail(n=n, expected=sorted(listed), got=sorted(attained))
    return res


def check_second_kind_strata(n_max: int = 200) -> CheckResult:
    """Prop-type sanity for the smooth second-kind strata: eta <= d-2 when
    positive, dimension <= 7n+19 with equality exactly on dense strata,
    and n + 4 = 3d never happens."""
    res = CheckResult("second-kind-strata", "horikawa-moduli", note=f"7 <= n <= {n_max}")
    for n in range(7, n_max + 1):
        for d in moduli.admissible_d_range(moduli.SECOND, n):
            res.cases += 1
            if n + 4 == 3 * d:
                res.fail(n=n, d=d, expected="n+4 != 3d", got="n+4 = 3d")
                continue
            rec = res.guard(lambda: moduli.stratum_dim_second(n, d), n=n, d=d)
            if rec is None:
                continue
            if rec.eta > 0 and rec.eta > d - 2:
                res.fail(n=n, d=d, expected="eta <= d-2", got=rec.eta)
                continue
            if rec.dim > 7 * n + 19:
                res.fail(n=n, d=d, expected="dim <= 7n+19", got=rec.dim)
                continue
            if (rec.dim == 7 * n + 19) != rec.is_component:
                res.fail(n=n, d=d, expected="top-dim iff component flag",
                         got=f"dim {rec.dim}, flag {rec.is_component}")
    return res


def check_topology(n_max: int = 200) -> CheckResult:
    """First-kind component 1b is even exactly for n = 5 mod 8 (with
    16 | signature), all other components odd; second kind always odd."""
    res = CheckResult("topology-parity", "horikawa-moduli", note=f"n <= {n_max}")
    for n in range(3, n_max + 1):
        for kind in (moduli.FIRST, moduli.SECOND):
            if kind == moduli.SECOND and n < 1:
                continue
            for tag in moduli.component_tags(kind, n):
                res.cases += 1
                form = res.guard(
                    lambda: moduli.intersection_form(kind, n, tag),
                    kind=kind, n=n, tag=tag)
                if form is None:
                    continue
                should_be_even = kind == moduli.FIRST and tag == "1b" and n % 8 == 5
                if (form.parity == "even") != should_be_even:
                    res.fail(kind=kind, n=n, tag=tag,
                             expected="even" if should_be_even else "odd",
                             got=form.parity)
                    continue
                if form.parity == "even" and form.signature % 16 != 0:
                    res.fail(kind=kind, n=n, tag=tag,
                             expected="16 | signature", got=form.signature)
                    continue
                if form.even_class != (form.parity == "even"):
                    res.fail(kind=kind, n=n, tag=tag,
                             expected="even_class consistent with parity",
                             got=str(form.even_class))
    return res


# ----------------------------------------------------------------------
# tangent-cohomology
# ----------------------------------------------------------------------

def check_tangent_assembly(n_max: int = 200) -> CheckResult:
    """The lattice-assembled h1 equals 7n + 18 - nu and the degree-sum h2
    equals n - 3 on every nonempty stratum."""
    res = CheckResult("tangent-assembly", "tangent-cohomology", note=f"14 <= n <= {n_max}")
    for n in range(14, n_max + 1):
        for d in moduli.admissible_d_range(moduli.FIRST, n):
            res.cases += 1
            h2 = res.guard(lambda: tangent.h2_tx(n, d), n=n, d=d)
            if h2 is None:
                continue
            if h2 != n - 3:
                res.fail(n=n, d=d, expected=n - 3, got=h2)
                continue
            for which in (moduli.D_PRIME, moduli.D_SECOND):
                if which == moduli.D_SECOND and moduli.d_second_empty(n, d):
                    continue
                res.cases += 1
                nu = moduli.nu_count(n, d, which)
                h1 = res.guard(lambda: tangent.h1_tx(n, d, which), n=n, d=d, which=which)
                if h1 is None:
                    continue
                if h1 != 7 * n + 18 - nu:
                    res.fail(n=n, d=d, which=which,
                             expected=7 * n + 18 - nu, got=h1)
    return res


# ----------------------------------------------------------------------
# registry / runner
# ----------------------------------------------------------------------

SCOPES = (
    "hj-calculus",
    "picard-lattice",
    "hirzebruch-systems",
    "horikawa-moduli",
    "tangent-cohomology",
)

SCOPE_ALIASES = {
    "hj": "hj-calculus",
    "lattice": "picard-lattice",
    "picard": "picard-lattice",
    "systems": "hirzebruch-systems",
    "moduli": "horikawa-moduli",
    "tangent": "tangent-cohomology",
}


def run_checks(
    scope: str = "all",
    n_max: int = 200,
    hj_n_max: int | None = None,
    chain_max_len: int = 8,
) -> list[CheckResult]:
    """Run all checks (or one scope's), listing skipped ones explicitly."""
    scope = SCOPE_ALIASES.get(scope, scope)
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; use 'all' or one of {SCOPES}")
    if n_max < 14:
        raise ValueError(f"n_max must be >= 14, got {n_max}")
    hj_bound = n_max if hj_n_max is None else hj_n_max

    plan = [
        ("hj-round-trip", "hj-calculus", lambda: check_hj_round_trip(hj_bound)),
        ("chain-recognizer", "hj-calculus",
         lambda: check_chain_recognizer(chain_max_len)),
        ("tchain-lattice", "picard-lattice", check_tchain_lattice),
        ("discrepancy-constants", "picard-lattice", check_discrepancy_constants),
        ("table2-two-path", "hirzebruch-systems",
         lambda: check_table2_two_path(n_max)),
        ("table3-certificates", "hirzebruch-systems",
         lambda: check_table3_certificates(n_max)),
        ("table1-two-path", "horikawa-moduli", lambda: check_table1_two_path(n_max)),
        ("nu-consistency", "horikawa-moduli", lambda: check_nu_consistency(n_max)),
        ("top-strata", "horikawa-moduli", lambda: check_top_strata(n_max)),
        ("second-kind-strata", "horikawa-moduli",
         lambda: check_second_kind_strata(n_max)),
        ("topology-parity", "horikawa-moduli", lambda: check_topology(n_max)),
        ("tangent-assembly", "tangent-cohomology",
         lambda: check_tangent_assembly(n_max)),
    ]
    results = []
    for name, check_scope, runner in plan:
        if scope != "all" and check_scope != scope:
            results.append(CheckResult(name, check_scope, status="skipped"))
            continue
        results.append(runner())
    return results
