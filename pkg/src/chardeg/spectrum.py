"""Exact degree spectra of S_n and A_n and the theorem-level checks.

A spectrum lists the distinct character degrees b_1 > b_2 > ... > b_m of a
group together with the partitions realizing each degree.  All sums and
comparisons downstream (largest-degree dominance, the sandwich bound, the
induced-character estimates, the lower bounds on the squared-degree excess)
are carried out in exact integer or rational arithmetic; irrational bounds
are replaced by certified rational enclosures oriented so a recorded pass is
always sound.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import clamped_square_over, decimal_str, sqrt_upper
from .hooks import hook_product
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    iter_moves,
    lambda_dn,
    lambda_up,
    removable_nodes,
)
from .report import (
    FAIL,
    INCONCLUSIVE,
    INFORMATIONAL,
    PASS,
    Inequality,
    VerificationReport,
)

DEFAULT_MAX_N = 60
MEMBER_CAP = 40


@dataclass(frozen=True)
class DegreeClass:
    """One distinct degree with the partitions that realize it.

    For the symmetric group, members are the partitions themselves and
    ``size == len(members)`` whenever members are stored in full.  For the
    alternating group, members are conjugacy representatives and ``splits``
    records how many characters each representative contributes (2 for a
    self-conjugate partition, else 1); ``size`` counts characters.
    """

    degree: int
    size: int
    members: tuple[Partition, ...]
    splits: tuple[int, ...] = ()

    @property
    def complete(self) -> bool:
        stored = sum(self.splits) if self.splits else len(self.members)
        return stored == self.size


@dataclass(frozen=True)
class DegreeSpectrum:
    n: int
    group: str  # "S" or "A"
    classes: tuple[DegreeClass, ...]  # strictly decreasing degree
    members_complete: bool

    @property
    def b(self) -> int:
        """Largest character degree."""
        return self.classes[0].degree

    @property
    def m1_size(self) -> int:
        return self.classes[0].size

    @property
    def maximizers(self) -> tuple[Partition, ...]:
        return self.classes[0].members

    def group_order(self) -> int:
        if self.group == "S":
            return factorial(self.n)
        return factorial(self.n) // 2 if self.n >= 2 else 1

    def mass(self) -> int:
        return sum(c.size * c.degree * c.degree for c in self.classes)

    def multiplicity_of(self, degree: int) -> int:
        for c in self.classes:
            if c.degree == degree:
                return c.size
        return 0

    def sum_squares_below_top(self) -> int:
        return self.group_order() - self.m1_size * self.b * self.b


def _check_mass(spec: DegreeSpectrum) -> DegreeSpectrum:
    if spec.mass() != spec.group_order():
        raise ArithmeticError(
            f"degree mass mismatch for {spec.group}_{spec.n}: "
            f"{spec.mass()} != {spec.group_order()}"
        )
    return spec


def _shard_partitions(n: int, first_part: int):
    for rest in enumerate_partitions(n - first_part, max_part=first_part):
        yield (first_part,) + rest


def _sn_shard(args: tuple[int, int, bool]) -> dict:
    """Degrees over all partitions of n with the given largest part.

    Returns degree -> [count, members]; members are kept for every degree
    when store_members is set, otherwise only for the shard's top degree.
    """
    n, first_part, store_members = args
    fact = factorial(n)
    out: dict[int, list] = {}
    top = -1
    for lam in _shard_partitions(n, first_part):
        d, rem = divmod(fact, hook_product(lam))
        if rem:
            raise ArithmeticError(f"hook product does not divide {n}! for {lam}")
        entry = out.get(d)
        if entry is None:
            entry = [0, []]
            out[d] = entry
        entry[0] += 1
        if store_members:
            entry[1].append(lam)
        elif d >= top:
            if d > top:
                top = d
                out[d][1] = []
            out[d][1].append(lam)
    if not store_members:
        for d, entry in out.items():
            if d != top:
                entry[1] = []
    return out


def _an_shard(args: tuple[int, int, bool]) -> dict:
    """Alternating-group degrees over one shard, one conjugacy rep per pair.

    Returns degree -> [character count, members, splits].
    """
    n, first_part, store_members = args
    fact = factorial(n)
    out: dict[int, list] = {}
    top = -1
    for lam in _shard_partitions(n, first_part):
        conj = conjugate(lam)
        if lam < conj:
            continue
        d, rem = divmod(fact, hook_product(lam))
        if rem:
            raise ArithmeticError(f"hook product does not divide {n}! for {lam}")
        if lam == conj:
            half, odd = divmod(d, 2)
            if odd:
                raise ArithmeticError(f"odd degree {d} for self-conjugate {lam}")
            deg, chars = half, 2
        else:
            deg, chars = d, 1
        entry = out.get(deg)
        if entry is None:
            entry = [0, [], []]
            out[deg] = entry
        entry[0] += chars
        keep = store_members
        if not store_members and deg >= top:
            if deg > top:
                top = deg
                out[deg][1] = []
                out[deg][2] = []
            keep = True
        if keep:
            entry[1].append(lam)
            entry[2].append(chars)
    if not store_members:
        for deg, entry in out.items():
            if deg != top:
                entry[1] = []
                entry[2] = []
    return out


def _merge_shards(results, with_splits: bool) -> dict:
    merged: dict[int, list] = {}
    for shard in results:
        for deg, entry in shard.items():
            tgt = merged.get(deg)
            if tgt is None:
                merged[deg] = entry
            else:
                tgt[0] += entry[0]
                tgt[1].extend(entry[1])
                if with_splits:
                    tgt[2].extend(entry[2])
    return merged


def _build_spectrum(n: int, group: str, threads: int, store_members: bool) -> DegreeSpectrum:
    worker = _sn_shard if group == "S" else _an_shard
    with_splits = group == "A"
    tasks = [(n, m, store_members) for m in range(n, 0, -1)]
    if threads > 1 and n >= 18:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(worker, tasks, chunksize=4))
    else:
        results = [worker(t) for t in tasks]
    merged = _merge_shards(results, with_splits)

    top_degree = max(merged)
    classes = []
    for deg in sorted(merged, reverse=True):
        entry = merged[deg]
        keep = store_members or deg == top_degree
        if with_splits:
            pairs = sorted(zip(entry[1], entry[2]), reverse=True) if keep else []
            members = tuple(p for p, _s in pairs)
            splits = tuple(s for _p, s in pairs)
        else:
            members = tuple(sorted(entry[1], reverse=True)) if keep else ()
            splits = ()
        classes.append(DegreeClass(deg, entry[0], members, splits))
    spec = DegreeSpectrum(n, group, tuple(classes), store_members)
    return _check_mass(spec)


def spectrum_sn(
    n: int,
    *,
    threads: int = 1,
    max_n: int = DEFAULT_MAX_N,
    member_cap: int = MEMBER_CAP,
) -> DegreeSpectrum:
    """Complete exact degree spectrum of the symmetric group on n points.

    Member partitions are stored for every class when n <= member_cap and
    only for the top class above it.  The result is deterministic and
    independent of the worker count.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured maximum {max_n}")
    return _build_spectrum(n, "S", threads, store_members=n <= member_cap)


def spectrum_an(
    n: int,
    *,
    threads: int = 1,
    max_n: int = DEFAULT_MAX_N,
    member_cap: int = MEMBER_CAP,
) -> DegreeSpectrum:
    """Complete exact degree spectrum of the alternating group on n points."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured maximum {max_n}")
    return _build_spectrum(n, "A", threads, store_members=n <= member_cap)


_memo: dict[tuple[str, int], DegreeSpectrum] = {}


def cached_spectrum(group: str, n: int) -> DegreeSpectrum:
    """Sequentially computed spectrum, memoized per (group, n)."""
    key = (group, n)
    spec = _memo.get(key)
    if spec is None:
        spec = spectrum_sn(n) if group == "S" else spectrum_an(n)
        _memo[key] = spec
    return spec


def clear_spectrum_cache() -> None:
    _memo.clear()


def epsilon(spec: DegreeSpectrum) -> Fraction:
    """Sum of squared degrees strictly below the top degree, over its square."""
    b2 = spec.b * spec.b
    return Fraction(spec.group_order() - spec.m1_size * b2, b2)


def spectrum_xy(n: int) -> tuple[int, int]:
    """x = number of symmetric-group characters of degree above b(A_n);
    y = multiplicity of b(A_n) as a symmetric-group degree."""
    b_a = cached_spectrum("A", n).b
    x = 0
    y = 0
    for c in cached_spectrum("S", n).classes:
        if c.degree > b_a:
            x += c.size
        elif c.degree == b_a:
            y = c.size
            break
        else:
            break
    return x, y


def verify_theorem2(n: int, *, override_domain: bool = False) -> VerificationReport:
    """Squared degrees below b(S_n) dominate twice its square (stated n >= 7)."""
    if n < 7 and not override_domain:
        raise ValueError("theorem2 is stated for n >= 7 (use override to force)")
    t0 = time.perf_counter()
    spec = cached_spectrum("S", n)
    left = spec.sum_squares_below_top()
    right = 2 * spec.b * spec.b
    ineq = Inequality("below-top-sum-exceeds-twice-square", left, ">", right)
    if n < 7:
        status = INFORMATIONAL
    else:
        status = PASS if ineq.holds() else FAIL
    return VerificationReport(
        check="theorem2",
        n=n,
        status=status,
        inequalities=(ineq,),
        witnesses=spec.maximizers,
        notes=(f"b={spec.b}", f"|M_1|={spec.m1_size}"),
        elapsed=time.perf_counter() - t0,
    )


def verify_theorem1(n: int, *, override_domain: bool = False) -> VerificationReport:
    """Squared degrees below b(A_n) dominate its square (stated n >= 5)."""
    if n < 5 and not override_domain:
        raise ValueError("theorem1 is stated for n >= 5 (use override to force)")
    t0 = time.perf_counter()
    spec = cached_spectrum("A", n)
    left = spec.sum_squares_below_top()
    right = spec.b * spec.b
    ineq = Inequality("below-top-sum-exceeds-square", left, ">", right)
    if n < 5:
        status = INFORMATIONAL
    else:
        status = PASS if ineq.holds() else FAIL
    return VerificationReport(
        check="theorem1",
        n=n,
        status=status,
        inequalities=(ineq,),
        witnesses=spec.maximizers,
        notes=(f"b={spec.b}", f"multiplicity={spec.m1_size}"),
        elapsed=time.perf_counter() - t0,
    )


def sandwich_check(n: int) -> VerificationReport:
    """b(S_n)/2 < b(A_n) <= b(S_n); whether equality holds is informational."""
    t0 = time.perf_counter()
    b_s = cached_spectrum("S", n).b
    b_a = cached_spectrum("A", n).b
    ineqs = (
        Inequality("twice-alternating-exceeds-symmetric", 2 * b_a, ">", b_s),
        Inequality("alternating-at-most-symmetric", b_a, "<=", b_s),
    )
    status = PASS if all(q.holds() for q in ineqs) else FAIL
    return VerificationReport(
        check="sandwich",
        n=n,
        status=status,
        inequalities=ineqs,
        notes=(f"equality={'true' if b_a == b_s else 'false'}",),
        elapsed=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class BranchDecomposition:
    """Restriction-induction decomposition of one character.

    Restricting to the point stabilizer and inducing back yields the source
    character with multiplicity equal to its number of removable corners,
    plus every single-node-move partition once.
    """

    source: Partition
    self_multiplicity: int
    constituents: tuple[Partition, ...]

    def constituent_count(self) -> int:
        return 1 + len(self.constituents)


def branch_decompose(parts: Partition) -> BranchDecomposition:
    moves = tuple(moved for _i, _j, moved in iter_moves(parts))
    return BranchDecomposition(
        source=parts,
        self_multiplicity=len(removable_nodes(parts)),
        constituents=moves,
    )


def _scan_degrees(parts: Partition) -> dict[Partition, int]:
    """Exact degrees of every single-node move of ``parts``."""
    n = sum(parts)
    fact = factorial(n)
    out: dict[Partition, int] = {}
    for _i, _j, moved in iter_moves(parts):
        out[moved] = fact // hook_product(moved)
    return out


def induced_bound_check(n: int) -> VerificationReport:
    """Induced-character mass below the relevant top degree, per maximizer.

    The symmetric branch compares the exact constituent mass against twice
    the squared top degree; its stated hypotheses are n >= 50 with at most
    31 maximizers.  When the alternating top degree is smaller and realized
    by the second symmetric degree with a unique maximizer, the alternating
    branch does the same at that degree (stated n >= 43, |M_2| <= 19).
    Outside all hypotheses the outcome is informational.
    """
    if n < 5:
        raise ValueError("induced bound check needs n >= 5")
    t0 = time.perf_counter()
    s_spec = cached_spectrum("S", n)
    b_s = s_spec.b
    root2n = sqrt_upper(2 * n)
    notes = []
    witnesses = []

    s_records = []
    for lam in s_spec.maximizers:
        mass = sum(d * d for d in _scan_degrees(lam).values() if d < b_s)
        s_records.append(
            Inequality(f"induced-mass[{format_partition(lam)}]", mass, ">", 2 * b_s * b_s)
        )
        witnesses.append(lam)
    analytic_s = clamped_square_over(n - root2n - 30, 2 * n) * b_s * b_s
    notes.append(f"symmetric-analytic-context={decimal_str(analytic_s)}")
    hyp_s = n >= 50 and s_spec.m1_size <= 31
    notes.append(f"symmetric-hypotheses={'active' if hyp_s else 'inactive'}")

    a_records = []
    hyp_a = False
    b_a = cached_spectrum("A", n).b
    reduced = (
        b_a < b_s
        and s_spec.m1_size == 1
        and len(s_spec.classes) > 1
        and s_spec.classes[1].degree == b_a
    )
    if reduced:
        m2 = s_spec.classes[1]
        for mu in m2.members:
            mass = sum(d * d for d in _scan_degrees(mu).values() if d < b_a)
            a_records.append(
                Inequality(f"induced-mass[{format_partition(mu)}]", mass, ">", 2 * b_a * b_a)
            )
            witnesses.append(mu)
        analytic_a = clamped_square_over(n - root2n - 20, 2 * n) * b_a * b_a
        notes.append(f"alternating-analytic-context={decimal_str(analytic_a)}")
        hyp_a = n >= 43 and m2.size <= 19
        notes.append(f"alternating-hypotheses={'active' if hyp_a else 'inactive'}")
    else:
        notes.append("alternating-branch=not-applicable")

    decisive = []
    ok = True
    if hyp_s:
        held = [q for q in s_records if q.holds()]
        decisive.extend(held if held else s_records)
        ok = ok and bool(held)
    if hyp_a:
        held = [q for q in a_records if q.holds()]
        decisive.extend(held if held else a_records)
        ok = ok and bool(held)
    if hyp_s or hyp_a:
        status = PASS if ok else FAIL
        records = tuple(decisive)
    else:
        status = INFORMATIONAL
        records = tuple(s_records + a_records)
    notes.extend(f"observed: {q} -> {q.holds()}" for q in s_records + a_records)
    return VerificationReport(
        check="induced-bound",
        n=n,
        status=status,
        inequalities=records,
        witnesses=tuple(witnesses),
        notes=tuple(notes),
        elapsed=time.perf_counter() - t0,
    )


def _symmetric_scan_records(spec: DegreeSpectrum, target: int) -> list[Inequality]:
    """Per-maximizer single-node-move mass against ``target``."""
    b = spec.b
    records = []
    for lam in spec.maximizers:
        mass = sum(d * d for d in _scan_degrees(lam).values() if d != b)
        records.append(Inequality(f"move-mass[{format_partition(lam)}]", mass, ">", target))
    return records


def move_scan_verify(n: int, group: str) -> VerificationReport:
    """Prove the dominance inequalities from single-node moves alone.

    For the symmetric group: the moved-partition mass around any maximizer,
    excluding moves of top degree, must exceed twice the squared top degree.
    For the alternating group with b(A_n) < b(S_n) the argument reduces to a
    unique self-conjugate maximizer and a two-case neighborhood analysis;
    with equal top degrees the symmetric scan is reused at the stronger
    target.  A miss while the full-spectrum theorem holds is reported as
    inconclusive, not as failure.
    """
    group = group.upper()
    if group not in ("S", "A"):
        raise ValueError("group must be 'S' or 'A'")
    if group == "S" and n < 7:
        raise ValueError("symmetric move scan is stated for n >= 7")
    if group == "A" and n < 5:
        raise ValueError("alternating move scan is stated for n >= 5")
    t0 = time.perf_counter()
    s_spec = cached_spectrum("S", n)
    b_s = s_spec.b
    notes = []
    witnesses = tuple(s_spec.maximizers)

    if group == "S":
        records = _symmetric_scan_records(s_spec, 2 * b_s * b_s)
        fallback_holds = verify_theorem2(n).passed
    else:
        a_spec = cached_spectrum("A", n)
        b_a = a_spec.b
        if b_a == b_s:
            notes.append("equal-top-degrees: symmetric scan at twice the squared degree")
            records = _symmetric_scan_records(s_spec, 2 * b_s * b_s)
        elif s_spec.m1_size >= 2:
            # every maximizer is self-conjugate, so four characters of
            # degree b_s/2 already dominate
            notes.append("multiple-self-conjugate-maximizers")
            records = [Inequality("four-split-characters", b_s * b_s, ">", b_a * b_a)]
        elif len(s_spec.classes) > 1 and s_spec.classes[1].degree > b_a:
            b_2 = s_spec.classes[1].degree
            notes.append("intermediate-self-conjugate-degree")
            records = [
                Inequality(
                    "split-characters-mass",
                    Fraction(b_s * b_s, 2) + Fraction(b_2 * b_2, 2),
                    ">",
                    b_a * b_a,
                )
            ]
        else:
            lam = s_spec.maximizers[0]
            up = lambda_up(lam)
            dn = lambda_dn(lam)
            if up is None or dn is None:
                raise ArithmeticError(f"maximizer {lam} lacks a neighbor move")
            fact = factorial(n)
            d_up = fact // hook_product(up)
            d_dn = fact // hook_product(dn)
            notes.append(
                f"neighbors: up={format_partition(up)} degree {d_up}, "
                f"dn={format_partition(dn)} degree {d_dn}"
            )
            if b_a != d_up and b_a != d_dn:
                notes.append("case=1 (top alternating degree away from both neighbors)")
                records = [
                    Inequality(
                        "neighbor-squares-exceed-half",
                        d_up * d_up + d_dn * d_dn,
                        ">",
                        Fraction(b_s * b_s, 2),
                    )
                ]
            else:
                degrees = _scan_degrees(lam)
                top = max(degrees.values())
                mass = sum(d * d for d in degrees.values() if d < top)
                notes.append(f"case=2 (top scanned degree {top}, b(A)={b_a})")
                records = [Inequality("sub-top-move-mass", mass, ">", top * top)]
        fallback_holds = verify_theorem1(n).passed

    held = [q for q in records if q.holds()]
    if held:
        status = PASS
        decisive = tuple(held)
    else:
        status = INCONCLUSIVE if fallback_holds else FAIL
        decisive = tuple(records)
        if status == INCONCLUSIVE:
            notes.append("neighborhood scan missed; full-spectrum statement holds at this n")
    notes.extend(f"observed: {q} -> {q.holds()}" for q in records)
    return VerificationReport(
        check=f"move-scan-{group.lower()}",
        n=n,
        status=status,
        inequalities=decisive,
        witnesses=witnesses,
        notes=tuple(notes),
        elapsed=time.perf_counter() - t0,
    )


def epsilon_lower_bounds(n: int) -> VerificationReport:
    """The exact squared-degree excess dominates its closed-form lower bounds.

    Symmetric group: excess >= |M_1|/16 and >= (n - sqrt(2n) - (|M_1|-1))^2 / 2n.
    Alternating group with smaller top degree: excess >= x/2, >= (y-4x)/32 and
    >= (n - sqrt(2n) - 2x - (y-1))^2 / 2n; with equal top degrees, excess is
    at least half the symmetric one.  Square roots enter through certified
    rational upper enclosures, so every recorded bound is weakened, never
    strengthened.
    """
    if n < 5:
        raise ValueError("epsilon bounds need n >= 5")
    t0 = time.perf_counter()
    s_spec = cached_spectrum("S", n)
    a_spec = cached_spectrum("A", n)
    eps_s = epsilon(s_spec)
    eps_a = epsilon(a_spec)
    m1 = s_spec.m1_size
    root2n = sqrt_upper(2 * n)
    ineqs = [
        Inequality("s-multiplicity-bound", eps_s, ">=", Fraction(m1, 16)),
        Inequality(
            "s-induction-bound",
            eps_s,
            ">=",
            clamped_square_over(n - root2n - (m1 - 1), 2 * n),
        ),
    ]
    notes = [f"epsilon_s={eps_s}", f"epsilon_a={eps_a}"]
    if a_spec.b == s_spec.b:
        ineqs.append(Inequality("a-half-of-symmetric", eps_a, ">=", eps_s / 2))
        notes.append("equal-top-degrees")
    else:
        x, y = spectrum_xy(n)
        notes.append(f"x={x}")
        notes.append(f"y={y}")
        ineqs.extend(
            [
                Inequality("a-split-count-bound", eps_a, ">=", Fraction(x, 2)),
                Inequality(
                    "a-near-top-bound", eps_a, ">=", max(Fraction(y - 4 * x, 32), Fraction(0))
                ),
                Inequality(
                    "a-induction-bound",
                    eps_a,
                    ">=",
                    clamped_square_over(n - root2n - 2 * x - (y - 1), 2 * n),
                ),
            ]
        )
    status = PASS if all(q.holds() for q in ineqs) else FAIL
    return VerificationReport(
        check="epsilon-bounds",
        n=n,
        status=status,
        inequalities=tuple(ineqs),
        witnesses=s_spec.maximizers,
        notes=tuple(notes),
        elapsed=time.perf_counter() - t0,
    )
