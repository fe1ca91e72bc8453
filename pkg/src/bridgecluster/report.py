"""The ``verify`` suite: every exhaustive check, one row per fraction."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import Ratio, cf_expand, reduced_fractions
from .cluster import cluster_variable
from .errors import InvariantError
from .knot import verify_fraction
from .paths import cluster_via_paths, f_recursion_check, mirror_f_check
from .triangle import build

SUITES = (
    "alexander",
    "symmetry",
    "mirror_invariance",
    "paths_vs_mutation",
    "mirror_f",
    "recursions",
)


@dataclass(frozen=True)
class FractionReport:
    fraction: str
    cf: str
    # None marks a check that does not apply (symmetry for even q)
    results: tuple[bool | None, ...]
    details: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(r is not False for r in self.results)


def check_fraction(f: Ratio) -> FractionReport:
    cf = cf_expand(f)
    details = []
    try:
        row = verify_fraction(f)
        alex = (row.match, row.symmetric, row.mirror_invariant)
        if not row.match:
            details.append(f"alexander: specialized {row.specialized} != skein {row.oracle}")
        if row.symmetric is False:
            details.append(f"symmetry: {row.specialized} is not symmetric")
        if row.mirror_invariant is False:
            details.append(f"mirror_invariance: Delta({f}) != Delta({f.complement()})")
    except InvariantError as exc:
        alex = (False, None, None)
        details.append(f"alexander: {exc}")
    try:
        by_paths = cluster_via_paths(build(cf))
        by_mutation = cluster_variable(cf)
        cluster_ok = by_paths == by_mutation
        if not cluster_ok:
            details.append(f"paths_vs_mutation: {by_paths.to_fraction_text()} != {by_mutation.to_fraction_text()}")
    except InvariantError as exc:
        cluster_ok = False
        details.append(f"paths_vs_mutation: {exc}")
    mirror_ok = mirror_f_check(cf)
    if not mirror_ok:
        details.append("mirror_f: identity fails")
    rec_ok = f_recursion_check(cf)
    if not rec_ok:
        details.append("recursions: identity fails")
    return FractionReport(str(f), str(cf), alex + (cluster_ok, mirror_ok, rec_ok), tuple(details))


@dataclass
class VerifyReport:
    q_max: int
    rows: list[FractionReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def counts(self) -> list[tuple[str, int, int, int]]:
        """``(suite, passed, failed, not applicable)``."""
        out = []
        for k, name in enumerate(SUITES):
            col = [r.results[k] for r in self.rows]
            out.append((name, col.count(True), col.count(False), col.count(None)))
        return out

    def failures(self) -> list[FractionReport]:
        return [r for r in self.rows if not r.ok]

    def to_text(self) -> str:
        lines = [f"verify: {len(self.rows)} fractions with 2 <= q <= {self.q_max}", ""]
        lines.append(f"{'suite':<20}{'pass':>8}{'fail':>8}{'n/a':>8}")
        for name, good, bad, na in self.counts():
            lines.append(f"{name:<20}{good:>8}{bad:>8}{na:>8}")
        fails = self.failures()
        if fails:
            lines.append("")
            lines.append("failures:")
            for r in fails:
                for d in r.details or ("unknown failure",):
                    lines.append(f"  {r.fraction} {r.cf}: {d}")
        lines.append("")
        lines.append("RESULT: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        lines = [r"\begin{tabular}{lrrr}", r"suite & pass & fail & n/a \\ \hline"]
        for name, good, bad, na in self.counts():
            lines.append(f"{name.replace('_', chr(92) + '_')} & {good} & {bad} & {na} \\\\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "q_max": self.q_max,
            "fractions": len(self.rows),
            "ok": self.ok,
            "suites": {name: {"pass": g, "fail": b, "n/a": na} for name, g, b, na in self.counts()},
            "failures": [
                {"fraction": r.fraction, "cf": r.cf, "details": list(r.details)} for r in self.failures()
            ],
        }


def run_verify(q_max: int, jobs: int = 1) -> VerifyReport:
    if q_max < 2:
        raise ValueError("--q-max must be at least 2")
    if jobs < 1:
        raise ValueError("--jobs must be at least 1")
    fractions = list(reduced_fractions(q_max))
    if jobs == 1:
        rows = [check_fraction(f) for f in fractions]
    else:
        # each worker keeps its own skein memo; map preserves input order
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(check_fraction, fractions, chunksize=4))
    return VerifyReport(q_max, rows)
