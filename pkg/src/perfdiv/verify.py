"""Theorem checkers, corpus census, open-problem hunters and JSON reports.

Every corpus-level checker runs the same per-graph analysis
(:func:`analyze_graph`) and reduces the resulting fact records into one or
more :class:`TheoremReport` objects. Workers only see graph6 strings, so the
analysis fans out over a process pool without shared state.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable

import numpy as np

from ._version import __version__
from .catalog import pattern
from .corpus import Corpus, corpus_of, corpus_upto, graph6_corpus
from .divisibility import (
    PD_CAP,
    PWD_CAP,
    WEIGHTED_CAP,
    Certificate,
    certify_minimal,
    is_divisible,
    perfect_division_table,
    two_division_table,
)
from .errors import CapabilityError, ParseError, PreconditionError
from .formats import graph6, parse_graph6
from .graph import Graph, is_connected, members, neighborhood
from .invariants import (
    chromatic_number,
    clique_number,
    independence_number,
    is_k_critical,
    subset_clique_table,
)
from .perfection import has_odd_antihole, subset_perfection_table
from .structure import (
    basins,
    clique_cutsets,
    cliques,
    homogeneous_sets,
    induced_free,
    simplicial_vertices,
)

log = logging.getLogger(__name__)

THEOREM_IDS = (
    "T5_MNPD_PROPS",
    "T9_MN2D_PROPS",
    "T3_HOMOG",
    "T4_CUTSET",
    "L6_TRIANGLEFREE",
    "L11_CLAWFREE_ANTIHOLE",
    "T10_4CRITICAL",
    "CHROMATIC_BOUNDS",
    "T2_EQUIVALENCE_EMPIRICAL",
)
HUNT_IDS = ("OPEN_PD_VS_PWD", "OPEN_VERTEX_IN_A")
PROBLEMS = {"PD_vs_PWD": "OPEN_PD_VS_PWD", "vertex_in_A": "OPEN_VERTEX_IN_A"}

CRITICALITY_NOTE = ("'4-critical' is read as vertex-criticality: chi(G) = 4 and "
                    "chi(G - v) <= 3 for every vertex v")


@dataclass
class TheoremReport:
    theorem_id: str
    universe: dict
    checked: int = 0
    vacuous: bool = True
    violations: list[dict] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=list)
    wall_time_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theoremId": self.theorem_id,
            "universe": self.universe,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "violations": self.violations,
            "assumptions": self.assumptions,
            "wallTimeMs": self.wall_time_ms,
        }


def _violation(g6: str, detail: str) -> dict:
    return {"graph6": g6, "detail": detail}


# ---------------------------------------------------------------- single graphs

def mnpd_property_violations(G: Graph) -> tuple[list[str], dict]:
    """Evaluate the five MNPD structure items literally; returns (failures, observations)."""
    omega = clique_number(G)
    out = []
    if basins(G):
        out.append(f"item 1: nonempty basin {members(basins(G)[0].vertices)}")
    simp = simplicial_vertices(G)
    if simp:
        out.append(f"item 1: simplicial vertices {members(simp)}")
    for v in range(G.n):
        N = G.adj[v]
        if not _has_split_neighbourhood(G, N, omega):
            out.append(f"item 2: no Y in N({v}) with alpha(Y) >= 2 and omega(N - Y) = {omega - 1}")
    out += _max_clique_item(G, omega, "item 3")
    out += _neighbourhood_size_item(G, omega, "item 4")
    for v in range(G.n):
        if G.degree(v) < omega + 1:
            out.append(f"item 5: vertex {v} has degree {G.degree(v)} < {omega + 1}")
    obs = {"omega": omega, "min_degree": min(G.degrees()), "n": G.n}
    return out, obs


def mn2d_property_violations(G: Graph) -> tuple[list[str], dict]:
    omega = clique_number(G)
    out = []
    if basins(G):
        out.append(f"item 1: nonempty basin {members(basins(G)[0].vertices)}")
    out += _max_clique_item(G, omega, "item 2")
    out += _neighbourhood_size_item(G, omega, "item 3")
    for v in range(G.n):
        if G.degree(v) < 2 * omega - 2:
            out.append(f"item 4: vertex {v} has degree {G.degree(v)} < {2 * omega - 2}")
    obs = {"omega": omega, "min_degree": min(G.degrees()), "n": G.n}
    return out, obs


def _has_split_neighbourhood(G: Graph, N: int, omega: int) -> bool:
    Y = N
    while Y:
        if Y.bit_count() >= 2 and clique_number(G, S=N & ~Y) == omega - 1 \
                and independence_number(G, Y) >= 2:
            return True
        Y = (Y - 1) & N
    return False


def _max_clique_item(G: Graph, omega: int, label: str) -> list[str]:
    maximum = [K for K in cliques(G) if K.bit_count() == omega]
    out = []
    for v in range(G.n):
        if not any(K >> v & 1 and G.adj[v] & ~K for K in maximum):
            out.append(f"{label}: no maximum clique K with {v} in K and N({v}) not inside K")
    return out


def _neighbourhood_size_item(G: Graph, omega: int, label: str) -> list[str]:
    omegas = subset_clique_table(G, cap=G.n)
    for X in range(1, 1 << G.n):
        if neighborhood(G, X).bit_count() < omega - omegas[X]:
            return [f"{label}: |N(X)| < omega - omega(X) for X = {members(X)}"]
    return []


def check_mnpd_properties(G: Graph, certificate: Certificate | None = None) -> TheoremReport:
    """Check the MNPD structure theorem on a certified MNPD graph."""
    start = time.perf_counter()
    cert = certificate if certificate is not None else certify_minimal(G, "mnpd")
    if cert.claim != "MNPD" or not cert.verdict:
        raise PreconditionError("subject is not certified MNPD")
    g6 = graph6(G)
    failures, obs = mnpd_property_violations(G)
    return TheoremReport(
        "T5_MNPD_PROPS", {"description": f"single graph {g6}", **obs}, 1, False,
        [_violation(g6, d) for d in failures], [],
        round((time.perf_counter() - start) * 1000, 3))


def check_mn2d_properties(G: Graph, certificate: Certificate | None = None) -> TheoremReport:
    """Check the MN2D structure theorem on a certified MN2D graph."""
    start = time.perf_counter()
    cert = certificate if certificate is not None else certify_minimal(G, "mn2d")
    if cert.claim != "MN2D" or not cert.verdict:
        raise PreconditionError("subject is not certified MN2D")
    g6 = graph6(G)
    failures, obs = mn2d_property_violations(G)
    return TheoremReport(
        "T9_MN2D_PROPS", {"description": f"single graph {g6}", **obs}, 1, False,
        [_violation(g6, d) for d in failures], [],
        round((time.perf_counter() - start) * 1000, 3))


# ------------------------------------------------------------ per-graph facts

@dataclass(frozen=True)
class Options:
    pd_cap: int = PD_CAP
    weighted_cap: int = WEIGHTED_CAP
    pwd_cap: int = PWD_CAP
    weight_bound: int = 3
    pwd_max_n: int = 7
    hunt_max_n: int = 16


def _uncovered_vertices(G: Graph, perf: np.ndarray, omega: np.ndarray) -> list[int]:
    V = G.full
    A = np.arange(1 << G.n, dtype=np.int64)
    valid = perf & (omega[V ^ A] < omega[V])
    cover = int(np.bitwise_or.reduce(A[valid])) if valid.any() else 0
    return members(V & ~cover)


def analyze_graph(g6: str, needs: frozenset, opts: Options = Options()) -> dict:
    """Compute the facts the selected checkers need for one graph."""
    G = parse_graph6(g6)
    f: dict = {"graph6": g6, "n": G.n}
    if G.n > opts.pd_cap:
        f["skipped"] = f"exhaustive cap {opts.pd_cap} < n = {G.n}"
        return f
    V = G.full
    perf = subset_perfection_table(G, cap=opts.pd_cap)
    omega = subset_clique_table(G, cap=opts.pd_cap)
    pd_has = perfect_division_table(perf, omega)
    proper_ok = bool(np.delete(pd_has, [0, V]).all())
    f["pd"] = bool(pd_has.all())
    f["mnpd"] = not pd_has[V] and proper_ok
    f["omega"] = int(omega[V])
    f["triangle_free"] = f["omega"] <= 2
    f["connected"] = is_connected(G)
    if "two" in needs or "chromatic" in needs:
        two_has = two_division_table(omega)
        f["two_div"] = bool(two_has.all())
        f["mn2d"] = not two_has[V] and bool(np.delete(two_has, [0, V]).all())
    if "chromatic" in needs:
        f["chi"] = chromatic_number(G)
        if f["triangle_free"]:
            f["critical4"] = f["chi"] == 4 and is_k_critical(G, 4)
    if f["mnpd"] and ("structural" in needs or "t5" in needs):
        f["p2p4_free"] = induced_free(G, "p2+p4").free
        f["diamond_free"] = induced_free(G, "diamond").free
        f["2p3_free"] = induced_free(G, "2p3").free
        f["claw_free"] = induced_free(G, "claw").free
        f["homogeneous"] = [members(X) for X in homogeneous_sets(G, "any")]
        f["homogeneous_2clique"] = [members(X) for X in homogeneous_sets(G, "two_clique")]
        f["clique_cutset"] = ([members(X) for X in clique_cutsets(G, "minimum")]
                              if f["connected"] else [])
        if f["claw_free"]:
            bad = []
            for v in range(G.n):
                M = neighborhood(G, 1 << v, "non")
                if M.bit_count() >= 7:
                    C = has_odd_antihole(G, M, min_length=7)
                    if C is not None:
                        bad.append([v, members(C)])
            f["antihole_in_M"] = bad
    if f["mnpd"] and "t5" in needs:
        f["t5_failures"], f["t5_obs"] = mnpd_property_violations(G)
    if f.get("mn2d") and "t9" in needs:
        f["t9_failures"], f["t9_obs"] = mn2d_property_violations(G)
    if f["pd"] and "pwd" in needs and G.n <= opts.hunt_max_n:
        if G.n <= opts.weighted_cap:
            cert = is_divisible(G, "h2", weighted_cap=opts.weighted_cap)
            f["h2pd"] = cert.verdict
            if not cert.verdict:
                f["h2_certificate"] = cert.to_dict()
        if G.n <= min(opts.pwd_max_n, opts.pwd_cap):
            cert = is_divisible(G, "pwd", weight_bound=opts.weight_bound, pwd_cap=opts.pwd_cap)
            f["pwd"] = cert.verdict
            if not cert.verdict:
                f["pwd_certificate"] = cert.to_dict()
    if f["mnpd"] and "pwd" in needs:
        f["homogeneous_2clique"] = [members(X) for X in homogeneous_sets(G, "two_clique")]
    if f["pd"] and "vertex_in_a" in needs and G.n <= opts.hunt_max_n:
        f["uncovered"] = _uncovered_vertices(G, perf, omega)
    return f


_NEEDS = {
    "T5_MNPD_PROPS": {"t5"},
    "T9_MN2D_PROPS": {"two", "t9"},
    "T3_HOMOG": {"structural"},
    "T4_CUTSET": {"structural"},
    "L6_TRIANGLEFREE": {"structural"},
    "L11_CLAWFREE_ANTIHOLE": {"structural"},
    "T10_4CRITICAL": {"chromatic"},
    "CHROMATIC_BOUNDS": {"chromatic"},
    "T2_EQUIVALENCE_EMPIRICAL": {"pwd"},
    "OPEN_PD_VS_PWD": {"pwd"},
    "OPEN_VERTEX_IN_A": {"vertex_in_a"},
}


def _analyze_star(args):
    return analyze_graph(*args)


def collect_facts(corpus: Iterable[Graph], ids: Iterable[str], opts: Options = Options(),
                  jobs: int = 1) -> list[dict]:
    needs = frozenset().union(*(_NEEDS[i] for i in ids))
    tasks = [(graph6(G), needs, opts) for G in corpus]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_analyze_star, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [analyze_graph(*t) for t in tasks]


# ------------------------------------------------------------------- reducers

def _universe(description: str, facts: list[dict], **extra) -> dict:
    done = [f for f in facts if "skipped" not in f]
    u = {
        "description": description,
        "members": len(facts),
        "skipped": len(facts) - len(done),
        "mnpd_members": sum(bool(f.get("mnpd")) for f in done),
    }
    u.update(extra)
    return u


def _checked(facts):
    return sum("skipped" not in f for f in facts)


def _reduce(theorem_id: str, facts: list[dict], description: str) -> TheoremReport:
    done = [f for f in facts if "skipped" not in f]
    for f in facts:
        if "skipped" in f:
            log.warning("skipped %s for %s: %s", f["graph6"], theorem_id, f["skipped"])
    mnpd = [f for f in done if f["mnpd"]]
    viol: list[dict] = []
    assumptions: list[str] = []
    extra: dict = {}
    applicable = 0

    if theorem_id == "T5_MNPD_PROPS":
        for f in mnpd:
            applicable += 1
            viol += [_violation(f["graph6"], d) for d in f["t5_failures"]]
        extra["min_degrees"] = {f["graph6"]: f["t5_obs"]["min_degree"] for f in mnpd}
    elif theorem_id == "T9_MN2D_PROPS":
        for f in done:
            if f.get("mn2d"):
                applicable += 1
                viol += [_violation(f["graph6"], d) for d in f["t9_failures"]]
        extra["mn2d_members"] = applicable
    elif theorem_id == "T3_HOMOG":
        for f in mnpd:
            if f["p2p4_free"] or f["diamond_free"]:
                applicable += 1
                if f["homogeneous"]:
                    viol.append(_violation(f["graph6"], f"homogeneous set {f['homogeneous'][0]}"))
        extra["mnpd_with_homogeneous_set"] = sum(bool(f["homogeneous"]) for f in mnpd)
    elif theorem_id == "T4_CUTSET":
        for f in mnpd:
            if f["2p3_free"] or f["claw_free"]:
                applicable += 1
                if f["clique_cutset"]:
                    viol.append(_violation(f["graph6"], f"clique cutset {f['clique_cutset'][0]}"))
        # census for the general conjecture; informational, never a violation
        extra["mnpd_with_clique_cutset"] = sum(bool(f["clique_cutset"]) for f in mnpd)
    elif theorem_id == "L6_TRIANGLEFREE":
        for f in mnpd:
            if f["triangle_free"]:
                applicable += 1
                if f["clique_cutset"]:
                    viol.append(_violation(f["graph6"], f"clique cutset {f['clique_cutset'][0]}"))
    elif theorem_id == "L11_CLAWFREE_ANTIHOLE":
        for f in mnpd:
            if f["claw_free"]:
                applicable += 1
                for v, C in f["antihole_in_M"]:
                    viol.append(_violation(f["graph6"], f"odd antihole {C} inside M({v})"))
    elif theorem_id == "CHROMATIC_BOUNDS":
        for f in done:
            applicable += 1
            chi, om = f["chi"], f["omega"]
            if f["two_div"] and chi > 2 ** (om - 1):
                viol.append(_violation(f["graph6"], f"2-divisible with chi {chi} > 2^(omega-1) = {2 ** (om - 1)}"))
            if f["pd"] and chi > comb(om + 1, 2):
                viol.append(_violation(f["graph6"], f"PD with chi {chi} > C(omega+1, 2) = {comb(om + 1, 2)}"))
            if chi <= om + 1 and not f["pd"]:
                viol.append(_violation(f["graph6"], f"chi {chi} <= omega + 1 but not PD"))
        extra["two_divisible"] = sum(f["two_div"] for f in done)
        extra["perfectly_divisible"] = sum(f["pd"] for f in done)
        extra["vizing_bounded"] = sum(f["chi"] <= f["omega"] + 1 for f in done)
    elif theorem_id == "T10_4CRITICAL":
        tf = [f for f in done if f["triangle_free"]]
        for f in tf:
            if f["mnpd"] or f["critical4"]:
                applicable += 1
            if f["mnpd"] != f["critical4"]:
                viol.append(_violation(f["graph6"], f"MNPD = {f['mnpd']} but 4-critical = {f['critical4']}"))
        extra["triangle_free_members"] = len(tf)
        extra["mnpd_triangle_free"] = sum(f["mnpd"] for f in tf)
        extra["four_critical_triangle_free"] = sum(f["critical4"] for f in tf)
        assumptions.append(CRITICALITY_NOTE)
    elif theorem_id == "T2_EQUIVALENCE_EMPIRICAL":
        homog2 = [f for f in mnpd if f["homogeneous_2clique"]]
        pd = [f for f in done if f["pd"] and ("h2pd" in f or "pwd" in f)]
        h2_fail = [f for f in pd if f.get("h2pd") is False]
        pwd_fail = [f for f in pd if f.get("pwd") is False]
        applicable = len(pd) + len(mnpd)
        if not homog2:
            for f in h2_fail:
                viol.append(_violation(f["graph6"], "PD but not H2-PD while no MNPD member has a homogeneous 2-clique"))
            for f in pwd_fail:
                viol.append(_violation(f["graph6"], "PD but not bounded-PWD while no MNPD member has a homogeneous 2-clique"))
        extra["mnpd_with_homogeneous_2clique"] = len(homog2)
        extra["pd_failing_h2"] = len(h2_fail)
        extra["pd_failing_pwd_bounded"] = len(pwd_fail)
        extra["pd_members_tested"] = len(pd)
        assumptions.append("the universe is assumed closed under induced subgraphs")
        assumptions.append("perfect weight divisibility is tested only for bounded weights")
    elif theorem_id == "OPEN_PD_VS_PWD":
        for f in done:
            if f["pd"] and ("h2pd" in f or "pwd" in f):
                applicable += 1
                if f.get("h2pd") is False:
                    viol.append(_violation(f["graph6"], "perfectly divisible but not H2-perfectly divisible"))
                if f.get("pwd") is False:
                    viol.append(_violation(f["graph6"], "perfectly divisible but not perfectly weight divisible for bounded weights"))
        assumptions.append("perfect weight divisibility is tested only for bounded weights")
    elif theorem_id == "OPEN_VERTEX_IN_A":
        for f in done:
            if f["pd"] and "uncovered" in f:
                applicable += 1
                for v in f["uncovered"]:
                    viol.append(_violation(f["graph6"], f"no perfect division puts vertex {v} in A"))
    else:
        raise KeyError(theorem_id)

    return TheoremReport(theorem_id, _universe(description, facts, applicable=applicable, **extra),
                         _checked(facts), applicable == 0, viol, assumptions)


def _run(ids, corpus: Corpus, opts: Options, jobs: int) -> list[TheoremReport]:
    start = time.perf_counter()
    facts = collect_facts(corpus, ids, opts, jobs)
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    reports = [_reduce(i, facts, corpus.description) for i in ids]
    for r in reports:
        r.wall_time_ms = elapsed
    return reports


def check_structural_theorems(corpus: Corpus, opts: Options = Options(), jobs: int = 1) -> list[TheoremReport]:
    """Homogeneous-set, clique-cutset and antihole theorems over the MNPD members of a corpus."""
    return _run(("T3_HOMOG", "T4_CUTSET", "L6_TRIANGLEFREE", "L11_CLAWFREE_ANTIHOLE"),
                corpus, opts, jobs)


def check_chromatic_and_critical(corpus: Corpus, opts: Options = Options(), jobs: int = 1) -> list[TheoremReport]:
    return _run(("CHROMATIC_BOUNDS", "T10_4CRITICAL"), corpus, opts, jobs)


def check_theorem2_equivalence(corpus: Corpus, opts: Options = Options(), jobs: int = 1) -> TheoremReport:
    return _run(("T2_EQUIVALENCE_EMPIRICAL",), corpus, opts, jobs)[0]


def hunt_open_problems(corpus: Corpus, problem: str = "PD_vs_PWD", opts: Options = Options(),
                       jobs: int = 1, artifacts_dir=None) -> TheoremReport:
    """Search a corpus for counterexamples to one of the two open problems.

    Hits are written to ``artifacts_dir`` (graph6 line plus JSON certificate)
    when a directory is given.
    """
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}; choose from {sorted(PROBLEMS)}")
    report = _run((PROBLEMS[problem],), corpus, opts, jobs)[0]
    if artifacts_dir is not None and report.violations:
        persist_counterexamples(report, artifacts_dir, opts)
    return report


def counterexample_certificates(theorem_id: str, g6: str, opts: Options = Options()) -> list[dict]:
    G = parse_graph6(g6)
    certs = [is_divisible(G, "pd", pd_cap=opts.pd_cap).to_dict()]
    if theorem_id == "OPEN_PD_VS_PWD":
        if G.n <= opts.weighted_cap:
            certs.append(is_divisible(G, "h2", weighted_cap=opts.weighted_cap).to_dict())
        if G.n <= min(opts.pwd_cap, opts.pwd_max_n):
            certs.append(is_divisible(G, "pwd", weight_bound=opts.weight_bound,
                                      pwd_cap=opts.pwd_cap).to_dict())
    return certs


def persist_counterexamples(report: TheoremReport, directory, opts: Options = Options()) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    prefix = report.theorem_id.lower()
    for i, v in enumerate(report.violations):
        stem = directory / f"{prefix}_{i:04d}"
        stem.with_suffix(".g6").write_text(v["graph6"] + "\n")
        payload = {"theoremId": report.theorem_id, **v,
                   "certificates": counterexample_certificates(report.theorem_id, v["graph6"], opts)}
        stem.with_suffix(".json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        written += [stem.with_suffix(".g6"), stem.with_suffix(".json")]
    return written


def recheck(theorem_id: str, g6: str, opts: Options = Options()) -> list[dict]:
    """Re-run one named check on a single stored graph; returns its violations."""
    facts = collect_facts([parse_graph6(g6)], (theorem_id,), opts)
    return _reduce(theorem_id, facts, "recheck").violations


# ---------------------------------------------------------------------- suite

class ConfigError(ValueError):
    pass


DEFAULT_CONFIG = {
    "corpus": {"max_n": 7, "min_n": 1, "patterns": ["groetzsch"], "files": []},
    "theorems": list(THEOREM_IDS),
    "hunts": ["PD_vs_PWD", "vertex_in_A"],
    "hunt_max_n": 6,
    "weight_bound": 3,
    "pwd_max_n": 7,
    "caps": {"pd": PD_CAP, "weighted": WEIGHTED_CAP, "pwd": PWD_CAP},
    "jobs": None,
    "output": None,
    "artifacts_dir": None,
}


@dataclass
class SuiteResult:
    report: dict
    exit_code: int
    path: Path | None = None


def load_config(source) -> dict:
    """Merge a JSON config (dict, path or JSON text) over the defaults."""
    if source is None:
        user = {}
    elif isinstance(source, dict):
        user = source
    else:
        p = Path(source)
        try:
            text = p.read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {source}: {exc}") from None
        try:
            user = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed config {source}: {exc}") from None
    if not isinstance(user, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(user) - set(DEFAULT_CONFIG)
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    cfg = json.loads(json.dumps(DEFAULT_CONFIG))
    for key, value in user.items():
        if isinstance(cfg[key], dict) and isinstance(value, dict):
            cfg[key].update(value)
        else:
            cfg[key] = value
    for t in cfg["theorems"]:
        if t not in THEOREM_IDS:
            raise ConfigError(f"unknown theorem id {t!r}")
    for h in cfg["hunts"]:
        if h not in PROBLEMS:
            raise ConfigError(f"unknown hunt {h!r}")
    for key in ("pd", "weighted", "pwd"):
        if not isinstance(cfg["caps"].get(key), int) or cfg["caps"][key] < 1:
            raise ConfigError(f"cap {key!r} must be a positive integer")
    return cfg


def _jobs(cfg) -> int:
    jobs = cfg.get("jobs")
    if jobs is None:
        jobs = int(os.environ.get("PERFDIV_JOBS", "1"))
    if jobs < 1:
        raise ConfigError("jobs must be positive")
    return jobs


def build_corpus(options: dict) -> Corpus:
    graphs: list[Graph] = []
    parts = []
    if options.get("max_n"):
        c = corpus_upto(options["max_n"], min_n=options.get("min_n", 1),
                        connected=options.get("connected", False),
                        triangle_free=options.get("triangle_free", False))
        graphs += list(c)
        parts.append(c.description)
    for path in options.get("files", []):
        c = graph6_corpus(path)
        graphs += list(c)
        parts.append(c.description)
    for name in options.get("patterns", []):
        graphs.append(pattern(name))
        parts.append(name)
    return corpus_of(graphs, " + ".join(parts) or "empty corpus")


def run_suite(config=None) -> SuiteResult:
    """Run the selected checkers and hunts and assemble the JSON report.

    Exit codes: 0 everything passed or was vacuous, 1 a violation or
    counterexample was found, 2 configuration, parse or capability error.
    """
    try:
        cfg = load_config(config)
        jobs = _jobs(cfg)
        opts = Options(pd_cap=cfg["caps"]["pd"], weighted_cap=cfg["caps"]["weighted"],
                       pwd_cap=cfg["caps"]["pwd"], weight_bound=cfg["weight_bound"],
                       pwd_max_n=cfg["pwd_max_n"], hunt_max_n=cfg["hunt_max_n"])
        corpus = build_corpus(cfg["corpus"])
    except (ConfigError, ParseError, CapabilityError, OSError, ValueError) as exc:
        return SuiteResult({"suiteVersion": __version__, "error": str(exc)}, 2)

    graphs = list(corpus)
    start = time.perf_counter()
    theorem_ids = list(cfg["theorems"])
    hunt_ids = [PROBLEMS[h] for h in cfg["hunts"]]
    facts = collect_facts(graphs, theorem_ids + hunt_ids, opts, jobs)
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    reports = []
    for tid in theorem_ids + hunt_ids:
        r = _reduce(tid, facts, corpus.description)
        r.wall_time_ms = elapsed
        reports.append(r)

    artifacts = []
    hit = any(r.violations for r in reports)
    if cfg["artifacts_dir"]:
        for r in reports:
            if r.theorem_id in HUNT_IDS and r.violations:
                artifacts += [str(p) for p in persist_counterexamples(r, cfg["artifacts_dir"], opts)]
    t2 = next((r for r in reports if r.theorem_id == "T2_EQUIVALENCE_EMPIRICAL"), None)
    report = {
        "suiteVersion": __version__,
        "generatedAt": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "config": cfg,
        "reports": [r.to_dict() for r in reports],
        "researchFlag": bool(t2 and t2.violations),
        "artifacts": artifacts,
    }
    path = None
    if cfg["output"]:
        path = Path(cfg["output"])
        path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return SuiteResult(report, 1 if hit else 0, path)


def comparable(report: dict) -> dict:
    """Copy of a suite report with the volatile timing fields removed."""
    out = json.loads(json.dumps(report))
    out.pop("generatedAt", None)
    for r in out.get("reports", []):
        r.pop("wallTimeMs", None)
    return out

