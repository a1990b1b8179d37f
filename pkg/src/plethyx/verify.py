"""Cross-route verification sweeps.

Every sweep is a list of independent instances built in a fixed order; each
instance returns the findings it produced.  Instances may run in worker
processes, but results are collected in instance order so the report does not
depend on scheduling.

Finding kinds:

``discrepancy``
    two routes disagree; the sweep fails.
``documented-discrepancy``
    a known defect of a printed formula or graph, reproduced on purpose.
``conjecture-evidence``
    homology of a row complex; informational whatever it says.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import chern, homology, paths
from .shapes import Partition, format_partition, partitions
from .tableaux import count_g_pairs

SUITES = ("routes", "column", "row", "paths", "homology")
FAILING_KINDS = ("discrepancy",)

Instance = tuple  # (suite, check name, *args); must pickle


def _coeffs(e) -> dict[str, str]:
    return {format_partition(mu): str(c) for mu, c in e.items()}


def _finding(kind: str, check: str, instance: dict, routes: dict, note: str | None = None) -> dict:
    out = {"kind": kind, "check": check, "instance": instance, "routes": routes}
    if note:
        out["note"] = note
    return out


def _agree(check: str, instance: dict, values: dict) -> list[dict]:
    """One discrepancy finding if the named route values are not all equal."""
    first = next(iter(values.values()))
    if all(v == first for v in values.values()):
        return []
    routes = {k: (_coeffs(v) if hasattr(v, "items") else str(v)) for k, v in values.items()}
    return [_finding("discrepancy", check, instance, routes)]


# -- instance checks -----------------------------------------------------------

def _routes(lam: tuple, n: int) -> list[dict]:
    inst = {"lambda": format_partition(lam), "n": n}
    return _agree("sbar routes", inst, {
        "direct": chern.sbar_direct(lam, n),
        "alternating-skew": chern.sbar_alternating(lam, n, "skew"),
        "alternating-hook": chern.sbar_alternating(lam, n, "hook"),
    })


def _column(k: int, n: int) -> list[dict]:
    inst = {"k": k, "n": n}
    return _agree("column case", inst, {
        "direct": chern.sbar_direct((1,) * k, n),
        "parity-tableaux": chern.expand_column_case(k, n),
    })


def _row(k: int, n: int) -> list[dict]:
    inst = {"k": k, "n": n}
    oracle = chern.sbar_direct((k,), n)
    found = _agree("row case", inst, {"direct": oracle, "row-case": chern.expand_row_case(k, n)})
    for mu in partitions(k, max_len=n):
        found += _agree("row case g-pairs", {**inst, "mu": format_partition(mu)}, {
            "direct": oracle[mu],
            "g-pairs": count_g_pairs((k,), mu, n),
        })
    return found


def _small_rows(lam: tuple, n: int) -> list[dict]:
    oracle = chern.sbar_direct(lam, n)
    size = sum(lam)
    inst = {"lambda": format_partition(lam), "n": n}
    found = _agree("single row", inst, {"direct": oracle[(size,)], "ssyt": chern.coeff_single_row(lam, n)})
    for b in range(size // 2 + 1):
        a = size - b
        two = {**inst, "mu": format_partition((a, b))}
        found += _agree("two rows", two, {
            "direct": oracle[(a, b)],
            "g-pairs": chern.coeff_two_rows(lam, a, b, n, "gpairs"),
            "monomial": chern.coeff_two_rows(lam, a, b, n, "monomial"),
            "skew": chern.coeff_two_rows(lam, a, b, n, "skew"),
        })
        literal = chern.coeff_two_rows(lam, a, b, n, "gpairs-literal")
        if literal != oracle[(a, b)]:
            found.append(_finding(
                "documented-discrepancy", "two rows literal g-pairs", two,
                {"direct": str(oracle[(a, b)]), "g-pairs-literal": str(literal)},
                "unrestricted pairs overcount; 2's of S must sit in the first row",
            ))
    return found


def _column_coefficient(lam: tuple, n: int) -> list[dict]:
    lam = Partition(lam)
    oracle = chern.sbar_direct(lam, n)[(1,) * lam.size]
    jt = chern.coeff_column_jacobi_trudi(lam, n)
    found = []
    for p in chern.column_p_range(lam, n):
        inst = {"lambda": format_partition(lam), "n": n, "p": p}
        tuples = list(paths.nonintersecting_tuples(lam, p, n))
        found += _agree("single column", inst, {
            "direct": oracle,
            "fillings": chern.coeff_column(lam, n, p, "corrected"),
            "lgv-split": paths.lgv_determinant(lam, p, n, "split"),
            "path-tuples": len(tuples),
            "jacobi-trudi": jt,
        })
        fills = sorted(t.to_filling().rows for t in tuples)
        expected = sorted(t.rows for t in chern.column_fillings(lam, n, p, "corrected"))
        found += _agree("path fillings", inst, {
            "path-tuples": str(fills),
            "fillings": str(expected),
        })
        found += _agree("height predicate", inst, {
            "vertex-disjoint": True,
            "heights": all(paths.tuple_nonintersecting_by_heights(t.paths) for t in tuples),
        })
    return found


def _path_counts(k: int, n: int) -> list[dict]:
    found = []
    g = paths.PathGraph(n, "split")
    for p in range(1, n - k + 1):
        found += _agree("path count", {"p": p, "k": k, "n": n}, {
            "split-graph": paths.count_paths(g, p, p + k),
            "sequences": paths.count_sequences(p, k, n),
        })
    return found


def _printed_exhibits() -> list[dict]:
    printed = paths.PathGraph(3, "printed")
    split = paths.PathGraph(3, "split")
    return [
        _finding(
            "documented-discrepancy", "printed single-column conditions",
            {"lambda": "1,1", "n": 3, "p": 2},
            {
                "direct": str(chern.sbar_direct((1, 1), 3)[(1, 1)]),
                "fillings-printed": str(chern.coeff_column((1, 1), 3, 2, "printed")),
                "lgv-printed": str(paths.lgv_determinant((1, 1), 2, 3, "printed")),
            },
        ),
        _finding(
            "documented-discrepancy", "printed path graph",
            {"a": 1, "b": 3, "n": 3},
            {
                "printed": str(paths.count_paths(printed, 1, 3)),
                "split": str(paths.count_paths(split, 1, 3)),
                "sequences": str(paths.count_sequences(1, 2, 3)),
            },
        ),
    ]


def _column_homology(k: int, n: int) -> list[dict]:
    inst = {"kind": "column", "k": k, "n": n}
    try:
        c = homology.build_complex("column", range(1, k + 1), range(1, n - k + 2))
    except homology.GuardExceeded:
        return []
    h = homology.homology_dims(c)
    if not homology.vanishing_below_top(h):
        return [_finding("discrepancy", "column homology vanishing", inst, {"homology": [str(x) for x in h]})]
    found = _agree("column homology", inst, {
        "ch-top": homology.frobenius_ch(c, h),
        "c-nk": homology.c_nk(n, k),
        "column-case": chern.expand_column_case(k, n),
    })
    found += _agree("euler characteristic", inst, {
        "chains": c.euler_characteristic(),
        "homology": sum((-1) ** i * x for i, x in enumerate(h)),
    })
    if len(c.bases[k]) <= homology.DIRECT_GUARD:
        for ct in homology.cycle_types(k):
            found += _agree("hopf trace", {**inst, "rho": format_partition(ct.rho)}, {
                "hopf": homology.character_hopf(c, ct),
                "kernel-trace": homology.character_direct(c, ct),
            })
    return found


def _row_homology(a: int, m: int) -> list[dict]:
    inst = {"kind": "row", "A": a, "M": m}
    try:
        report = homology.check_vanishing("row", a, m, characters=False)
    except homology.GuardExceeded:
        return []
    found = [_finding(
        "conjecture-evidence", "row homology", inst,
        {"homology": [str(x) for x in report["homology"]]}, report["status"],
    )]
    n = m - a + 1
    if report["vanishing_below_top"] and n >= a:
        c = homology.build_complex("row", range(1, a + 1), range(1, m + 1))
        found += _agree("row homology", {**inst, "n": n}, {
            "ch-top": homology.frobenius_ch(c, report["homology"]),
            "r-nk": homology.r_nk(n, a),
            "row-case": chern.expand_row_case(a, n),
        })
    return found


CHECKS: dict[str, Callable[..., list[dict]]] = {
    "routes": _routes,
    "column": _column,
    "row": _row,
    "small-rows": _small_rows,
    "column-coefficient": _column_coefficient,
    "path-counts": _path_counts,
    "printed-exhibits": _printed_exhibits,
    "column-homology": _column_homology,
    "row-homology": _row_homology,
}


def _lambdas(max_weight: int) -> Iterable[Partition]:
    for w in range(1, max_weight + 1):
        yield from partitions(w)


def instances(suite: str, max_weight: int, max_vars: int) -> list[Instance]:
    """The sweep for ``suite``, in canonical order."""
    W, N = max_weight, max_vars
    out: list[Instance] = []
    if suite == "routes":
        out += [("routes", tuple(lam), n) for lam in _lambdas(W) for n in range(len(lam), N + 1)]
    elif suite == "column":
        out += [("column", k, n) for k in range(1, W + 1) for n in range(k, N + 1)]
    elif suite == "row":
        out += [("row", k, n) for k in range(1, W + 1) for n in range(1, N + 1)]
        out += [("small-rows", tuple(lam), n) for lam in _lambdas(W) for n in range(2, N + 1)]
    elif suite == "paths":
        if W >= 1:
            out += [("path-counts", k, n) for k in range(0, W + 1) for n in range(1, N + 1) if k < n]
        out += [
            ("column-coefficient", tuple(lam), n)
            for lam in _lambdas(W)
            for n in range(1, N + 1)
            if len(lam) + lam[0] <= n
        ]
        if W >= 2 and N >= 3:
            out.append(("printed-exhibits",))
    elif suite == "homology":
        out += [("column-homology", k, n) for k in range(1, W + 1) for n in range(k, min(N, k + 2) + 1)]
        out += [("row-homology", a, m) for a in range(1, W + 1) for m in range(max(1, 2 * a - 1), 2 * a + 2)]
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return out


def run_instance(inst: Instance) -> list[dict]:
    return CHECKS[inst[0]](*inst[1:])


def run(suite: str, max_weight: int, max_vars: int, jobs: int = 1) -> dict:
    """Run ``suite`` (or ``all``) and return the report; identical for any ``jobs``."""
    if max_weight < 0 or max_vars < 0:
        raise ValueError("sweep bounds must be nonnegative")
    suites = SUITES if suite == "all" else (suite,)
    todo = [inst for s in suites for inst in instances(s, max_weight, max_vars)]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_instance, todo, chunksize=1))
    else:
        results = [run_instance(inst) for inst in todo]
    findings = [f for group in results for f in group]
    failed = any(f["kind"] in FAILING_KINDS for f in findings)
    return {
        "suite": suite,
        "max_weight": max_weight,
        "max_vars": max_vars,
        "instances": len(todo),
        "findings": findings,
        "status": "discrepancy" if failed else "ok",
    }
