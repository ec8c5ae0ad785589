"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run directly with ``python tests/test_acceptance.py`` or through pytest; the
pytest run repeats the lines in its terminal summary.
"""

from __future__ import annotations

import random
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from crystalwalls.cartan import (  # noqa: E402
    CARTAN_MATRIX,
    CENTRAL,
    DELTA,
    INDICES,
    fundamental_weight,
    level,
    pair,
    simple_coroot,
    simple_root,
)
from crystalwalls.crystal import (  # noqa: E402
    TensorModel,
    build_graph,
    check_axioms,
    check_root_isomorphism,
    multiplicity_table,
)
from crystalwalls.paths import (  # noqa: E402
    PathModel,
    check_shift_decomposition,
    e_path,
    eps_phi_path,
    f_path,
)
from crystalwalls.perfect import B_MODEL, BElem, check_perfect  # noqa: E402
from crystalwalls.walls import (  # noqa: E402
    WallModel,
    format_wall,
    is_proper,
    is_reduced,
    read_wall,
    validate_wall,
)
from figures import FIGURES, nodes_of, truncate  # noqa: E402
from oracles import enumerate_reduced_walls, freudenthal  # noqa: E402

RESULTS: dict[int, str] = {}


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


# ---------------------------------------------------------------------------


FIGURE_B_EDGES = Counter({
    ("1,2", "1,-2", 2): 1, ("1,-2", "2,-2", 1): 1, ("2,-2", "2,-1", 1): 1,
    ("2,-1", "-2,-1", 2): 1, ("2,-1", "1,2", 0): 1, ("-2,-1", "1,-2", 0): 1,
})


def criterion_1():
    def work():
        g = build_graph(B_MODEL, BElem.B12, 10)
        return g, check_perfect(1)

    (g, perf), secs = timed(work)
    targets = sorted(fundamental_weight(i) for i in INDICES)
    checks = {
        "5 nodes": len(g) == 5,
        "8 edges": len(g.edges) == 8,
        "figure edge multiset": g.edge_multiset() == FIGURE_B_EDGES,
        "perfectness": perf.ok,
        "|B^min| = 3": len(perf.b_min) == 3,
        "eps bijection": sorted(perf.eps_images.values()) == targets,
        "phi bijection": sorted(perf.phi_images.values()) == targets,
        "runtime < 0.1 s": secs < 0.1,
    }
    failed = [k for k, v in checks.items() if not v]
    detail = (f"{len(g)} nodes, {len(g.edges)} edges, {secs * 1000:.1f} ms; "
              + ("all sub-checks hold" if not failed else "failed: " + ", ".join(failed)))
    report(1, not failed, detail)


def criterion_2():
    def work():
        out = {}
        for name, (root, edges, full_depth) in FIGURES.items():
            model = (WallModel if root[0] == "L" else PathModel)(int(root[1]))
            per_depth = {}
            for depth in sorted({3, full_depth}):
                g = build_graph(model, model.root(), depth)
                expected = truncate(root, edges, depth)
                per_depth[depth] = (
                    g.edge_multiset() == Counter(expected)
                    and {n.key for n in g.nodes} == nodes_of(root, expected))
            out[name] = per_depth
        return out

    results, secs = timed(work)
    # the two-parent convergence in the ground-1 graphs
    converge = all(
        sum(1 for _, b, _ in FIGURES[name][1] if b == target) == 2
        for name, target in (("paths, ground 1", "P1:1,-2"), ("walls, ground 1", "L1;c0=1,0,2")))
    ok = all(all(v.values()) for v in results.values()) and converge and secs < 0.1
    parts = [f"{name} " + "/".join(f"d{d}:{'ok' if v else 'MISMATCH'}" for d, v in r.items())
             for name, r in results.items()]
    report(2, ok, "; ".join(parts) + f"; convergence {'ok' if converge else 'missing'}; "
                  f"{secs * 1000:.1f} ms")


def criterion_3():
    def work():
        rows = []
        for i in INDICES:
            pm, wm = PathModel(i), WallModel(i)
            gp = build_graph(pm, pm.root(), 10)
            gw = build_graph(wm, wm.root(), 10)
            iso = check_root_isomorphism(gp, gw, pm, wm)
            bad = 0 if iso.ok else 1
            if iso.ok:
                for a, b in iso.mapping.items():
                    w, p = gw.elements[b], gp.elements[a]
                    if read_wall(w) != p or gw.nodes[b].wt.cl() != gp.nodes[a].wt:
                        bad += 1
                    for j in INDICES:
                        for opw, opp in ((wm.f, f_path), (wm.e, e_path)):
                            y = opw(j, w)
                            if (None if y is None else read_wall(y)) != opp(j, p):
                                bad += 1
            rows.append((i, len(gp), len(gw), bad, iso.mismatch))
        return rows

    rows, secs = timed(work)
    ok = all(r[3] == 0 for r in rows) and secs < 10
    detail = "; ".join(f"ground {i}: {a} paths / {b} walls, {bad} mismatches" + (f" ({m})" if m else "")
                       for i, a, b, bad, m in rows)
    report(3, ok, f"{detail}; {secs:.2f} s")


def criterion_4():
    reports, secs = timed(lambda: [check_shift_decomposition(i, 8) for i in INDICES])
    ok = all(r.ok for r in reports) and secs < 10
    detail = "; ".join(f"ground {r.ground}: {r.checked} paths, {len(r.mismatches)} mismatches"
                       for r in reports)
    report(4, ok, f"{detail}; {secs:.2f} s")


def criterion_5():
    bad, total = [], 0
    for i in INDICES:
        wm = WallModel(i)
        g = build_graph(wm, wm.root(), 10)
        total += len(g)
        bad += [format_wall(w) for w in g.elements
                if validate_wall(w) or not is_proper(w) or not is_reduced(w)]
    report(5, not bad, f"{total} walls checked, {len(bad)} violations"
                       + (f", first {bad[0]}" if bad else ""))


def criterion_6():
    parts, total_bad = [], 0
    models = [(WallModel(i), None) for i in INDICES] + [(PathModel(i), None) for i in INDICES]
    models += [(B_MODEL, BElem.B12), (TensorModel(B_MODEL, B_MODEL), (BElem.B12, BElem.B12))]
    for model, root in models:
        root = model.root() if root is None else root
        g = build_graph(model, root, 8)
        bad = check_axioms(g, model)
        total_bad += len(bad)
        tag = model.name + (str(model.ground) if hasattr(model, "ground") else "")
        parts.append(f"{tag}:{len(g)}/{len(bad)}")
    report(6, total_bad == 0, f"nodes/violations per graph {' '.join(parts)}")


def criterion_7():
    rng = random.Random(20240607)
    pool = []
    for i in INDICES:
        m = PathModel(i)
        pool += build_graph(m, m.root(), 12).elements
    sample = rng.sample(pool, 200)
    diffs = 0
    for p in sample:
        length = len(p.overrides)
        w = length + 4 + 2 * rng.randrange(4)
        for i in INDICES:
            diffs += f_path(i, p, w) != f_path(i, p, w + 2)
            diffs += e_path(i, p, w) != e_path(i, p, w + 2)
            diffs += eps_phi_path(i, p, w) != eps_phi_path(i, p, w + 2)
    report(7, diffs == 0, f"200 of {len(pool)} paths sampled, {diffs} differences")


def criterion_8():
    parts, ok = [], True
    for i in INDICES:
        wm = WallModel(i)
        g = build_graph(wm, wm.root(), 16)
        rows = {r.weight: r for r in multiplicity_table(g, affine=True)}
        got, want = [], []
        for k in range(5):
            row = rows.get(fundamental_weight(i) - k * DELTA)
            count = row.count if row is not None else 0
            ok &= row is not None and row.stable
            got.append(count)
            want.append(len(enumerate_reduced_walls(i, (k, 2 * k, k))))
        check = [freudenthal(i, (k, 2 * k, k)) for k in range(5)]
        ok &= got == want == check
        parts.append(f"ground {i}: bfs {got} enum {want} freudenthal {check}")
    report(8, ok, "; ".join(parts))


def criterion_9():
    failures = []
    if simple_root(0) + 2 * simple_root(1) + simple_root(2) != DELTA:
        failures.append("delta identity")
    for i in INDICES:
        for j in INDICES:
            if pair(simple_root(i), simple_coroot(j)) != CARTAN_MATRIX[j][i]:
                failures.append(f"<alpha_{i}, h_{j}>")
        if pair(simple_root(i), CENTRAL) != 0:
            failures.append(f"alpha_{i}(c)")
        if level(fundamental_weight(i)) != 1:
            failures.append(f"level Lambda_{i}")
    report(9, not failures, "delta identity, 9 pairings, alpha_i(c)=0, levels = 1"
                            + ("" if not failures else "; failed: " + ", ".join(failures)))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{n}" for n in range(1, 10)])
def test_acceptance(check):
    check()


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        try:
            check()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
