"""Acceptance gate: one test per criterion, each printing a single
PASS/FAIL line.  Failing criteria record reference values that the
recomputation contradicts; the mismatching subparts are listed in the
assertion message and analyzed in the project notes."""

import random

import networkx as nx
import pytest

from cdtsep.catalog import CdtName, build_cdt, cdt_parameters, reference_ooc
from cdtsep.cycles import (
    canonical_cycle,
    cycles_through,
    enumerate_girth_cycles,
    fastening_profile,
    unordered_paths,
)
from cdtsep.graph6 import parse_graph6, write_graph6
from cdtsep.graphs import build_graph, distances, girth, is_bipartite, underlying
from cdtsep.groups import (
    GL32_GENERATORS,
    alternating_elements,
    arc_transitivity,
    automorphism_group,
    cayley_digraph,
    digraph_isomorphic,
    gl32_elements,
    gl32_mult,
    is_distance_transitive,
    perm_mult,
    regular_subgroups,
    separator_automorphism_group,
    symmetric_elements,
)
from cdtsep.orient import (
    OddWitness,
    OrientationAssignment,
    assignment_from_cycles,
    build_constraints,
    solve,
    verify_ooa,
)
from cdtsep.report import KNOWN_DISCREPANCIES, run_report
from cdtsep.topology import euler, face_complex

SOLVABLE = ["k4", "k33", "q3", "dodecahedral", "desargues", "coxeter", "tutte"]
UNSOLVABLE = ["petersen", "heawood", "pappus", "foster", "biggs-smith"]

_CACHE = {}


def core(text):
    """Shared per-graph pipeline up to the solver outcome."""
    if text not in _CACHE:
        name = CdtName.from_string(text)
        g, _ = build_cdt(name)
        p = cdt_parameters(name)
        cs = enumerate_girth_cycles(g)
        outcome = solve(build_constraints(g, cs, p.k))
        _CACHE[text] = (name, g, p, cs, outcome)
    return _CACHE[text]


@pytest.fixture(scope="module")
def full_report():
    return run_report()


def conclude(number, description, failures):
    verdict = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {number}: {verdict} — {description}")
    assert not failures, f"criterion {number} failed on: {failures}"


def test_criterion_01_catalog_parameters():
    failures = []
    for text in SOLVABLE + UNSOLVABLE:
        _name, g, p, _cs, _o = core(text)
        got = (g.order, distances(g).diameter, girth(g), int(is_bipartite(g)))
        if got != (p.n, p.d, p.g, p.b):
            failures.append((text, got))
    conclude(1, "recomputed (n, d, g, b) match the reference table", failures)


def test_criterion_02_girth_cycle_counts():
    failures = []
    for text in SOLVABLE + UNSOLVABLE:
        _name, _g, p, cs, _o = core(text)
        expected = 2 ** (p.k - 2) * 3 * p.n // p.g
        if not (len(cs) == expected == p.eta):
            failures.append((text, len(cs)))
    conclude(2, "girth-cycle counts equal 2^(k-2)·3n/g for all 12 graphs", failures)


def test_criterion_03_fastening_law():
    failures = []
    for text in SOLVABLE + UNSOLVABLE:
        _name, g, p, cs, _o = core(text)
        profile = fastening_profile(g, cs, p.k)
        if not profile.uniform:
            failures.append(text)
            continue
        for i in range(p.k - 1):
            if set(profile.levels[i]) != {2 ** (i + 1)}:
                failures.append((text, i))
            if sum(profile.levels[i].values()) != len(unordered_paths(g, p.k - 1 - i)):
                failures.append((text, i, "not exhaustive"))
    conclude(
        3, "every (k-i-1)-path lies in exactly 2^(i+1) girth cycles", failures
    )


def test_criterion_04_solver_split_and_witnesses():
    failures = []
    for text in SOLVABLE:
        name, g, p, cs, outcome = core(text)
        if isinstance(outcome, OddWitness) or not verify_ooa(g, cs, p.k, outcome):
            failures.append(text)
    for text in UNSOLVABLE:
        _name, g, p, cs, w = core(text)
        if not isinstance(w, OddWitness):
            failures.append(text)
            continue
        ok = w.is_odd() and w.cycle_ids[0] == w.cycle_ids[-1]
        for i, path in enumerate(w.paths):
            hits = cycles_through(cs, path)
            ok = ok and len(hits) == 2
            if not ok:
                break
            (c1, d1), (c2, d2) = hits
            ok = ok and {c1, c2} == {w.cycle_ids[i], w.cycle_ids[i + 1]}
            ok = ok and w.parities[i] == (d1 == d2)
        if not ok:
            failures.append((text, "witness does not re-validate"))
    conclude(4, "orientation solver splits 7/5 and every odd witness re-validates",
             failures)


def test_criterion_05_reference_cycle_fixtures():
    failures = []
    for text in SOLVABLE:
        name, g, p, cs, _o = core(text)
        fixture = reference_ooc(name)
        a = assignment_from_cycles(cs, fixture.cycles)
        if not verify_ooa(g, cs, p.k, a):
            failures.append(text)
    conclude(5, "all seven reference cycle listings verify as valid orientations",
             failures)


def test_criterion_06_separator_structure(separator_of):
    expected_orders = dict(zip(SOLVABLE, [12, 36, 24, 60, 120, 168, 720]))
    failures = []
    for text in SOLVABLE:
        _g, p, _cs, s, _census = separator_of(text)
        in_deg = [0] * s.order
        for _u, v in s.digraph.arcs():
            in_deg[v] += 1
        under = underlying(s.digraph)
        checks = [
            s.order == expected_orders[text],
            all(len(s.digraph.out_adj[v]) == 2 and in_deg[v] == 2
                for v in range(s.order)),
            under.is_cubic() and under.is_connected(),
            s.oriented_cycle_count == p.eta,
        ]
        if not all(checks):
            failures.append((text, checks))
    conclude(6, "separator orders, 2-in/2-out regularity, cubic underlying graphs",
             failures)


def test_criterion_07_alternate_cycle_censuses(separator_of):
    failures = []
    # (graph, r, reference count, reference length)
    expectations = [
        ("desargues", 0, 20, 6),
        ("desargues", 1, 30, 8),
        ("k33", 0, 9, 4),
        ("k33", 1, 9, 8),
        ("tutte", 1, 180, 8),
        ("tutte", 2, 180, 12),
        ("tutte", 3, 90, 32),
        ("tutte", 4, 240, 15),
        # reference bi-alternate counts; the recomputation doubles both
        ("k33", 2, 6, 9),
        ("desargues", 2, 20, 9),
    ]
    for text, r, count, length in expectations:
        _g, p, _cs, s, census = separator_of(text)
        if r == 0:
            got_count, got_lengths = s.oriented_cycle_count, {s.girth}
        else:
            got_count, got_lengths = census.simple_count(r), census.simple_lengths(r)
        if got_count != count or got_lengths != {length}:
            failures.append((text, f"{r}-alternate", count, got_count))
    conclude(7, "oriented/alternate/bi/tri/tetra cycle censuses match the reference",
             failures)


def test_criterion_08_topology(separator_of):
    # reference (chi, genus); the Tutte recomputation gives (-90, 46)
    expectations = [
        ("k4", 2, 0),
        ("q3", 2, 0),
        ("dodecahedral", 2, 0),
        ("k33", 0, 1),
        ("desargues", -10, 6),
        ("coxeter", -18, 10),
        ("tutte", -120, 61),
    ]
    failures = []
    for text, chi, genus in expectations:
        _g, _p, _cs, s, census = separator_of(text)
        rep = euler(face_complex(s, census))
        if not (rep.orientable and rep.chi == chi and rep.genus == genus):
            failures.append((text, rep.chi, rep.genus))
    conclude(8, "Euler characteristics, orientability and genus of all seven surfaces",
             failures)


def test_criterion_09_automorphism_groups(separator_of):
    failures = []
    host_groups = {}
    for text in SOLVABLE + UNSOLVABLE:
        _name, g, p, _cs, _o = core(text)
        host_groups[text] = automorphism_group(g)
        if host_groups[text].order() != p.a:
            failures.append((text, host_groups[text].order()))
    for text in SOLVABLE:
        _g, p, _cs, s, _census = separator_of(text)
        sep = separator_automorphism_group(s, host_groups[text])
        if sep.order() != p.a:
            failures.append((text, "separator", sep.order()))
    conclude(9, "host and separator automorphism-group orders match column a",
             failures)


def test_criterion_10_cayley_identifications(separator_of):
    failures = []
    targets = [
        ("k4", alternating_elements(4), ((1, 2, 0, 3), (1, 0, 3, 2))),
        ("q3", symmetric_elements(4), ((1, 2, 3, 0), (1, 0, 2, 3))),
        ("dodecahedral", alternating_elements(5), ((1, 2, 3, 4, 0), (0, 2, 1, 4, 3))),
    ]
    for text, elements, gens in targets:
        _g, _p, _cs, s, _census = separator_of(text)
        target = cayley_digraph(elements, perm_mult, list(gens))
        if digraph_isomorphic(s.digraph, target) is None:
            failures.append((text, "cayley"))
    for text, order, spectrum in [
        ("k33", 36, None),
        ("desargues", 120, {1, 2, 3, 4, 5, 6}),
        ("tutte", 720, {1, 2, 3, 4, 5, 8}),
    ]:
        _g, p, _cs, s, _census = separator_of(text)
        sep = separator_automorphism_group(s)
        subs = regular_subgroups(sep, s.order)
        if not any(r.order() == order for r in subs):
            failures.append((text, "regular subgroup"))
        elif spectrum is not None and spectrum not in [
            r.order_spectrum() for r in subs
        ]:
            failures.append((text, "spectrum"))
    _g, _p, _cs, s, _census = separator_of("coxeter")
    ref_target = cayley_digraph(gl32_elements(), gl32_mult, list(GL32_GENERATORS))
    if digraph_isomorphic(s.digraph, ref_target) is None:
        failures.append(("coxeter", "cayley reference matrices"))
    conclude(10, "Cayley identifications and regular subgroups of the separators",
             failures)


def test_criterion_11_transitivity():
    failures = []
    for text in SOLVABLE + UNSOLVABLE:
        _name, g, p, _cs, _o = core(text)
        if not is_distance_transitive(g):
            failures.append((text, "distance"))
        if arc_transitivity(g) != p.k:
            failures.append((text, "arc"))
    conclude(11, "distance transitivity and arc-transitivity degree for all 12",
             failures)


def test_criterion_12_known_discrepancy_ledger(full_report):
    flagged = sorted((g, c.name) for g, c in full_report.flags())
    failures = [] if flagged == sorted(KNOWN_DISCREPANCIES) else [flagged]
    conclude(12, "verification flags exactly the three documented inconsistencies",
             failures)


def test_criterion_13_property_suite():
    failures = []
    rng = random.Random(20260823)
    for _ in range(1000):
        n = rng.randrange(4, 21, 2)
        nxg = nx.random_regular_graph(3, n, seed=rng.randrange(2**31))
        g = build_graph(n, sorted(nxg.edges()))
        h = parse_graph6(write_graph6(g))
        if sorted(h.edges()) != sorted(g.edges()):
            failures.append(("graph6 round trip", write_graph6(g)))
            break
    for _ in range(200):
        n = rng.randrange(3, 9)
        cyc = tuple(rng.sample(range(n), n))
        c = canonical_cycle(cyc)
        rot = cyc[1:] + cyc[:1]
        if canonical_cycle(c) != c or canonical_cycle(rot) != c \
                or canonical_cycle(cyc[::-1]) != c:
            failures.append(("canonical form", cyc))
            break
    _name, g, p, cs, a = core("q3")
    flipped = OrientationAssignment(tuple(not f for f in a.flips), a.components)
    if not verify_ooa(g, cs, p.k, flipped):
        failures.append("global flip invariance")
    for i in range(len(a.flips)):
        flips = list(a.flips)
        flips[i] = not flips[i]
        if verify_ooa(g, cs, p.k, OrientationAssignment(tuple(flips), a.components)):
            failures.append(("independent checker accepted a corrupt assignment", i))
            break
    conclude(13, "property suite: round trips, canonical forms, flip invariance",
             failures)
