import pytest

from cdtsep.catalog import CdtName, build_cdt, cdt_parameters, reference_ooc
from cdtsep.cycles import cycles_through, enumerate_girth_cycles
from cdtsep.orient import (
    OddWitness,
    OrientationAssignment,
    assignment_from_cycles,
    build_constraints,
    classify_kappa,
    solve,
    verify_ooa,
)

SOLVABLE = ["k4", "k33", "q3", "dodecahedral", "desargues", "coxeter", "tutte"]
UNSOLVABLE = ["petersen", "heawood", "pappus", "foster", "biggs-smith"]


def pipeline(text):
    name = CdtName.from_string(text)
    g, _ = build_cdt(name)
    p = cdt_parameters(name)
    cs = enumerate_girth_cycles(g)
    return g, p, cs, solve(build_constraints(g, cs, p.k))


class TestSolverSplit:
    @pytest.mark.parametrize("text", SOLVABLE)
    def test_solvable_graphs(self, text):
        g, p, cs, outcome = pipeline(text)
        assert isinstance(outcome, OrientationAssignment)
        assert verify_ooa(g, cs, p.k, outcome)

    @pytest.mark.parametrize("text", UNSOLVABLE)
    def test_unsolvable_graphs(self, text):
        _g, _p, _cs, outcome = pipeline(text)
        assert isinstance(outcome, OddWitness)

    @pytest.mark.parametrize("text", SOLVABLE)
    def test_single_constraint_component(self, text):
        _g, _p, _cs, outcome = pipeline(text)
        assert outcome.components == 1

    def test_deterministic(self):
        _, _, _, a1 = pipeline("tutte")
        _, _, _, a2 = pipeline("tutte")
        assert a1 == a2


class TestWitness:
    @pytest.mark.parametrize("text", UNSOLVABLE)
    def test_witness_revalidates(self, text):
        g, p, cs, w = pipeline(text)
        assert w.is_odd()
        assert len(w.cycle_ids) == len(w.paths) + 1
        assert w.cycle_ids[0] == w.cycle_ids[-1]
        for i, path in enumerate(w.paths):
            hits = cycles_through(cs, path)
            assert len(hits) == 2
            (c1, d1), (c2, d2) = hits
            assert {c1, c2} == {w.cycle_ids[i], w.cycle_ids[i + 1]}
            assert w.parities[i] == (d1 == d2)

    def test_petersen_witness_is_short(self):
        _g, _p, _cs, w = pipeline("petersen")
        assert len(w.paths) == 4


class TestVerifierIndependence:
    def test_corrupted_assignment_fails(self):
        g, p, cs, a = pipeline("desargues")
        flips = list(a.flips)
        flips[0] = not flips[0]
        corrupt = OrientationAssignment(tuple(flips), a.components)
        assert not verify_ooa(g, cs, p.k, corrupt)

    def test_global_flip_still_verifies(self):
        g, p, cs, a = pipeline("desargues")
        flipped = OrientationAssignment(tuple(not f for f in a.flips), a.components)
        assert verify_ooa(g, cs, p.k, flipped)

    def test_wrong_length_rejected(self):
        g, p, cs, a = pipeline("k4")
        assert not verify_ooa(g, cs, p.k, OrientationAssignment((False,), 1))


class TestReferenceFixtures:
    @pytest.mark.parametrize("text", SOLVABLE)
    def test_fixture_is_valid_ooa(self, text):
        name = CdtName.from_string(text)
        g, _ = build_cdt(name)
        p = cdt_parameters(name)
        cs = enumerate_girth_cycles(g)
        fixture = reference_ooc(name)
        a = assignment_from_cycles(cs, fixture.cycles)
        assert verify_ooa(g, cs, p.k, a)

    def test_duplicate_cycle_rejected(self):
        name = CdtName.K4
        g, _ = build_cdt(name)
        cs = enumerate_girth_cycles(g)
        cycles = list(reference_ooc(name).cycles)
        cycles[1] = cycles[0]
        with pytest.raises(ValueError):
            assignment_from_cycles(cs, cycles)

    def test_non_girth_cycle_rejected(self):
        g, _ = build_cdt(CdtName.K4)
        cs = enumerate_girth_cycles(g)
        with pytest.raises(ValueError):
            assignment_from_cycles(cs, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (0, 1, 2)])


class TestKappa:
    @pytest.mark.parametrize("name", list(CdtName), ids=lambda n: n.value)
    def test_catalog_classification(self, name):
        from cdtsep.graphs import is_planar

        g, _ = build_cdt(name)
        p = cdt_parameters(name)
        cs = enumerate_girth_cycles(g)
        solved = isinstance(
            solve(build_constraints(g, cs, p.k)), OrientationAssignment
        )
        assert classify_kappa(solved, is_planar(g), p.g, p.k) == p.kappa

    def test_inconsistent_inputs_raise(self):
        with pytest.raises(ValueError):
            classify_kappa(False, True, 5, 3)
        with pytest.raises(ValueError):
            classify_kappa(True, False, 3, 3)
