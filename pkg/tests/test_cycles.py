import pytest

from cdtsep.catalog import CdtName, build_cdt, cdt_parameters
from cdtsep.cycles import (
    canonical_cycle,
    cycles_through,
    enumerate_girth_cycles,
    fastening_profile,
    path_key,
    unordered_paths,
)
from cdtsep.graphs import GraphError, build_graph


class TestCanonicalForms:
    def test_rotation_and_reflection_invariance(self):
        base = (0, 3, 1, 4, 2)
        for i in range(5):
            rotated = base[i:] + base[:i]
            assert canonical_cycle(rotated) == canonical_cycle(base)
            assert canonical_cycle(rotated[::-1]) == canonical_cycle(base)

    def test_idempotent(self):
        c = canonical_cycle((2, 0, 1))
        assert canonical_cycle(c) == c

    def test_path_key_picks_smaller_end(self):
        assert path_key((3, 1, 0)) == (0, 1, 3)
        assert path_key((0, 1, 3)) == (0, 1, 3)


class TestEnumeration:
    @pytest.mark.parametrize("name", list(CdtName), ids=lambda n: n.value)
    def test_counts_match_eta(self, name):
        g, _ = build_cdt(name)
        p = cdt_parameters(name)
        cs = enumerate_girth_cycles(g)
        assert cs.girth == p.g
        assert len(cs) == p.eta

    def test_cycles_are_canonical_simple_and_sorted(self):
        g, _ = build_cdt(CdtName.PETERSEN)
        cs = enumerate_girth_cycles(g)
        assert list(cs.cycles) == sorted(cs.cycles)
        for cyc in cs.cycles:
            assert cyc == canonical_cycle(cyc)
            assert len(set(cyc)) == len(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                assert g.has_edge(a, b)


class TestCyclesThrough:
    def test_direction_flips_with_path(self):
        g, _ = build_cdt(CdtName.K4)
        cs = enumerate_girth_cycles(g)
        forward = cycles_through(cs, (0, 1))
        backward = cycles_through(cs, (1, 0))
        assert {cid for cid, _ in forward} == {cid for cid, _ in backward}
        fwd = dict(forward)
        assert all(fwd[cid] == -d for cid, d in backward)

    def test_rejects_non_path(self):
        g, _ = build_cdt(CdtName.PETERSEN)
        cs = enumerate_girth_cycles(g)
        with pytest.raises(GraphError):
            cycles_through(cs, (0, 0))
        with pytest.raises(GraphError):
            cycles_through(cs, (0, 2))  # not an edge of the Petersen graph


class TestFastening:
    @pytest.mark.parametrize("name", list(CdtName), ids=lambda n: n.value)
    def test_uniform_for_catalog(self, name):
        g, _ = build_cdt(name)
        p = cdt_parameters(name)
        cs = enumerate_girth_cycles(g)
        profile = fastening_profile(g, cs, p.k)
        assert profile.uniform
        for i in range(p.k - 1):
            assert set(profile.levels[i]) == {2 ** (i + 1)}

    def test_prism_is_not_uniform(self):
        # triangular prism: edges split between two triangles and a belt
        prism = build_graph(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
        cs = enumerate_girth_cycles(prism)
        assert not fastening_profile(prism, cs, 2).uniform

    def test_unordered_paths_count(self):
        g, _ = build_cdt(CdtName.HEAWOOD)
        # cubic: n * 3 * 2^(l-1) arcs of length l, halved as paths
        assert len(unordered_paths(g, 3)) == 14 * 3 * 4 // 2
