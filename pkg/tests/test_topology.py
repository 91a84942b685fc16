import pytest

from cdtsep.graphs import GraphError
from cdtsep.separator import AlternateCensus, AlternateOrbit
from cdtsep.topology import euler, face_complex

# text name -> (faces, chi, genus); all seven complexes are orientable
EXPECTED = {
    "k4": (8, 2, 0),
    "k33": (18, 0, 1),
    "q3": (14, 2, 0),
    "dodecahedral": (32, 2, 0),
    "desargues": (50, -10, 6),
    "coxeter": (66, -18, 10),
    "tutte": (270, -90, 46),
}


class TestFaceComplex:
    @pytest.mark.parametrize("text", sorted(EXPECTED))
    def test_every_edge_in_two_face_slots(self, text, separator_of):
        _g, p, _cs, s, census = separator_of(text)
        fc = face_complex(s, census)
        assert fc.vertices == s.order
        assert len(fc.edges) == 3 * s.order // 2
        assert len(fc.faces) == p.eta + census.simple_count(1)

    def test_rejects_incomplete_coverage(self, separator_of):
        _g, _p, _cs, s, census = separator_of("k4")
        # drop one alternate face: its edges are then covered only once
        trimmed = AlternateCensus(
            {1: tuple(census.simple_cycles(1)[:-1])}
        )
        with pytest.raises(GraphError):
            face_complex(s, trimmed)

    def test_rejects_non_edge_walk(self, separator_of):
        _g, _p, _cs, s, _ = separator_of("k4")
        fake = AlternateOrbit(1, 3, (0, 0, 0, 0, 0, 0), True)
        with pytest.raises(GraphError):
            face_complex(s, AlternateCensus({1: (fake,)}))


class TestEuler:
    @pytest.mark.parametrize("text", sorted(EXPECTED))
    def test_characteristic_and_genus(self, text, separator_of):
        _g, _p, _cs, s, census = separator_of(text)
        report = euler(face_complex(s, census))
        faces, chi, genus = EXPECTED[text]
        assert report.faces == faces
        assert report.chi == chi
        assert report.vertices - report.edges + report.faces == chi
        assert report.orientable
        assert report.genus == genus
