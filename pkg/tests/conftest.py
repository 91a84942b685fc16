import pytest

from cdtsep.catalog import CdtName, build_cdt, cdt_parameters
from cdtsep.cycles import enumerate_girth_cycles
from cdtsep.orient import build_constraints, solve
from cdtsep.separator import alternate_census, build_separator


@pytest.fixture(scope="session")
def separator_of():
    """Shared separator pipeline cache: text name -> (graph, params,
    cycle set, separator, census)."""
    cache = {}

    def get(text):
        if text not in cache:
            name = CdtName.from_string(text)
            g, _ = build_cdt(name)
            p = cdt_parameters(name)
            cs = enumerate_girth_cycles(g)
            a = solve(build_constraints(g, cs, p.k))
            s = build_separator(g, cs, p.k, a)
            census = alternate_census(s, max_r=4)
            cache[text] = (g, p, cs, s, census)
        return cache[text]

    return get
