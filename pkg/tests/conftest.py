import pytest
import sympy

from milnorzeta.newton import PolySupport
from milnorzeta.plumb import CurveConfig

X, Y, Z = sympy.symbols("x y z")


def support(*points):
    return PolySupport.from_support(points)


def poly(expr, gens=(X, Y, Z)):
    return PolySupport.from_sympy(expr, gens)


# the four quartic configurations and the nodal sextic configurations
Q1 = CurveConfig(((4, 3),))
Q2 = CurveConfig(((3, 0), (1, 0)))
Q3 = CurveConfig(((3, 1), (1, 0)))
Q4 = CurveConfig(((2, 0), (2, 0)))
SEXTIC_9 = CurveConfig(((6, 9),))
TWO_CUBICS = CurveConfig(((3, 0), (3, 0)))
SEXTIC_10 = CurveConfig(((6, 10),))
NODAL_AND_SMOOTH_CUBIC = CurveConfig(((3, 1), (3, 0)))
NODAL_QUARTIC_TWO_LINES = CurveConfig(((4, 1), (1, 0), (1, 0)))

CORPUS = {
    "Q1": Q1, "Q2": Q2, "Q3": Q3, "Q4": Q4,
    "sextic9": SEXTIC_9, "two_cubics": TWO_CUBICS, "sextic10": SEXTIC_10,
    "cubic_pair": NODAL_AND_SMOOTH_CUBIC, "quartic_lines": NODAL_QUARTIC_TWO_LINES,
    "cubic3nodes_lines": CurveConfig(((1, 0), (1, 0), (1, 0))),
    "conic_line": CurveConfig(((2, 0), (1, 0))),
    "quintic": CurveConfig(((5, 4),)),
    "quintic_split": CurveConfig(((4, 2), (1, 0))),
    "smooth_quartic": CurveConfig(((4, 0),)),
}


@pytest.fixture(params=sorted(CORPUS))
def corpus_config(request):
    return CORPUS[request.param]


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
