import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from sigchrom.graph import Edge, EdgeKind, build_graph
from sigchrom.poly import parse_poly

GOLDEN = Path(__file__).parent / "golden"


def load_published():
    """{(variant, name): IntPolynomial} from the published-values fixture."""
    out = {}
    for line in (GOLDEN / "published.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        head, poly = line.split(":", 1)
        variant, name = head.split()
        out[(variant, name)] = parse_poly(poly)
    return out


@pytest.fixture(scope="session")
def published():
    return load_published()


def random_edge(rng, n):
    kind = rng.choice(list(EdgeKind) + [EdgeKind.POSITIVE_LINK, EdgeKind.NEGATIVE_LINK] * 2)
    if kind.is_link:
        if n < 2:
            return Edge(EdgeKind.NEGATIVE_LOOP, (0,))
        u, v = rng.sample(range(n), 2)
        return Edge(kind, (min(u, v), max(u, v)))
    return Edge(kind, (rng.randrange(n),))


def random_signed_graph(rng, max_vertices=6, max_edges=10, kinds=None):
    n = rng.randint(1, max_vertices)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        e = random_edge(rng, n)
        if kinds is None or e.kind in kinds:
            edges.append(e)
    return build_graph(n, edges)


@st.composite
def signed_graphs(draw, max_vertices=6, max_edges=10, allow_positive_loops=True):
    n = draw(st.integers(1, max_vertices))
    kinds = [k for k in EdgeKind if allow_positive_loops or k != EdgeKind.POSITIVE_LOOP]
    edges = []
    for _ in range(draw(st.integers(0, max_edges))):
        kind = draw(st.sampled_from(kinds))
        if kind.is_link:
            if n < 2:
                continue
            u = draw(st.integers(0, n - 1))
            v = draw(st.integers(0, n - 2))
            v = v + 1 if v >= u else v
            edges.append(Edge(kind, (min(u, v), max(u, v))))
        else:
            edges.append(Edge(kind, (draw(st.integers(0, n - 1)),)))
    return build_graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20141218)


# acceptance reporting: one line per criterion in the terminal summary

_ACCEPTANCE: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = [kw for kw in report.keywords if kw.startswith("criterion_")]
    if "test_acceptance.py" in report.nodeid and marker:
        _ACCEPTANCE.setdefault(marker[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    from test_acceptance import CRITERIA

    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split("_")[1])):
        results = _ACCEPTANCE[key]
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {key.split('_')[1]}: {verdict} ({sum(results)}/{len(results)} checks) - {CRITERIA[key]}"
        )
