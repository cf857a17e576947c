import pytest

from wcell import builder

_BUILT = {}


@pytest.fixture(scope="session")
def built():
    """Session cache of built cell graphs, keyed by shape."""

    def get(lam):
        lam = tuple(lam)
        if lam not in _BUILT:
            _BUILT[lam] = builder.build_cell_graph(lam)
        return _BUILT[lam]

    return get
