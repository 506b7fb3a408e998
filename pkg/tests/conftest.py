import pytest

from wlrefine.graph import Graph, parse_edge_list

HEX_CHORD_TEXT = b"6 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n1 5\n"


@pytest.fixture
def hex_chord() -> Graph:
    # hexagon 1..6 with the chord 2-6, shifted to ids 0..5
    return parse_edge_list(HEX_CHORD_TEXT)
