import numpy as np
import pytest

import tourcraft as tc


def square_instance():
    return tc.Instance("sq", 4, "EUC_2D",
                       coords=((0, 0), (10, 0), (10, 10), (0, 10)))


def test_square_structure():
    svg = tc.plot_tour_svg(square_instance(), [0, 1, 2, 3])
    assert svg.count("<circle") == 4
    assert svg.count("<path") == 1
    assert "Z" in svg and svg.startswith("<?xml")


def test_reference_tour_dashed():
    svg = tc.plot_tour_svg(square_instance(), [0, 1, 2, 3], [0, 2, 1, 3])
    assert svg.count("<path") == 2
    assert svg.count("stroke-dasharray") == 1


def test_deterministic():
    inst = tc.generate_random_euclidean(30, 4, 1000.0)
    order = list(range(30))
    assert tc.plot_tour_svg(inst, order) == tc.plot_tour_svg(inst, order)


def test_explicit_rejected():
    w = np.array([[0, 1, 2], [1, 0, 3], [2, 3, 0]], dtype=float)
    inst = tc.Instance("ex", 3, "EXPLICIT", explicit_weights=w)
    with pytest.raises(tc.ConfigError):
        tc.plot_tour_svg(inst, [0, 1, 2])
