import pytest

from coxclusters import cartan_from_label


def indecomposable_types(max_rank):
    """(letter, rank) for every indecomposable finite type up to max_rank."""
    out = []
    bounds = {"A": (1, 8), "B": (2, 8), "C": (3, 8), "D": (4, 8), "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    for letter, (lo, hi) in bounds.items():
        for rank in range(lo, min(hi, max_rank) + 1):
            out.append((letter, rank))
    return out


@pytest.fixture
def a2():
    return cartan_from_label("A", 2)


@pytest.fixture
def a3():
    return cartan_from_label("A", 3)
