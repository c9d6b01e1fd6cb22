import random

import pytest

from ribbonlift import fixtures
from ribbonlift.sampling import random_diagram

CORPUS_SEED = 20240611


def diagram_corpus(size=32, seed=CORPUS_SEED):
    """Shipped diagrams with crossings plus random ones with 1 to 4 crossings."""
    rng = random.Random(seed)
    out = [fixtures.load(n) for n in ("theta_one_crossing.diagram", "bouquet_one_crossing.diagram",
                                      "theta_kink.diagram", "theta_double_kink.diagram")]
    while len(out) < size:
        out.append(random_diagram(rng, 1 + len(out) % 4))
    return out


@pytest.fixture(scope="session")
def corpus():
    return diagram_corpus()
