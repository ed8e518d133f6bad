import os
import tempfile
from pathlib import Path

# Must be set before logging_utils and the Celery config are imported
os.environ.setdefault("INDSET_LOG_DIR", str(Path(tempfile.gettempdir()) / "indset-test-logs"))
os.environ.setdefault("INDSET_LOG_LEVEL", "WARNING")
os.environ["CELERY_TASK_ALWAYS_EAGER"] = "true"

import pytest
from hypothesis import settings

from indset.graph import Graph, complete_bipartite, cycle_graph, path_graph, petersen

# Exact counting on random graphs has uneven run times
settings.register_profile("indset", deadline=None)
settings.load_profile("indset")


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def k33() -> Graph:
    return complete_bipartite(3, 3).graph


@pytest.fixture
def petersen_graph() -> Graph:
    return petersen()
