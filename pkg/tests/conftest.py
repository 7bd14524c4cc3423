from __future__ import annotations

import pytest

from spinroots import clifford, coxeter, spingroup


@pytest.fixture(scope="session")
def pipelines():
    """One full pipeline run per group, shared by every test module."""
    return {g: spingroup.run_pipeline(coxeter.simple_roots(g))
            for g in coxeter.GROUPS}


@pytest.fixture(scope="session")
def closures(pipelines):
    return {g: res.root_system for g, res in pipelines.items()}


@pytest.fixture(scope="session")
def spinor_sets(pipelines):
    return {g: res.spinors for g, res in pipelines.items()}


@pytest.fixture(scope="session")
def versor_groups(pipelines):
    return {g: res.versors for g, res in pipelines.items()}


@pytest.fixture(scope="session")
def unit_vector_pool(closures):
    """All roots of all four closures as unit multivectors."""
    pool = {clifford.vector(*r) for rs in closures.values() for r in rs.roots}
    return sorted(pool, key=lambda m: m.components)
