"""Shared seeds and representations built from the files under ``fixtures/``."""

from pathlib import Path

import pytest

from cluster_bases.seed import Seed, load_seed_document, seed_from_document

FIXTURES = Path(__file__).parent.parent / "fixtures"


def load(name: str, quantum: bool | None = None) -> Seed:
    return seed_from_document(load_seed_document(FIXTURES / name), quantum=quantum)


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def sl3() -> Seed:
    return load("sl3.json", quantum=False)


@pytest.fixture
def sl3_quantum() -> Seed:
    return load("sl3.json")


@pytest.fixture
def kronecker() -> Seed:
    return load("kronecker.json")


@pytest.fixture
def kronecker_quantum() -> Seed:
    return load("kronecker_quantum.json")


@pytest.fixture
def annulus() -> Seed:
    return load("annulus.json")
