import logging
from collections.abc import Callable, Iterator
from typing import NamedTuple

import polars as pl

from cluster_bases.errors import ClusterError
from cluster_bases.explore import SeedCatalog, explore
from cluster_bases.ring import TorusElement, unit_vector
from cluster_bases.seed import Seed, express_in, initial_variables_in, mutate_seed
from cluster_bases.tropical import extract_pointed, tropical_transform

from . import console

logger = logging.getLogger(__name__)


class Outcome(NamedTuple):
    subject: str
    passed: bool
    detail: str = ""


Suite = Callable[[SeedCatalog], Iterator[Outcome]]


def _where(seed: Seed) -> str:
    return "[" + ",".join(seed.label(k) for k in seed.history) + "]"


def _attempt(subject: str, check: Callable[[], str | None]) -> Outcome:
    try:
        problem = check()
    except ClusterError as e:
        problem = str(e)
    return Outcome(subject, problem is None, problem or "")


def laurent_suite(catalog: SeedCatalog) -> Iterator[Outcome]:
    """Every exchange divides exactly, undoes itself, and every variable is a unit monomial in its own chart."""
    for seed in catalog.seeds:
        chart = initial_variables_in(seed)
        for k in seed.unfrozen:

            def involution(k: int = k) -> str | None:
                back = mutate_seed(mutate_seed(seed, k), k)
                return None if back.variables == seed.variables else "mutating twice changed the cluster"

            yield _attempt(f"{_where(seed)} mu_{seed.label(k)}", involution)
        for k, variable in enumerate(seed.variables):

            def own_chart(k: int = k, variable: TorusElement = variable) -> str | None:
                local = express_in(variable, seed, chart)
                expected = unit_vector(seed.rank, k)
                if local.support() != [expected] or local.coefficient(expected).render() != "1":
                    return f"expected X{list(expected)}, got {local.render()}"
                return None

            yield _attempt(f"{_where(seed)} X{seed.label(k)}", own_chart)


def positivity_suite(catalog: SeedCatalog) -> Iterator[Outcome]:
    """Every cluster variable has nonnegative coefficients in the initial seed."""
    for variable in catalog.variables:
        negative = [list(m) for m, coeff in variable.items() if any(c < 0 for _, c in coeff.items())]
        yield Outcome(variable.render(), not negative, f"negative coefficients at {negative}" if negative else "")


def tropical_suite(catalog: SeedCatalog) -> Iterator[Outcome]:
    """Degrees follow the tropical transformation under one mutation and separate cluster variables."""
    for seed in catalog.seeds:
        chart = initial_variables_in(seed)
        for k in seed.unfrozen:
            child = mutate_seed(seed, k)
            child_chart = initial_variables_in(child)
            for j, variable in enumerate(seed.variables):

                def transformed(k: int = k, variable: TorusElement = variable) -> str | None:
                    before = extract_pointed(variable, seed, chart).g
                    after = extract_pointed(variable, child, child_chart).g
                    expected = tropical_transform(before, k, seed.b_full)
                    return None if after == expected else f"degree {list(after)} but expected {list(expected)}"

                yield _attempt(f"{_where(seed)} mu_{seed.label(k)} X{seed.label(j)}", transformed)
    degrees: dict[tuple[int, ...], str] = {}
    for variable in catalog.variables:
        g = extract_pointed(variable, catalog.seeds[0]).g
        clash = degrees.setdefault(g, variable.render())
        yield Outcome(
            f"g={list(g)}",
            clash == variable.render(),
            "" if clash == variable.render() else f"shared with {clash}",
        )


SUITES: dict[str, Suite] = {
    "laurent": laurent_suite,
    "positivity": positivity_suite,
    "tropical": tropical_suite,
}


def run_checks(seed: Seed, depth: int, suites: list[str]) -> pl.DataFrame:
    with console.status(f"Exploring to depth {depth}..."):
        catalog = explore(seed, depth, mode="labeled")
    rows = []
    for name in suites:
        with console.status(f"Running {name} checks on {len(catalog.seeds)} seeds..."):
            for outcome in SUITES[name](catalog):
                if not outcome.passed:
                    logger.warning("%s check failed for %s: %s", name, outcome.subject, outcome.detail)
                rows.append({"suite": name, **outcome._asdict()})
    schema = {"suite": pl.String, "subject": pl.String, "passed": pl.Boolean, "detail": pl.String}
    return pl.DataFrame(rows, schema=schema)


def summarize(report: pl.DataFrame) -> pl.DataFrame:
    return (
        report.group_by("suite", maintain_order=True)
        .agg(checked=pl.len(), failed=(~pl.col("passed")).sum())
        .with_columns(pl.col("failed").cast(pl.Int64))
    )
