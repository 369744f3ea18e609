"""Bounded breadth-first exploration of the exchange graph."""

import itertools
import logging
from contextlib import nullcontext
from multiprocessing import Pool
from typing import Any, Literal, NamedTuple, TypeAlias

from cluster_bases.errors import ClusterError, InvalidArgumentError
from cluster_bases.ring import InexactDivisionError, TorusElement
from cluster_bases.seed import Seed, document_from_seed, express_in, initial_variables_in, mutate_seed, rebase
from cluster_bases.settings import get_settings

logger = logging.getLogger(__name__)

ExploreMode: TypeAlias = Literal["labeled", "unlabeled"]


class BudgetExceededError(ClusterError):
    pass


class NotFoundWithinDepthError(ClusterError):
    pass


class SeedCatalog(NamedTuple):
    seeds: tuple[Seed, ...]
    depths: tuple[int, ...]
    "BFS depth at which each seed was first reached."
    variables: tuple[TorusElement, ...]
    mode: ExploreMode


class InjectiveWitness(NamedTuple):
    sequence: tuple[int, ...]
    sigma: tuple[int, ...]
    "sigma[k] is the position of the variable with principal degree -f_k; identity on frozen positions."


def seed_key(s: Seed, mode: ExploreMode = "labeled") -> str:
    rendered = [v.render() for v in s.variables]
    if mode == "labeled":
        return _key(s.b_full, rendered)
    unfrozen = list(s.unfrozen)
    best = None
    for perm in itertools.permutations(unfrozen):
        position = list(range(s.rank))
        for source, target in zip(unfrozen, perm):
            position[source] = target
        b = tuple(tuple(s.b_full[position[i]][position[j]] for j in range(s.rank)) for i in range(s.rank))
        candidate = _key(b, [rendered[position[i]] for i in range(s.rank)])
        if best is None or candidate < best:
            best = candidate
    return best or _key(s.b_full, rendered)


def _key(b, rendered: list[str]) -> str:
    return repr(b) + "|" + "|".join(rendered)


def _children(seed: Seed) -> list[Seed]:
    return [mutate_seed(seed, k) for k in seed.unfrozen if not (seed.history and seed.history[-1] == k)]


def explore(
    s: Seed,
    max_depth: int,
    mode: ExploreMode = "unlabeled",
    budget: int | None = None,
    workers: int | None = None,
) -> SeedCatalog:
    """BFS over mutations up to ``max_depth``.

    With ``workers`` > 1 each frontier is mutated in a process pool; the catalog does not depend
    on the number of workers.
    """
    if max_depth < 0:
        raise InvalidArgumentError("max_depth must be nonnegative")
    if workers is not None and workers < 1:
        raise InvalidArgumentError(f"workers must be positive, got {workers}")
    budget = budget if budget is not None else get_settings().seed_budget
    seen: dict[str, tuple[int, Seed]] = {seed_key(s, mode): (0, s)}
    frontier = [s]
    with Pool(workers) if workers and workers > 1 else nullcontext() as pool:
        mapper = pool.map if pool is not None else map
        for depth in range(1, max_depth + 1):
            reached = []
            for children in mapper(_children, frontier):
                for child in children:
                    key = seed_key(child, mode)
                    if key in seen:
                        continue
                    seen[key] = (depth, child)
                    reached.append(child)
                    if len(seen) > budget:
                        raise BudgetExceededError(
                            f"exploration exceeded the budget of {budget} seeds at depth {depth}"
                        )
            logger.info("depth %d: %d new seeds, %d total", depth, len(reached), len(seen))
            if not reached:
                break
            frontier = reached
    entries = sorted(seen.items(), key=lambda item: (item[1][0], item[0]))
    variables: dict[TorusElement, str] = {}
    for _, (_, seed) in entries:
        for variable in seed.variables:
            if variable not in variables:
                variables[variable] = variable.render()
    return SeedCatalog(
        seeds=tuple(seed for _, (_, seed) in entries),
        depths=tuple(depth for _, (depth, _) in entries),
        variables=tuple(sorted(variables, key=variables.__getitem__)),
        mode=mode,
    )


def _principal(s: Seed, g) -> tuple[int, ...]:
    return tuple(g[k] for k in s.unfrozen)


def _injective_match(s: Seed) -> tuple[int, ...] | None:
    sigma = list(range(s.rank))
    targets = {}
    for j in s.unfrozen:
        targets[_principal(s, s.degrees[j])] = j
    for position, k in enumerate(s.unfrozen):
        wanted = tuple(-1 if p == position else 0 for p in range(len(s.unfrozen)))
        if wanted not in targets:
            return None
        sigma[k] = targets[wanted]
    return tuple(sigma)


def find_injective_copy(s: Seed, max_depth: int) -> InjectiveWitness:
    """BFS for a seed whose unfrozen variables have principal degrees -f_k relative to ``s``."""
    chart = rebase(s)
    frontier = [chart]
    seen = {seed_key(chart)}
    for depth in range(max_depth + 1):
        for seed in frontier:
            sigma = _injective_match(seed)
            if sigma is not None:
                logger.info("injective copy found after %s", [s.label(k) for k in seed.history])
                return InjectiveWitness(sequence=seed.history, sigma=sigma)
        if depth == max_depth:
            break
        reached = []
        for seed in frontier:
            for k in seed.unfrozen:
                if seed.history and seed.history[-1] == k:
                    continue
                child = mutate_seed(seed, k)
                key = seed_key(child)
                if key not in seen:
                    seen.add(key)
                    reached.append(child)
        frontier = reached
    raise NotFoundWithinDepthError(f"no injective copy of the seed within depth {max_depth}")


def in_upper_cluster(z: TorusElement, s: Seed, depth: int = 1) -> bool:
    """Laurent in every chart of the explored catalog; depth 1 is the starfish check."""
    catalog = explore(s, depth, mode="labeled")
    for seed in catalog.seeds:
        try:
            express_in(z, seed, initial_variables_in(seed))
        except InexactDivisionError:
            logger.debug("not Laurent at seed %s", list(seed.history))
            return False
    return True


def export_catalog(catalog: SeedCatalog) -> dict[str, Any]:
    return {
        "mode": catalog.mode,
        "seeds": [
            {"depth": depth, "history": [seed.label(k) for k in seed.history], **document_from_seed(seed)}
            for seed, depth in zip(catalog.seeds, catalog.depths)
        ],
        "variables": [v.render() for v in catalog.variables],
    }
