from __future__ import annotations

from typing import Callable, Iterable, Sequence, TypeVar

from joblib import Parallel, delayed

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        from .config import load_settings

        return int(load_settings().jobs)
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    return int(jobs)


def ordered_map(
    fn: Callable[[T], R], items: Sequence[T] | Iterable[T], *, jobs: int | None = 1
) -> list[R]:
    """
    Apply `fn` to every item and return results in input order.

    Threads are used because the heavy lifting happens inside scipy's csgraph
    routines, which release the GIL. With jobs == 1 no pool is created.
    """
    items = list(items)
    n_jobs = resolve_jobs(jobs)
    if n_jobs == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    return list(
        Parallel(n_jobs=min(n_jobs, len(items)), prefer="threads")(
            delayed(fn)(x) for x in items
        )
    )


def chunked(items: Sequence[T], size: int) -> list[Sequence[T]]:
    if size < 1:
        raise ValueError("size must be >= 1")
    return [items[i : i + size] for i in range(0, len(items), size)]


def better_max(
    best: tuple[float, tuple[int, ...]] | None,
    cand: tuple[float, tuple[int, ...]] | None,
) -> tuple[float, tuple[int, ...]] | None:
    """
    Associative max-merge of (value, witness) cells.

    Ties on value go to the lexicographically smallest witness, so the result does
    not depend on how cells were split across workers.
    """
    if cand is None:
        return best
    if best is None:
        return cand
    if cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
        return cand
    return best


def better_min(
    best: tuple[float, tuple[int, ...]] | None,
    cand: tuple[float, tuple[int, ...]] | None,
) -> tuple[float, tuple[int, ...]] | None:
    """Associative min-merge; ties go to the smallest witness."""
    if cand is None:
        return best
    if best is None:
        return cand
    if cand[0] < best[0] or (cand[0] == best[0] and cand[1] < best[1]):
        return cand
    return best
