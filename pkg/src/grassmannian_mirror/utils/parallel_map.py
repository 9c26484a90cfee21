from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Sequence, TypeVar

from tqdm import tqdm

from grassmannian_mirror.core import settings

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    jobs: int = 1,
    desc: str | None = None,
) -> List[R]:
    """
    Map `func` over `items`, returning results in input order.

    - jobs <= 1: sequential (exceptions surface with full tracebacks)
    - jobs  > 1: ThreadPoolExecutor + as_completed, merged back by index

    Progress goes to stderr through tqdm; results never depend on `jobs`.
    """
    n_items = len(items)
    results: List[R | None] = [None] * n_items
    show = settings.SHOW_PROGRESS and desc is not None and n_items > 1

    if jobs <= 1 or n_items <= 1:
        for idx, item in enumerate(
            tqdm(items, desc=desc, leave=False, disable=not show)
        ):
            results[idx] = func(item)
        return results  # type: ignore[return-value]

    with ThreadPoolExecutor(max_workers=min(jobs, n_items)) as ex:
        futures = {ex.submit(func, item): idx for idx, item in enumerate(items)}
        for fut in tqdm(
            as_completed(futures),
            total=n_items,
            desc=desc,
            leave=False,
            disable=not show,
        ):
            results[futures[fut]] = fut.result()

    return results  # type: ignore[return-value]
