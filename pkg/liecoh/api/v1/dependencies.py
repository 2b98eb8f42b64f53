from contextlib import contextmanager
from typing import Callable, Iterator, TypeVar

from fastapi import HTTPException, status
from starlette.concurrency import run_in_threadpool

from liecoh.config import settings
from liecoh.core.exceptions import ExternalDataRequired, LieCohError, UnknownLabel
from liecoh.services.queries import QueryService

T = TypeVar("T")


def get_query_service() -> QueryService:
    return QueryService(threads=settings.LIECOH_THREADS, fast=settings.LIECOH_FAST_RANK)


@contextmanager
def domain_errors() -> Iterator[None]:
    """Translate library errors into HTTP responses."""
    try:
        yield
    except UnknownLabel as exc:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=str(exc))
    except ExternalDataRequired as exc:
        raise HTTPException(status_code=status.HTTP_409_CONFLICT, detail=str(exc))
    except (LieCohError, ValueError) as exc:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(exc))


async def run_query(fn: Callable[..., T], *args, **kwargs) -> T:
    # The engine is CPU bound and synchronous.
    with domain_errors():
        return await run_in_threadpool(fn, *args, **kwargs)
