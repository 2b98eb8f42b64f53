from typing import Any, Literal, Optional

from fastapi import APIRouter, Depends, Query

from liecoh.api.v1.dependencies import get_query_service, run_query
from liecoh.schemas.results import CohomologyOut
from liecoh.services.queries import QueryService, resolve_algebra

router = APIRouter()


def _compute(service: QueryService, selector: str, module: str, max_degree: Optional[int],
             method: str, derivations: bool) -> CohomologyOut:
    g = resolve_algebra(selector)
    return service.cohomology(g, module, max_degree, method, with_derivations=derivations)


@router.get("/{selector}", response_model=CohomologyOut)
async def algebra_cohomology(
    selector: str,
    module: Literal["adjoint", "trivial"] = "adjoint",
    max_degree: Optional[int] = Query(None, ge=0),
    method: Literal["direct", "hochschild-serre"] = "direct",
    derivations: bool = False,
    service: QueryService = Depends(get_query_service),
) -> Any:
    """
    Betti table of a catalog algebra or an ``sl2xV...`` selector.
    """
    return await run_query(_compute, service, selector, module, max_degree, method, derivations)
