from typing import Any, List, Literal

from fastapi import APIRouter, Depends, Query

from liecoh.api.v1.dependencies import get_query_service, run_query
from liecoh.schemas.results import DecompositionOut, MultiplicityOut
from liecoh.services.queries import QueryService

router = APIRouter()


@router.get("/plethysm/exterior", response_model=DecompositionOut)
async def exterior_power(
    j: int = Query(..., ge=0, description="Exterior degree"),
    m: int = Query(..., ge=0, description="Highest weight of V_m"),
    method: Literal["formula", "brute"] = "formula",
    service: QueryService = Depends(get_query_service),
) -> Any:
    """
    Decompose Λ^j(V_m) into irreducible sl2-modules.
    """
    return await run_query(service.exterior, j, m, method)


@router.get("/plethysm/tensor", response_model=DecompositionOut)
async def tensor_product(
    a: int = Query(..., ge=0),
    b: int = Query(..., ge=0),
    service: QueryService = Depends(get_query_service),
) -> Any:
    return await run_query(service.tensor, a, b)


@router.get("/multiplicity/{kind}", response_model=MultiplicityOut)
async def multiplicity(
    kind: str,
    args: List[int] = Query(..., description="Integer arguments, in order"),
    service: QueryService = Depends(get_query_service),
) -> Any:
    return await run_query(service.multiplicity, kind, args)
