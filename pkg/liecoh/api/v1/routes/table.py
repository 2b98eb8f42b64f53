from typing import Any

from fastapi import APIRouter, Depends

from liecoh.api.v1.dependencies import get_query_service, run_query
from liecoh.schemas.results import LesReportOut, PredictionReportOut, TableReportOut
from liecoh.services.queries import QueryService

router = APIRouter()


@router.get("/table/", response_model=TableReportOut)
async def classification_table(
    include_extra: bool = False,
    service: QueryService = Depends(get_query_service),
) -> Any:
    """
    Recompute (h0, h1, h2) for every catalog row. External rows are
    loaded from LIECOH_EXTERNAL_DIR when present and skipped otherwise.
    """
    return await run_query(service.table, None, include_extra)


@router.get("/les/{m}", response_model=LesReportOut)
async def les_report(m: int, service: QueryService = Depends(get_query_service)) -> Any:
    return await run_query(service.les_report, m)


@router.get("/predict/{m}", response_model=PredictionReportOut)
async def predict(m: int, service: QueryService = Depends(get_query_service)) -> Any:
    return await run_query(service.predict, m)
