from typing import Any, List

from fastapi import APIRouter, Depends

from liecoh.api.v1.dependencies import get_query_service, run_query
from liecoh.schemas.results import CatalogEntryOut
from liecoh.services.queries import QueryService

router = APIRouter()


@router.get("/", response_model=List[CatalogEntryOut])
async def list_catalog(service: QueryService = Depends(get_query_service)) -> Any:
    """
    List every catalog entry in table order.
    """
    return await run_query(service.catalog)


@router.get("/{label}", response_model=CatalogEntryOut)
async def get_catalog_entry(label: str, service: QueryService = Depends(get_query_service)) -> Any:
    return await run_query(service.catalog_entry, label)
