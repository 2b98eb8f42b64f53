from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from liecoh import __version__
from liecoh.api.v1.routes import catalog, cohomology, plethysm, table
from liecoh.config import settings
from liecoh.core.logging import configure_logging

configure_logging()

app = FastAPI(
    title="liecoh",
    description="Exact adjoint cohomology of perfect Lie algebras and sl2 plethysm queries.",
    version=__version__,
    docs_url="/docs" if settings.ENVIRONMENT == "development" else None,
    redoc_url="/redoc" if settings.ENVIRONMENT == "development" else None,
)

origins = [
    "http://localhost",
    "http://localhost:8000",
]

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_methods=["GET"],
    allow_headers=["*"],
)

# API Routes
app.include_router(catalog.router, prefix="/api/v1/catalog", tags=["catalog"])
app.include_router(cohomology.router, prefix="/api/v1/cohomology", tags=["cohomology"])
app.include_router(plethysm.router, prefix="/api/v1", tags=["plethysm"])
app.include_router(table.router, prefix="/api/v1", tags=["table"])


@app.get("/health")
async def health_check():
    return {"status": "ok", "version": __version__}
