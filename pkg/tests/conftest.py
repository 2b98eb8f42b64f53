from pathlib import Path
from typing import AsyncGenerator

import pytest
from httpx import ASGITransport, AsyncClient

from liecoh.config import settings
from liecoh.main import app

SL2_FILE = """{
  "name": "sl2",
  "dim": 3,
  "brackets": [
    [1, 2, [[3, "1"]]],
    [1, 3, [[1, "-2"]]],
    [2, 3, [[2, "2"]]]
  ]
}
"""

# [e1, e2] = e1, [e2, e3] = e2 fails Jacobi on (1, 2, 3)
BROKEN_FILE = """{
  "name": "broken",
  "dim": 3,
  "brackets": [
    [1, 2, [[1, "1"]]],
    [2, 3, [[2, "1"]]]
  ]
}
"""


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    # Tests never pick up a developer's .env or external data directory.
    monkeypatch.setattr(settings, "LIECOH_EXTERNAL_DIR", None)
    monkeypatch.setattr(settings, "LIECOH_THREADS", 0)
    monkeypatch.setattr(settings, "LIECOH_FAST_RANK", False)


@pytest.fixture
def sl2_file(tmp_path: Path) -> Path:
    path = tmp_path / "sl2.json"
    path.write_text(SL2_FILE, encoding="utf-8")
    return path


@pytest.fixture
def broken_file(tmp_path: Path) -> Path:
    path = tmp_path / "broken.json"
    path.write_text(BROKEN_FILE, encoding="utf-8")
    return path


@pytest.fixture
async def client() -> AsyncGenerator[AsyncClient, None]:
    async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as c:
        yield c
