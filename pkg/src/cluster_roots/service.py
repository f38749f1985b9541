"""Session service for interactive mutation: one seed per session, full
undo history, per-column Schur badges, bounded enumeration.

The service performs exactly the same computations as the CLI through the
same core modules, so a C panel rendered from a service response is byte
comparable with `mutate --output machine`. Sessions are single-writer:
operations on one session are serialized by its lock, different sessions
run concurrently, and a session disappears after the configured idle
timeout.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware

from .quiver import (
    ExchangeMatrix,
    MutationOverflowError,
    QuiverSpec,
    Seed,
    initial_seed,
    is_acyclic,
    parse_quiver_document,
)
from .schur import DEFAULT_PRIME, DEFAULT_TRIALS, is_real_schur_root
from .search import DEFAULT_SEED_CAP, enumerate_c_vectors

_STATUS = {
    "certified": "certified",
    "refuted_not_real_root": "refuted",
    "likely_not_schur": "inconclusive",
}


@dataclass
class _Session:
    seed: Seed
    initial: ExchangeMatrix
    acyclic: bool
    history: list[Seed] = field(default_factory=list)
    badge_cache: dict[tuple[int, ...], str] = field(default_factory=dict)
    last_used: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)


def build_app(
    idle_timeout: float = 900.0,
    enumerate_cap: int = 12,
    max_seeds: int = DEFAULT_SEED_CAP,
    trials: int = DEFAULT_TRIALS,
    p: int = DEFAULT_PRIME,
    rng_seed: int = 0,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="cluster-roots session service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()

    def _sweep() -> None:
        now = time.monotonic()
        for sid in [
            sid for sid, s in sessions.items() if now - s.last_used > idle_timeout
        ]:
            sessions.pop(sid, None)

    def _get(sid: str) -> _Session:
        with registry_lock:
            _sweep()
            session = sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown or expired session")
        session.last_used = time.monotonic()
        return session

    def _badge(session: _Session, column: tuple[int, ...]) -> str:
        if not session.acyclic:
            return "not-computed"
        positive = tuple(abs(x) for x in column)
        cached = session.badge_cache.get(positive)
        if cached is None:
            quiver = QuiverSpec.from_exchange_matrix(session.initial)
            verdict = is_real_schur_root(
                quiver, positive, trials=trials, p=p, rng_seed=rng_seed
            )
            cached = _STATUS[verdict.kind]
            session.badge_cache[positive] = cached
        return cached

    def _state(session: _Session) -> dict:
        seed = session.seed
        columns = []
        for col in seed.c_columns():
            sign = "positive" if all(x >= 0 for x in col) else "negative"
            columns.append(
                {
                    "vector": list(col),
                    "sign": sign,
                    "schur": _badge(session, col),
                }
            )
        return {
            "n": seed.n,
            "b": [list(r) for r in seed.b.b],
            "c": [list(r) for r in seed.c],
            "g": [list(r) for r in seed.g],
            "word": list(seed.word),
            "acyclic": session.acyclic,
            "columns": columns,
        }

    async def _json_body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="body must be json") from None
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be a json object")
        return body

    @app.post("/sessions")
    async def create_session(request: Request):
        body = await _json_body(request)
        try:
            b = parse_quiver_document(body)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        session = _Session(seed=initial_seed(b), initial=b, acyclic=is_acyclic(b))
        sid = secrets.token_hex(8)
        with registry_lock:
            _sweep()
            sessions[sid] = session
        return {"id": sid, "state": _state(session)}

    @app.get("/sessions/{sid}")
    async def get_state(sid: str):
        session = _get(sid)
        with session.lock:
            return {"state": _state(session)}

    @app.post("/sessions/{sid}/mutate")
    async def mutate_session(sid: str, request: Request):
        session = _get(sid)
        body = await _json_body(request)
        k = body.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise HTTPException(status_code=400, detail="k must be an integer vertex")
        with session.lock:
            if not 1 <= k <= session.seed.n:
                raise HTTPException(
                    status_code=400,
                    detail=f"vertex {k} out of range 1..{session.seed.n}",
                )
            try:
                new_seed = session.seed.mutate(k)
            except MutationOverflowError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            session.history.append(session.seed)
            session.seed = new_seed
            return {"state": _state(session)}

    @app.post("/sessions/{sid}/undo")
    async def undo_session(sid: str):
        session = _get(sid)
        with session.lock:
            if session.history:
                session.seed = session.history.pop()
            return {"state": _state(session)}

    @app.post("/sessions/{sid}/enumerate")
    async def enumerate_session(sid: str, request: Request):
        session = _get(sid)
        body = await _json_body(request)
        depth = body.get("depth")
        if not isinstance(depth, int) or isinstance(depth, bool) or depth < 0:
            raise HTTPException(status_code=400, detail="depth must be an integer >= 0")
        if depth > enumerate_cap:
            raise HTTPException(
                status_code=400,
                detail=f"depth {depth} exceeds the configured cap {enumerate_cap}",
            )
        with session.lock:
            report = enumerate_c_vectors(session.initial, depth, max_seeds=max_seeds)
        return {
            "capped": report.capped,
            "closed": report.closed,
            "depth_reached": report.depth_reached,
            "negative_count": report.negative_count,
            "positive_c_vectors": [list(v) for v in sorted(report.positive_c_vectors)],
            "seeds_visited": report.seeds_visited,
        }

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
