"""HTTP service for practice and contest play.

Single-arbiter design: every submission passes through one lock where it
receives its authoritative arrival timestamp, so arbitration never
depends on client clocks. All round events go to an append-only log;
restarting the server replays the log and reconstructs identical state.

Endpoint and field reference lives in docs/API.md.
"""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path
from typing import Optional

from fastapi import Depends, FastAPI, Header, HTTPException
from pydantic import BaseModel

from . import contest as core
from .contest import Contest, team_score, timing_scores
from .eventlog import EventLog, read_events
from .manifest import Manifest


def now_ms() -> int:
    return int(time.time() * 1000)


class TeamConfig:
    """Static credentials: opaque token per team plus one admin token."""

    def __init__(self, admin_token: str, teams: dict[str, str]):
        self.admin_token = admin_token
        self.teams = dict(teams)  # team id -> token
        self.by_token = {tok: team for team, tok in teams.items()}

    @classmethod
    def load(cls, path: str | Path) -> "TeamConfig":
        doc = json.loads(Path(path).read_text())
        return cls(doc["admin_token"], doc["teams"])


class SubmitBody(BaseModel):
    pin: str


class CreateRoundBody(BaseModel):
    number: int
    offense: str
    defense: str
    index: Optional[int] = None  # contest-manifest entry; defaults to number
    clock_limit_ms: Optional[int] = None


class ComponentsBody(BaseModel):
    team: str
    rocket: float
    prediction: float
    aesthetics: float


def create_app(
    practice_manifest: Optional[Manifest],
    contest_manifest: Optional[Manifest],
    log_path: str | Path,
    teams: TeamConfig,
    clock_limit_ms: int = core.DEFAULT_CLOCK_LIMIT_MS,
) -> FastAPI:
    app = FastAPI(title="cipherduel")

    # crash recovery: rebuild contest state from the log, then resume logging
    duel = Contest.replay(read_events(log_path), default_clock_limit_ms=clock_limit_ms)
    log = EventLog(log_path)
    duel.sink = log.append

    app.state.contest = duel
    app.state.clock = now_ms
    app.state.lock = threading.Lock()
    app.state.teams = teams
    app.state.practice = practice_manifest
    app.state.contest_manifest = contest_manifest
    app.state.components: dict[str, dict] = {}

    def team_auth(x_auth_token: str = Header(default="")) -> str:
        team = teams.by_token.get(x_auth_token)
        if team is None:
            raise HTTPException(401, "unknown team token")
        return team

    def admin_auth(x_auth_token: str = Header(default="")) -> None:
        if x_auth_token != teams.admin_token:
            raise HTTPException(401, "admin token required")

    @app.get("/api/health")
    def health():
        return {"ok": True}

    @app.get("/api/practice/{index}")
    def get_practice(index: int, team: str = Depends(team_auth)):
        if practice_manifest is None:
            raise HTTPException(404, "no practice manifest loaded")
        try:
            entry = practice_manifest.entry(index)
        except KeyError:
            raise HTTPException(404, f"no practice ciphertext {index}")
        return entry.public_view()

    @app.get("/api/rounds/{number}")
    def round_status(number: int, team: str = Depends(team_auth)):
        rnd = duel.rounds.get(number)
        if rnd is None:
            if contest_manifest is not None and number in contest_manifest.entries:
                raise HTTPException(409, f"round {number} has not started")
            raise HTTPException(404, f"round {number} does not exist")
        return {
            "number": rnd.number,
            "state": rnd.state,
            "family": rnd.family,
            "ciphertext": rnd.ciphertext,
            "offense": rnd.offense,
            "defense": rnd.defense,
            "start_ms": rnd.start_ms,
            "clock_limit_ms": rnd.clock_limit_ms,
            "elapsed_ms": max(0, app.state.clock() - rnd.start_ms),
            "winner": rnd.winner,
            "outcome": rnd.outcome,
            "times": dict(sorted(rnd.times.items())),
            "version": rnd.version,
        }

    @app.post("/api/rounds/{number}/submit")
    def submit_pin(number: int, body: SubmitBody, team: str = Depends(team_auth)):
        with app.state.lock:  # serialization point: arrival order is decided here
            arrival = app.state.clock()
            try:
                verdict = duel.submit(number, team, body.pin, arrival)
            except KeyError:
                raise HTTPException(404, f"round {number} does not exist")
            except core.RoundFinalized as exc:
                raise HTTPException(409, str(exc))
            except core.UnknownTeam as exc:
                raise HTTPException(403, str(exc))
        return {
            "team": team,
            "correct": verdict["correct"],
            "first": verdict["first"],
            "outcome": verdict["outcome"],
        }

    @app.post("/api/admin/rounds", status_code=201)
    def create_round(body: CreateRoundBody, _: None = Depends(admin_auth)):
        if contest_manifest is None:
            raise HTTPException(409, "no contest manifest loaded")
        index = body.number if body.index is None else body.index
        try:
            entry = contest_manifest.entry(index)
        except KeyError:
            raise HTTPException(404, f"no contest ciphertext {index}")
        with app.state.lock:
            try:
                rnd = duel.start_round(
                    number=body.number,
                    offense=body.offense,
                    defense=body.defense,
                    family=entry.family,
                    ciphertext=entry.ciphertext,
                    answer_pin=entry.pin,
                    start_ms=app.state.clock(),
                    clock_limit_ms=body.clock_limit_ms,
                )
            except core.DuplicateRound as exc:
                raise HTTPException(409, str(exc))
            except core.SameTeam as exc:
                raise HTTPException(422, str(exc))
        return {
            "number": rnd.number,
            "start_ms": rnd.start_ms,
            "clock_limit_ms": rnd.clock_limit_ms,
        }

    @app.post("/api/admin/rounds/{number}/finalize")
    def finalize(number: int, _: None = Depends(admin_auth)):
        with app.state.lock:
            try:
                result = duel.finalize(number, app.state.clock())
            except KeyError:
                raise HTTPException(404, f"round {number} does not exist")
            except core.RoundStillOpen as exc:
                raise HTTPException(409, str(exc))
        return result.to_dict()

    @app.post("/api/admin/components")
    def set_components(body: ComponentsBody, _: None = Depends(admin_auth)):
        for name in ("rocket", "prediction", "aesthetics"):
            value = getattr(body, name)
            if not 0.0 <= value <= 1.0:
                raise HTTPException(422, f"{name}={value} outside [0, 1]")
        app.state.components[body.team] = {
            "rocket": body.rocket,
            "prediction": body.prediction,
            "aesthetics": body.aesthetics,
        }
        return {"ok": True}

    @app.get("/api/scoreboard")
    def scoreboard(team: str = Depends(team_auth)):
        started = set(duel.rounds)
        finalized = set(duel.results)
        if not started or started != finalized:
            return {
                "complete": False,
                "rounds_started": len(started),
                "rounds_finalized": len(finalized),
            }
        timing = timing_scores(duel.results.values())
        sheets = {}
        for team_id, scores in timing.items():
            comps = app.state.components.get(team_id)
            if comps is not None:
                sheets[team_id] = team_score(
                    rocket=comps["rocket"],
                    prediction=comps["prediction"],
                    aesthetics=comps["aesthetics"],
                    offense_time_score=scores["offense"],
                    defense_time_score=scores["defense"],
                ).to_dict()
        return {
            "complete": True,
            "timing": timing,
            "scoresheets": sheets,
            "results": {str(n): r.to_dict() for n, r in sorted(duel.results.items())},
        }

    return app
