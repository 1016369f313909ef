"""Round lifecycle, PIN verification, first-correct-submission
arbitration, dual stopwatch timing, and weighted scoring.

The state machine is deterministic given a total order of submissions;
the server provides that order through a single serialization point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

OPEN = "OPEN"
DECIDED = "DECIDED"
FINALIZED = "FINALIZED"

LAUNCH = "LAUNCH"
NO_LAUNCH = "NO_LAUNCH"

DEFAULT_CLOCK_LIMIT_MS = 600_000  # 10 minutes

# total = 0.65*rocket + 0.12*prediction + 0.03*aesthetics
#       + 0.10*offense_time + 0.10*defense_time
WEIGHTS = {
    "rocket": 0.65,
    "prediction": 0.12,
    "aesthetics": 0.03,
    "offense_time_score": 0.10,
    "defense_time_score": 0.10,
}


class ContestError(Exception):
    pass


class DuplicateRound(ContestError):
    pass


class SameTeam(ContestError):
    pass


class UnknownTeam(ContestError):
    pass


class RoundFinalized(ContestError):
    pass


class RoundStillOpen(ContestError):
    pass


class NoRounds(ContestError):
    pass


class ComponentOutOfRange(ContestError):
    pass


@dataclass(frozen=True)
class Submission:
    round_number: int
    team: str
    pin: str
    arrival_ms: int


@dataclass
class Round:
    number: int
    offense: str
    defense: str
    family: str
    ciphertext: str
    answer_pin: str
    start_ms: int
    clock_limit_ms: int
    state: str = OPEN
    times: dict[str, int] = field(default_factory=dict)
    winner: Optional[str] = None
    outcome: Optional[str] = None
    version: int = 0  # bumped on every state change, for client polling

    def deadline_ms(self) -> int:
        return self.start_ms + self.clock_limit_ms

    def to_dict(self) -> dict:
        return {
            "number": self.number,
            "offense": self.offense,
            "defense": self.defense,
            "family": self.family,
            "ciphertext": self.ciphertext,
            "start_ms": self.start_ms,
            "clock_limit_ms": self.clock_limit_ms,
            "state": self.state,
            "times": dict(sorted(self.times.items())),
            "winner": self.winner,
            "outcome": self.outcome,
            "version": self.version,
        }


@dataclass(frozen=True)
class RoundResult:
    round_number: int
    offense: str
    defense: str
    offense_time_ms: Optional[int]  # None = UNSOLVED
    defense_time_ms: Optional[int]
    outcome: str
    clock_limit_ms: int

    def to_dict(self) -> dict:
        return {
            "round_number": self.round_number,
            "offense": self.offense,
            "defense": self.defense,
            "offense_time_ms": self.offense_time_ms,
            "defense_time_ms": self.defense_time_ms,
            "outcome": self.outcome,
            "clock_limit_ms": self.clock_limit_ms,
        }


@dataclass(frozen=True)
class ScoreSheet:
    rocket: float
    prediction: float
    aesthetics: float
    offense_time_score: float
    defense_time_score: float
    total: float

    def to_dict(self) -> dict:
        return {
            "rocket": self.rocket,
            "prediction": self.prediction,
            "aesthetics": self.aesthetics,
            "offense_time_score": self.offense_time_score,
            "defense_time_score": self.defense_time_score,
            "total": self.total,
        }


def submit(rnd: Round, sub: Submission) -> dict:
    """Apply one submission to a round; returns the verdict.

    Wrong PIN never changes state. The first correct submission decides
    the round; a team's later correct submissions are idempotent. Exact
    arrival-time ties resolve to the defense (fail-safe no-launch).
    """
    if rnd.state == FINALIZED:
        raise RoundFinalized(f"round {rnd.number} is finalized")
    if sub.team not in (rnd.offense, rnd.defense):
        raise UnknownTeam(f"{sub.team!r} is not playing round {rnd.number}")
    if sub.pin != rnd.answer_pin:
        return {"correct": False, "first": False, "outcome": rnd.outcome}

    if sub.team not in rnd.times:
        rnd.times[sub.team] = sub.arrival_ms - rnd.start_ms
        rnd.version += 1
        if rnd.state == OPEN:
            rnd.state = DECIDED
            rnd.winner = sub.team
            rnd.outcome = LAUNCH if sub.team == rnd.offense else NO_LAUNCH
        elif (
            rnd.winner == rnd.offense
            and sub.team == rnd.defense
            and rnd.times[rnd.defense] == rnd.times[rnd.offense]
        ):
            # tie on the arbiter clock: fail-safe, defense wins
            rnd.winner = rnd.defense
            rnd.outcome = NO_LAUNCH
    return {"correct": True, "first": rnd.winner == sub.team, "outcome": rnd.outcome}


def finalize_round(rnd: Round, now_ms: int) -> RoundResult:
    """Close the round: missing times become UNSOLVED, state FINALIZED."""
    if rnd.state == OPEN and now_ms < rnd.deadline_ms():
        raise RoundStillOpen(
            f"round {rnd.number} has no decision and the clock has not expired"
        )
    if rnd.state != FINALIZED:
        rnd.state = FINALIZED
        if rnd.outcome is None:
            rnd.outcome = NO_LAUNCH
        rnd.version += 1
    return RoundResult(
        round_number=rnd.number,
        offense=rnd.offense,
        defense=rnd.defense,
        offense_time_ms=rnd.times.get(rnd.offense),
        defense_time_ms=rnd.times.get(rnd.defense),
        outcome=rnd.outcome,
        clock_limit_ms=rnd.clock_limit_ms,
    )


def timing_scores(results: Iterable[RoundResult]) -> dict[str, dict[str, float]]:
    """Per-team offense/defense timing scores over all finalized rounds.

    Every measured time (UNSOLVED counted as the round's clock limit)
    enters the pool; T_max is the pool maximum and each score is
    1 - t/T_max, clamped to [0, 1]. Faster is better.
    """
    results = list(results)
    if not results:
        raise NoRounds("no finalized rounds to score")

    def measured(t: Optional[int], limit: int) -> int:
        return limit if t is None else t

    pool = []
    for r in results:
        pool.append(measured(r.offense_time_ms, r.clock_limit_ms))
        pool.append(measured(r.defense_time_ms, r.clock_limit_ms))
    t_max = max(pool)

    def score(t: int) -> float:
        if t_max == 0:
            return 1.0
        return min(1.0, max(0.0, 1.0 - t / t_max))

    by_team: dict[str, dict[str, list[float]]] = {}
    for r in results:
        off = by_team.setdefault(r.offense, {"offense": [], "defense": []})
        off["offense"].append(score(measured(r.offense_time_ms, r.clock_limit_ms)))
        dfn = by_team.setdefault(r.defense, {"offense": [], "defense": []})
        dfn["defense"].append(score(measured(r.defense_time_ms, r.clock_limit_ms)))

    out: dict[str, dict[str, float]] = {}
    for team, roles in sorted(by_team.items()):
        out[team] = {
            role: (sum(vals) / len(vals) if vals else 0.0)
            for role, vals in roles.items()
        }
    return out


def team_score(
    rocket: float,
    prediction: float,
    aesthetics: float,
    offense_time_score: float,
    defense_time_score: float,
) -> ScoreSheet:
    """65/12/3/10/10 weighted total; every component must lie in [0, 1]."""
    components = {
        "rocket": rocket,
        "prediction": prediction,
        "aesthetics": aesthetics,
        "offense_time_score": offense_time_score,
        "defense_time_score": defense_time_score,
    }
    for name, value in components.items():
        if not 0.0 <= value <= 1.0:
            raise ComponentOutOfRange(f"{name}={value} outside [0, 1]")
    total = sum(WEIGHTS[name] * value for name, value in components.items())
    return ScoreSheet(total=total, **components)


class Contest:
    """Owns all rounds, enforces the round registry rules, and emits one
    self-contained event per state change to an optional sink."""

    def __init__(
        self,
        sink: Optional[Callable[[dict], None]] = None,
        default_clock_limit_ms: int = DEFAULT_CLOCK_LIMIT_MS,
    ):
        self.rounds: dict[int, Round] = {}
        self.results: dict[int, RoundResult] = {}
        self.sink = sink
        self.default_clock_limit_ms = default_clock_limit_ms

    def _emit(self, event: dict) -> None:
        if self.sink is not None:
            self.sink(event)

    def start_round(
        self,
        number: int,
        offense: str,
        defense: str,
        family: str,
        ciphertext: str,
        answer_pin: str,
        start_ms: int,
        clock_limit_ms: Optional[int] = None,
    ) -> Round:
        if number in self.rounds:
            raise DuplicateRound(f"round {number} already exists")
        if offense == defense:
            raise SameTeam(f"offense and defense are both {offense!r}")
        rnd = Round(
            number=number,
            offense=offense,
            defense=defense,
            family=family,
            ciphertext=ciphertext,
            answer_pin=answer_pin,
            start_ms=start_ms,
            clock_limit_ms=(
                self.default_clock_limit_ms if clock_limit_ms is None else clock_limit_ms
            ),
        )
        self.rounds[number] = rnd
        self._emit(
            {
                "type": "round_started",
                "round": number,
                "offense": offense,
                "defense": defense,
                "family": family,
                "ciphertext": ciphertext,
                "pin": answer_pin,
                "start_ms": start_ms,
                "clock_limit_ms": rnd.clock_limit_ms,
            }
        )
        return rnd

    def get_round(self, number: int) -> Round:
        if number not in self.rounds:
            raise KeyError(f"round {number} does not exist")
        return self.rounds[number]

    def submit(self, number: int, team: str, pin: str, arrival_ms: int) -> dict:
        rnd = self.get_round(number)
        sub = Submission(number, team, pin, arrival_ms)
        before = (rnd.winner, rnd.outcome)
        verdict = submit(rnd, sub)
        self._emit(
            {
                "type": "submission",
                "round": number,
                "team": team,
                "pin": pin,
                "arrival_ms": arrival_ms,
                "correct": verdict["correct"],
            }
        )
        if (rnd.winner, rnd.outcome) != before:
            self._emit(
                {
                    "type": "decision",
                    "round": number,
                    "winner": rnd.winner,
                    "outcome": rnd.outcome,
                    "decided_ms": arrival_ms,
                }
            )
        return verdict

    def finalize(self, number: int, now_ms: int) -> RoundResult:
        rnd = self.get_round(number)
        if number in self.results:
            return self.results[number]
        result = finalize_round(rnd, now_ms)
        self.results[number] = result
        self._emit(
            {
                "type": "finalized",
                "round": number,
                "now_ms": now_ms,
                "result": result.to_dict(),
            }
        )
        return result

    def snapshot(self) -> dict:
        """Deterministic serializable view of the whole contest state."""
        return {
            "rounds": {str(n): r.to_dict() for n, r in sorted(self.rounds.items())},
            "results": {str(n): r.to_dict() for n, r in sorted(self.results.items())},
        }

    def apply_event(self, event: dict) -> None:
        """Replay one logged event; decisions are re-derived, not trusted."""
        kind = event["type"]
        if kind == "round_started":
            self.start_round(
                number=event["round"],
                offense=event["offense"],
                defense=event["defense"],
                family=event["family"],
                ciphertext=event["ciphertext"],
                answer_pin=event["pin"],
                start_ms=event["start_ms"],
                clock_limit_ms=event["clock_limit_ms"],
            )
        elif kind == "submission":
            self.submit(event["round"], event["team"], event["pin"], event["arrival_ms"])
        elif kind == "decision":
            pass  # derived state, re-created by replaying submissions
        elif kind == "finalized":
            self.finalize(event["round"], event["now_ms"])
        else:
            raise ValueError(f"unknown event type {kind!r}")

    @classmethod
    def replay(cls, events: Iterable[dict], **kwargs) -> "Contest":
        contest = cls(sink=None, **kwargs)
        for event in events:
            contest.apply_event(event)
        return contest
