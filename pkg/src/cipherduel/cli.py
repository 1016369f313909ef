"""Command-line operator and practice tool.

Subcommands: gen (write a challenge manifest), solve (exhaustive
additive/affine search), practice (interactive crib-attack loop),
serve (run the duel server), score (score sheets from an event log).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .ciphers import decipher, normalize
from .crib import NoSuchKey, recover_additive, recover_affine, recover_hill
from .eventlog import replay_file
from .forge import MalformedPin, SentenceCorpus, parse_pin
from .freq import (
    BLOCK_ALIGNED,
    SLIDING,
    EmptyText,
    brute_force_solve,
    digraph_frequency,
    letter_frequency,
    rank,
)
from .manifest import Manifest, generate_contest_manifest, generate_practice_manifest
from .contest import team_score, timing_scores


def _load_corpus(path: str | None) -> SentenceCorpus:
    return SentenceCorpus.from_file(path) if path else SentenceCorpus.default()


def cmd_gen(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.corpus)
    if args.kind == "practice":
        manifest = generate_practice_manifest(corpus, args.seed, args.sentences)
    else:
        manifest = generate_contest_manifest(corpus, args.rounds, args.seed, args.sentences)
    manifest.save(args.out)
    print(f"wrote {args.kind} manifest with {len(manifest.entries)} entries to {args.out}")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    if args.family == "hill":
        print("error: automated solving supports additive and affine only", file=sys.stderr)
        return 2
    cipher = normalize(Path(args.file).read_text())
    try:
        ranked = brute_force_solve(cipher, args.family)
    except EmptyText:
        print("error: ciphertext is empty after normalization", file=sys.stderr)
        return 2
    for key, fitness in ranked[: args.top]:
        print(f"{key}  fitness={fitness:.2f}")
    best = ranked[0][0]
    plaintext = decipher(cipher, best)
    print(f"rank-1 decryption: {plaintext[:80]}{'...' if len(plaintext) > 80 else ''}")
    try:
        pin = parse_pin(plaintext)
    except MalformedPin:
        print("no PIN found in rank-1 plaintext")
        return 1
    print(f"PIN: {pin}")
    return 0


def _show_distribution(cipher: str, family: str) -> None:
    if family == "hill":
        dist = digraph_frequency(cipher, BLOCK_ALIGNED)
        top = [(sym, _digraph_count(dist, sym)) for sym in rank(dist)[:10]]
        print("top digraphs (block-aligned):")
    else:
        ldist = letter_frequency(cipher)
        top = [(sym, ldist.counts[ord(sym) - 65]) for sym in rank(ldist)[:10]]
        print("top letters:")
    for sym, count in top:
        if count:
            print(f"  {sym}: {count}")


def _digraph_count(dist, sym: str) -> int:
    return dist.counts[ord(sym[0]) - 65][ord(sym[1]) - 65]


def cmd_practice(args: argparse.Namespace) -> int:
    manifest = Manifest.load(args.manifest)
    try:
        entry = manifest.entry(args.index)
    except KeyError:
        print(f"error: no entry {args.index} in manifest", file=sys.stderr)
        return 2
    cipher = entry.ciphertext
    family = entry.family
    print(f"ciphertext {entry.index} ({family}, {len(cipher)} letters):")
    print(cipher)
    key = None
    while True:
        action = input("[f]requencies  [g]uess/attack  [d]ecipher  [a]nswer PIN  [q]uit > ").strip().lower()
        if action.startswith("q"):
            return 0
        if action.startswith("f"):
            _show_distribution(cipher, family)
        elif action.startswith("g"):
            try:
                if family == "additive":
                    key = recover_additive(input("ciphertext letter for plaintext E: "))
                elif family == "affine":
                    key = recover_affine(
                        input("ciphertext letter for plaintext E: "),
                        input("ciphertext letter for plaintext T: "),
                    )
                else:
                    key = recover_hill(
                        input("ciphertext digraph for plaintext TH: "),
                        input("ciphertext digraph for plaintext HE: "),
                    )
                print(f"recovered key: {key}")
            except NoSuchKey:
                print("no such key is possible; revise the guesses")
            except ValueError as exc:
                print(f"bad input: {exc}")
        elif action.startswith("d"):
            if key is None:
                print("no key yet; run the attack first")
            else:
                trial = decipher(cipher, key)
                print(f"trial decryption: {trial}")
        elif action.startswith("a"):
            answer = input("PIN: ").strip()
            if answer == entry.pin:
                print("correct! cipher broken.")
                return 0
            print("incorrect PIN, keep trying")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import TeamConfig, create_app

    practice = Manifest.load(args.practice_manifest) if args.practice_manifest else None
    contest = Manifest.load(args.contest_manifest) if args.contest_manifest else None
    app = create_app(
        practice_manifest=practice,
        contest_manifest=contest,
        log_path=args.log,
        teams=TeamConfig.load(args.teams),
        clock_limit_ms=args.clock_limit_ms,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def cmd_score(args: argparse.Namespace) -> int:
    duel = replay_file(args.log)
    started, finalized = set(duel.rounds), set(duel.results)
    if not started or started != finalized:
        print("error: not all rounds are finalized", file=sys.stderr)
        return 1
    timing = timing_scores(duel.results.values())
    components = json.loads(Path(args.components).read_text()) if args.components else {}
    for team, scores in timing.items():
        comps = components.get(team)
        if comps:
            sheet = team_score(
                rocket=comps["rocket"],
                prediction=comps["prediction"],
                aesthetics=comps["aesthetics"],
                offense_time_score=scores["offense"],
                defense_time_score=scores["defense"],
            )
            print(f"{team}: total={sheet.total:.4f}  {sheet.to_dict()}")
        else:
            print(
                f"{team}: offense_time_score={scores['offense']:.4f}"
                f"  defense_time_score={scores['defense']:.4f}  (no judge components)"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cipherduel")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a challenge manifest")
    p.add_argument("--kind", choices=["practice", "contest"], required=True)
    p.add_argument("--corpus", help="sentence corpus file (default: bundled)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--rounds", type=int, default=4, help="contest rounds")
    p.add_argument("--sentences", type=int, default=8, help="sentences per message")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="exhaustive key search (additive/affine)")
    p.add_argument("file")
    p.add_argument("--family", choices=["additive", "affine", "hill"], required=True)
    p.add_argument("--top", type=int, default=5)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("practice", help="interactive crib-attack loop")
    p.add_argument("--manifest", required=True)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_practice)

    p = sub.add_parser("serve", help="run the duel server")
    p.add_argument("--practice-manifest")
    p.add_argument("--contest-manifest")
    p.add_argument("--log", required=True)
    p.add_argument("--teams", required=True, help="JSON credentials file")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--clock-limit-ms", type=int, default=600_000)
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("score", help="score sheets from a finalized event log")
    p.add_argument("--log", required=True)
    p.add_argument("--components", help="JSON of judge components per team")
    p.set_defaults(func=cmd_score)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
