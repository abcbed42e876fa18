"""Command-line interface: comparison, classification, factorization,
transforms, family verification, and circ-UMFF construction.

Words are read as raw character strings by default; ``--ints`` switches to
whitespace- or comma-separated integer symbols.  Unless ``--alphabet`` is
given, the alphabet is the sorted set of symbols occurring in the input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import canonical, families, suites, transforms
from .builder import build_circ_umff
from .errors import NotPrimitiveError, WordforgeError
from .orders import Comparison, OrderSpec, cmp
from .words import Alphabet, Word, rotations, star_delete_position, star_path

MAX_LEN_ENV = "WORDFORGE_MAX_LEN"

_VERDICT_TEXT = {
    Comparison.LESS: "LT",
    Comparison.EQUAL: "EQ",
    Comparison.GREATER: "GT",
}


def _expand_alphabet_spec(spec: str, ints: bool) -> tuple:
    if ints:
        symbols: list = []
        for token in spec.replace(",", " ").split():
            if "-" in token[1:]:
                lo, hi = token.split("-", 1)
                symbols.extend(range(int(lo), int(hi) + 1))
            else:
                symbols.append(int(token))
        return tuple(symbols)
    if len(spec) == 3 and spec[1] == "-":
        return tuple(chr(c) for c in range(ord(spec[0]), ord(spec[2]) + 1))
    return tuple(spec)


def _tokenize(text: str, ints: bool) -> list:
    if ints:
        return [int(t) for t in text.replace(",", " ").split()]
    return list(text)


def _parse_words(texts: list[str], args) -> list[Word]:
    ints = getattr(args, "ints", False)
    token_lists = [_tokenize(t, ints) for t in texts]
    spec = getattr(args, "alphabet", None)
    if spec:
        symbols = _expand_alphabet_spec(spec, ints)
    else:
        symbols = tuple(sorted({tok for toks in token_lists for tok in toks}))
    alphabet = Alphabet(symbols)
    return [alphabet.word(toks) for toks in token_lists]


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"v": 1, **payload}, sort_keys=True))
    else:
        print(text)


def _trace_block(label: str, w: Word) -> list[str]:
    lines = [f"{label}:"]
    for step in star_path(w):
        if len(step) == 0:
            lines.append("  ε")
            break
        h = star_delete_position(step)
        rendered = " ".join(
            f"[{step.alphabet.symbol(r)}]" if i == h else str(step.alphabet.symbol(r))
            for i, r in enumerate(step.ranks)
        )
        lines.append(f"  {rendered}")
    return lines


def _cmd_cmp(args) -> int:
    order = OrderSpec.parse(args.order)
    x, y = _parse_words([args.x, args.y], args)
    verdict = _VERDICT_TEXT[cmp(order, x, y)]
    if args.trace and order.kind == "vorder" and not args.json:
        for block in (_trace_block(str(x), x), _trace_block(str(y), y)):
            for line in block:
                print(line)
    _emit(
        args,
        {"command": "cmp", "order": str(order), "x": x.text(), "y": y.text(),
         "result": verdict},
        verdict,
    )
    return 0


def _cmd_classify(args) -> int:
    (w,) = _parse_words([args.word], args)
    orders = [OrderSpec.parse(tok) for tok in args.orders.split(",") if tok]
    try:
        report = canonical.classify(w, orders)
    except NotPrimitiveError:
        from .words import is_border_free

        payload = {
            "command": "classify", "word": w.text(), "primitive": False,
            "lyndon": False, "v_word": False, "galois": False,
            "border_free": is_border_free(w), "minima": None,
            "note": "word is a repetition; rotation minima are not unique",
        }
        text = (
            f"word: {w}\nprimitive: no (rotation minima are not unique; flags only)\n"
            f"border-free: {'yes' if payload['border_free'] else 'no'}"
        )
        _emit(args, payload, text)
        return 0
    rots = rotations(w)
    lines = [
        f"word: {w}",
        "primitive: yes",
        f"lyndon: {'yes' if report.lyndon else 'no'}",
        f"v-word: {'yes' if report.v_word else 'no'}",
        f"galois: {'yes' if report.galois else 'no'}",
        f"border-free: {'yes' if report.border_free else 'no'}",
        "minima:",
    ]
    minima_payload = {}
    for name, index in report.minima.items():
        lines.append(f"  {name:<12} -> {rots[index]}  (rotation {index})")
        minima_payload[name] = {"rotation": index, "word": rots[index].text()}
    payload = {
        "command": "classify", "word": w.text(), "primitive": True,
        "lyndon": report.lyndon, "v_word": report.v_word,
        "galois": report.galois, "border_free": report.border_free,
        "minima": minima_payload,
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def _resolve_family(spec: str, args) -> families.FactorFamily:
    if spec.startswith("builtin:"):
        name = spec.split(":", 1)[1]
        if name not in families.BUILTIN_FAMILIES:
            raise WordforgeError(
                f"unknown builtin family {name!r}; "
                f"choose from {sorted(families.BUILTIN_FAMILIES)}"
            )
        alphabet_spec = getattr(args, "alphabet", None)
        ints = getattr(args, "ints", False)
        symbols = _expand_alphabet_spec(alphabet_spec, ints) if alphabet_spec else ("a", "b")
        fam = families.BUILTIN_FAMILIES[name](Alphabet(symbols))
        max_len = getattr(args, "family_max_len", None)
        if max_len:
            fam = families.FactorFamily(
                fam.name, fam.alphabet, members=fam.members_up_to(max_len)
            )
        return fam
    return families.load_family(spec)


def _cmd_factor(args) -> int:
    method = args.method
    if method.startswith("family:"):
        fam = families.load_family(method.split(":", 1)[1])
        tokens = _tokenize(args.word, getattr(args, "ints", False))
        w = fam.alphabet.word(tokens)
        result = families.maximal_factorization(fam, w)
    else:
        (w,) = _parse_words([args.word], args)
        if method == "lyndon":
            result = canonical.duval_factorization(w)
        elif method == "vword":
            result = canonical.v_factorization(w)
        else:
            raise WordforgeError(
                f"unknown factorization method {method!r}; "
                "use lyndon, vword, or family:<file>"
            )
    _emit(
        args,
        {"command": "factor", "word": w.text(), "method": method,
         "factors": [f.text() for f in result.factors]},
        str(result),
    )
    return 0


def _cmd_build(args) -> int:
    fam = _resolve_family(args.family, args)
    result = build_circ_umff(fam, args.cap)
    notes = {r.word: r.note() for r in result.records}
    if args.emit == "json" or args.json:
        payload = {
            "v": 1, "command": "build-circ-umff", "cap": result.length_cap,
            "alphabet": [str(s) for s in fam.alphabet.symbols],
            "members": [
                {"word": r.word.text(), "source": r.source,
                 "pair": [p.text() for p in r.pair] if r.pair else None}
                for r in result.records
            ],
        }
        out = json.dumps(payload, sort_keys=True)
    else:
        out = families.dump_family(
            result.words(), fam.alphabet,
            header=f"circ-UMFF up to length {result.length_cap}", notes=notes,
        ).rstrip("\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def _cmd_verify(args) -> int:
    max_len = args.max_len
    if max_len is None and os.environ.get(MAX_LEN_ENV):
        max_len = int(os.environ[MAX_LEN_ENV])
    checks = suites.SUITES[args.suite](max_len)
    failed = [c for c in checks if not c.passed]
    if args.json:
        payload = {
            "v": 1, "command": "verify", "suite": args.suite,
            "max_len": max_len,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in checks
            ],
            "ok": not failed,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for c in checks:
            print(c.message())
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 1 if failed else 0


def _read_input(args) -> str:
    if args.infile:
        with open(args.infile, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    if args.text is None:
        raise WordforgeError("provide a word argument or --in <file>")
    return args.text


def _cmd_bwt(args) -> int:
    text = _read_input(args)
    if transforms.SENTINEL in text:
        raise WordforgeError("input must not contain the sentinel '$'")
    alphabet = Alphabet(tuple(sorted(set(text)))) if text else Alphabet.characters("a")
    body = alphabet.word(text)
    out = transforms.bwt(body)
    _emit(args, {"command": "bwt", "input": text, "output": out.text()}, out.text())
    return 0


def _cmd_unbwt(args) -> int:
    text = _read_input(args)
    others = sorted(set(text) - {transforms.SENTINEL})
    base = Alphabet(tuple(others)) if others else Alphabet.characters("a")
    ext = transforms.sentinel_alphabet(base)
    word = ext.word(text)
    out = transforms.bwt_inverse(word)
    _emit(args, {"command": "unbwt", "input": text, "output": out.text()}, out.text())
    return 0


def _cmd_abwt(args) -> int:
    text = _read_input(args)
    alphabet = Alphabet(tuple(sorted(set(text))))
    w = alphabet.word(text)
    last, index = transforms.abwt(w)
    _emit(
        args,
        {"command": "abwt", "input": text, "output": last.text(), "index": index},
        f"{last.text()}\nindex {index}",
    )
    return 0


def _add_word_options(sub, *, ints: bool = True) -> None:
    if ints:
        sub.add_argument("--ints", action="store_true",
                         help="read words as whitespace/comma separated integers")
    sub.add_argument("--alphabet", help="alphabet spec (e.g. 'ab', 'a-z', or '1-9')")
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordforge",
        description="orders, canonical rotations, and factorization families on words",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cmp", help="compare two words under an order")
    p.add_argument("order", help="lex|colex|relex|alt|modalt|vorder|lexext:<inner>")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--trace", action="store_true",
                   help="print the star-deletion paths (vorder only)")
    _add_word_options(p)
    p.set_defaults(func=_cmd_cmp)

    p = sub.add_parser("classify", help="per-order minimal rotations and class flags")
    p.add_argument("word")
    p.add_argument("--orders", default="lex,vorder,colex,relex,alt",
                   help="comma-separated order names")
    _add_word_options(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("factor", help="factor a word over a family")
    p.add_argument("word")
    p.add_argument("--method", required=True, help="lyndon | vword | family:<file>")
    _add_word_options(p)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("build-circ-umff",
                       help="enlarge a binary border-free UMFF to a circ-UMFF")
    p.add_argument("--family", required=True, help="family file or builtin:<name>")
    p.add_argument("--cap", type=int, required=True, help="length bound of the result")
    p.add_argument("--family-max-len", type=int,
                   help="truncate a builtin input family at this length")
    p.add_argument("--emit", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the result to a file instead of stdout")
    _add_word_options(p)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(suites.SUITES), required=True)
    p.add_argument("--max-len", type=int,
                   help=f"sweep bound (default per suite; ${MAX_LEN_ENV} overrides)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    for name, handler, help_text in (
        ("bwt", _cmd_bwt, "Burrows-Wheeler transform (sentinel appended)"),
        ("unbwt", _cmd_unbwt, "invert a Burrows-Wheeler transform"),
        ("abwt", _cmd_abwt, "alternating-order transform of a primitive word"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("text", nargs="?", help="input word")
        p.add_argument("--in", dest="infile", help="read the input from a file")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=handler)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WordforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
