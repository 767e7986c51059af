"""Command-line front end.

Usage: fpwords COMMAND INPUT.json [--json OUT] [--m M] [--max-length L] [--quiet]

Exit status is 0 on success, 1 when a theorem violation or verification
failure was found and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional

from . import __version__
from .cancellation import (
    CertifiedByClassification,
    CertifiedByTiling,
    NotCertified,
    PieceQuery,
    c6_status,
    min_zone_tiling,
    validate_tiling,
)
from .classify import (
    UP,
    FormAM,
    FormAXBX,
    OutOfScope,
    TheoremViolation,
    classify,
    find_up_decomposition,
    is_exceptional,
    lemma_up_criterion,
    marker_decomposition,
    two_length,
)
from .enumerate import (
    RAW_WORD_CAP,
    EnumerationTooLarge,
    EnumSpec,
    classes_of_length,
    estimate_raw_words,
    run_verification,
)
from .groups import GroupError, build_group
from .words import FreeProduct, ProperPowerError, WordError

COMMANDS = ("analyze", "classify", "pieces", "tile", "enumerate", "verify")


class InputError(ValueError):
    pass


def load_document(path: str) -> tuple[dict, str]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise InputError(f"{path} is not valid UTF-8 JSON: {e}") from None
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    return doc, hashlib.sha256(raw).hexdigest()


def free_product_from(doc: dict) -> FreeProduct:
    groups = doc.get("groups")
    if not isinstance(groups, list) or len(groups) != 2:
        raise InputError("'groups' must list exactly two group specs")
    return FreeProduct(build_group(groups[0]), build_group(groups[1]))


def resolve_word(fp: FreeProduct, literal) -> tuple:
    if not isinstance(literal, list) or not all(isinstance(x, str) for x in literal):
        raise InputError(f"word literal must be an array of letter names: {literal!r}")
    w, _ = fp.cyclically_reduce(fp.parse(literal))
    if len(w) < 2:
        raise InputError(f"word {literal} reduces to a cyclic word of length {len(w)}; need length >= 2")
    return w


# serialization


def classification_json(fp: FreeProduct, c) -> dict:
    if isinstance(c, UP):
        d = c.decomposition
        return {"tag": "UP", "rotation": d.rotation, "split": d.split, "U": fp.format(d.u), "V": fp.format(d.v)}
    if isinstance(c, FormAM):
        return {"tag": "FormAM", "rotation": c.rotation, "a": fp.name(c.a), "M": fp.format(c.m)}
    if isinstance(c, FormAXBX):
        return {
            "tag": "FormAXBX",
            "rotation": c.rotation,
            "a": fp.name(c.a),
            "X": fp.format(c.x),
            "b": fp.name(c.b),
            "b_order2": c.b_order2,
        }
    return {"tag": "OutOfScope", "d2": c.d2}


def c6_json(fp: FreeProduct, s) -> dict:
    if isinstance(s, CertifiedByTiling):
        return {"route": s.route, "d_min": s.d_min}
    if isinstance(s, CertifiedByClassification):
        return {"route": s.route, "case": s.case, "d_min": s.d_min}
    if isinstance(s, NotCertified):
        return {"route": s.route, "d_min": s.d_min, "witness": classification_json(fp, s.witness)}
    raise TypeError(s)


def tiling_json(fp: FreeProduct, q: PieceQuery) -> dict:
    t = min_zone_tiling(q)
    return {
        "d_min": t.d_min,
        "offset": t.offset,
        "witness": [{"piece": fp.format(s.piece), "junction": fp.name(s.junction)} for s in t.witness],
        "valid": validate_tiling(q, t),
    }


def classify_report(fp: FreeProduct, w) -> dict:
    tl = two_length(fp, w)
    rep = {
        "word": fp.format(w),
        "d2": tl.d2,
        "counts": {fp.name(a): k for a, k in tl.counts.items()},
        "violations": [],
    }
    try:
        rep["classification"] = classification_json(fp, classify(fp, w))
    except TheoremViolation as e:
        rep["classification"] = None
        rep["violations"].append(str(e))
    exc, witness = is_exceptional(fp, w)
    rep["exceptional"] = exc
    rep["exceptional_witness"] = classification_json(fp, witness) if exc else None
    return rep


def analyze_report(fp: FreeProduct, w, m: int) -> dict:
    rep = classify_report(fp, w)
    tl = two_length(fp, w)
    if tl.d2 >= 1:
        marker = min(a for a, k in tl.counts.items() if k == tl.d2)
        md = marker_decomposition(fp, w, marker)
        rep["marker"] = {"a": fp.name(marker), "rotation": md.rotation, "segments": [fp.format(s) for s in md.segments]}
    else:
        rep["marker"] = None
    dec = find_up_decomposition(fp, w)
    rep["up_decomposition"] = (
        {"rotation": dec.rotation, "split": dec.split, "U": fp.format(dec.u), "V": fp.format(dec.v)} if dec else None
    )
    if tl.d2 == 1:
        rep["lemma_criterion"] = lemma_up_criterion(fp, w)[0]
    else:
        rep["lemma_criterion"] = None
    if tl.d2 > 2:
        rep["c6"] = {"route": "out_of_scope"}
    elif rep["violations"]:
        rep["c6"] = None
    else:
        rep["c6"] = c6_json(fp, c6_status(fp, w, m))
    return rep


def pieces_report(fp: FreeProduct, w, m: int) -> dict:
    q = PieceQuery(fp, w, m)
    return {
        "word": fp.format(w),
        "m": m,
        "n": q.n,
        "N": q.N,
        "pieces": {"+1": q.piece_intervals(1), "-1": q.piece_intervals(-1)},
    }


def tile_report(fp: FreeProduct, w, m: int) -> dict:
    q = PieceQuery(fp, w, m)
    return {"word": fp.format(w), "m": m, **tiling_json(fp, q)}


def enum_spec_from(doc: dict, fp: FreeProduct, args) -> EnumSpec:
    max_length = args.max_length if args.max_length is not None else doc.get("max_length")
    if max_length is None:
        raise InputError("max_length is required for enumerate/verify")
    filters = doc.get("filters", {})
    try:
        spec = EnumSpec(
            fp.g1,
            fp.g2,
            int(max_length),
            m=_m(doc, args),
            min_length=int(doc.get("min_length", 2)),
            require_primitive=bool(filters.get("require_primitive", True)),
            max_d2=filters.get("max_d2", 2),
            d2_exact=filters.get("d2_exact"),
        )
    except ValueError as e:
        raise InputError(str(e)) from None
    est = estimate_raw_words(spec)
    if est > RAW_WORD_CAP:
        raise EnumerationTooLarge(est)
    return spec


def _m(doc: dict, args) -> int:
    m = args.m if args.m is not None else int(doc.get("m", 3))
    if m < 3:
        raise InputError("m must be at least 3")
    return m


def enumerate_report(fp: FreeProduct, spec: EnumSpec) -> tuple[dict, bool]:
    out, complete = {}, True
    for L in spec.lengths():
        raw, reps = classes_of_length(fp, spec, L)
        orbit_sum = sum(c.orbit_size for c in reps)
        complete &= orbit_sum == raw
        out[str(L)] = {
            "words": raw,
            "classes": len(reps),
            "orbit_sum": orbit_sum,
            "reps": [{"word": fp.format(c.rep), "orbit_size": c.orbit_size} for c in reps],
        }
    return {"spec": spec.describe(), "per_length": out, "complete": complete}, complete


# text rendering


def _text_word_report(rep: dict) -> str:
    lines = [f"word: {' '.join(rep['word'])}"]
    for key in ("d2", "counts", "classification", "exceptional", "marker", "up_decomposition",
                "lemma_criterion", "c6", "d_min", "witness", "pieces", "violations"):
        if key in rep:
            lines.append(f"  {key}: {json.dumps(rep[key], ensure_ascii=False)}")
    return "\n".join(lines)


def run(command: str, path: str, json_out: Optional[str] = None, m: Optional[int] = None,
        max_length: Optional[int] = None, quiet: bool = False, stdout=None) -> int:
    """Execute one CLI command; returns the process exit status."""
    stdout = stdout or sys.stdout
    args = argparse.Namespace(m=m, max_length=max_length)
    status = 0
    try:
        doc, digest = load_document(path)
        fp = free_product_from(doc)
        payload = {"tool": "fpwords", "version": __version__, "input_sha256": digest, "command": command}
        text = []
        if command in ("analyze", "classify", "pieces", "tile"):
            literals = doc.get("words")
            if not literals:
                raise InputError(f"'{command}' needs a non-empty 'words' list")
            mm = _m(doc, args)
            results = []
            for lit in literals:
                w = resolve_word(fp, lit)
                fp.check_cyclic(w)
                if command == "analyze":
                    rep = analyze_report(fp, w, mm)
                elif command == "classify":
                    rep = classify_report(fp, w)
                elif command == "pieces":
                    rep = pieces_report(fp, w, mm)
                else:
                    rep = tile_report(fp, w, mm)
                if rep.get("violations"):
                    status = 1
                results.append(rep)
                text.append(_text_word_report(rep))
            payload["results"] = results
        elif command == "enumerate":
            spec = enum_spec_from(doc, fp, args)
            rep, complete = enumerate_report(fp, spec)
            payload["report"] = rep
            status = 0 if complete else 1
            text.append("\n".join(
                f"length {L}: {v['words']} words, {v['classes']} classes" for L, v in rep["per_length"].items()
            ))
        elif command == "verify":
            spec = enum_spec_from(doc, fp, args)
            report = run_verification(spec)
            payload["report"] = report.to_dict()
            status = 0 if report.passed else 1
            text.append(report.summary())
        else:
            raise InputError(f"unknown command {command!r}")
    except ProperPowerError as e:
        return _fail(json_out, {"error": str(e), "root": fp.format(e.root), "exponent": e.exponent}, quiet)
    except (InputError, GroupError, WordError, EnumerationTooLarge) as e:
        return _fail(json_out, {"error": str(e)}, quiet)
    if not quiet:
        print("\n".join(text), file=stdout)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    return status


def _fail(json_out, payload: dict, quiet: bool) -> int:
    if not quiet:
        print(f"error: {payload['error']}", file=sys.stderr)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    return 2


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="fpwords", description="Analyze cyclic words in a free product of two finite groups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="UTF-8 JSON input document")
    p.add_argument("--json", dest="json_out", metavar="PATH", help="write the machine-readable report here")
    p.add_argument("--m", type=int, help="relator exponent (default from input, else 3)")
    p.add_argument("--max-length", type=int, help="longest word length for enumerate/verify")
    p.add_argument("--quiet", action="store_true")
    a = p.parse_args(argv)
    return run(a.command, a.input, a.json_out, a.m, a.max_length, a.quiet)


if __name__ == "__main__":
    sys.exit(main())
