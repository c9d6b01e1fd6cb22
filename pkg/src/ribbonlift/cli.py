"""Command line tool ``ribbonlift``.

Every command prints one JSON report (keys sorted, fixed indentation) with
the command name, a SHA-256 digest of the canonical form of its inputs, the
result and the warnings raised on the way. Errors go to standard error as a
JSON object ``{"error": <code>, ...}`` with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import warnings
from dataclasses import asdict

from . import bounds, defect, diagram, lift, ribbon, seifert
from .errors import BudgetExceeded, ParseError, RibbonLiftError, UnknownCommand
from .formats import (
    detect_kind,
    emit_diagram,
    emit_ribbon,
    emit_word,
    parse_diagram,
    parse_ribbon,
    parse_word,
)

EXIT_CODES = {
    "SyntaxError": 2,
    "UnknownCommand": 3,
    "NotPermutation": 10,
    "NotInvolution": 11,
    "LowValence": 12,
    "EmptyGraph": 13,
    "Disconnected": 14,
    "InvalidGenus": 15,
    "DartNotInVertex": 16,
    "UnknownVertex": 17,
    "MissingColour": 18,
    "NotPlanar": 19,
    "BudgetExceeded": 20,
    "NotGenusZero": 30,
    "CrossingValence": 31,
    "ClosedStrand": 32,
    "BadTrueVertex": 33,
    "NotFourValent": 34,
    "NotDoubleOccurrence": 40,
    "NegativeRamification": 41,
    "UnknownGraph": 50,
    "DartSetMismatch": 60,
    "AlphaMismatch": 61,
    "IOError": 70,
}


def _ribbon_payload(g):
    return {"darts": g.num_darts, "sigma": list(g.sigma), "alpha": list(g.alpha),
            "colours": {str(d): c for d, c in g.colours}, "text": emit_ribbon(g)}


def _invariants(g):
    return asdict(ribbon.surface_invariants(g))


class _Inputs:
    """Reads and parses input files, remembering canonical texts for the digest."""

    def __init__(self, args):
        self.args = args
        self.canonical = []

    def _read(self, path):
        try:
            with open(path) as f:
                return f.read()
        except OSError as exc:
            err = RibbonLiftError("cannot read %s: %s" % (path, exc.strerror))
            err.code = "IOError"
            raise err from None

    def ribbon(self, path):
        g = parse_ribbon(self._read(path), self.args.allow_low_valence)
        self.canonical.append(emit_ribbon(g))
        return g

    def diagram(self, path):
        d = parse_diagram(self._read(path))
        self.canonical.append(emit_diagram(d))
        return d

    def word(self, path):
        w = parse_word(self._read(path))
        self.canonical.append(emit_word(w))
        return w

    def any(self, path):
        text = self._read(path)
        kind = detect_kind(text)
        if kind == "ribbon":
            obj = parse_ribbon(text, self.args.allow_low_valence)
            self.canonical.append(emit_ribbon(obj))
        elif kind == "diagram":
            obj = parse_diagram(text)
            self.canonical.append(emit_diagram(obj))
        else:
            obj = parse_word(text)
            self.canonical.append(emit_word(obj))
        return kind, obj

    def digest(self):
        h = hashlib.sha256()
        for t in self.canonical:
            h.update(t.encode())
            h.update(b"\0")
        return h.hexdigest()


def _need(files, k, command):
    if not (k[0] <= len(files) <= k[1]):
        want = str(k[0]) if k[0] == k[1] else "%d to %d" % k
        raise ParseError("%s takes %s input file(s), got %d" % (command, want, len(files)))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_validate(inp, files, args):
    _need(files, (1, 1), "validate")
    kind, _ = inp.any(files[0])
    return {"kind": kind, "valid": True}


def cmd_genus(inp, files, args):
    _need(files, (1, 1), "genus")
    return _invariants(inp.ribbon(files[0]))


def cmd_faces(inp, files, args):
    _need(files, (1, 1), "faces")
    faces = ribbon.orbits(inp.ribbon(files[0]), "face")
    return {"num_faces": len(faces), "faces": [list(f) for f in faces]}


def cmd_components(inp, files, args):
    _need(files, (1, 1), "components")
    g = inp.ribbon(files[0])
    comps = ribbon.connected_components(g, with_labels=True)
    return {"components": [dict(_ribbon_payload(c), original_darts=list(lab)) for c, lab in comps]}


def cmd_bouquet(inp, files, args):
    _need(files, (0, 0), "bouquet")
    if args.genus is None:
        raise ParseError("bouquet needs --genus")
    inp.canonical.append("bouquet %d" % args.genus)
    g = ribbon.canonical_bouquet(args.genus)
    return {"ribbon": _ribbon_payload(g), "invariants": _invariants(g)}


def cmd_trivalent(inp, files, args):
    _need(files, (1, 1), "trivalent")
    g = ribbon.make_trivalent(inp.ribbon(files[0]))
    return {"ribbon": _ribbon_payload(g), "invariants": _invariants(g)}


def cmd_mingenus(inp, files, args):
    _need(files, (1, 1), "mingenus")
    g = inp.ribbon(files[0])
    G = ribbon.underlying_abstract_graph(g)
    budget = args.budget if args.budget is not None else 10**6
    return {"min_genus": ribbon.min_genus_over_rotations(G, budget=budget, jobs=args.jobs),
            "genus": ribbon.genus(g)}


def cmd_colourrotate(inp, files, args):
    _need(files, (1, 1), "colourrotate")
    g = ribbon.rotation_from_colours(inp.ribbon(files[0]))
    return {"ribbon": _ribbon_payload(g), "invariants": _invariants(g)}


def cmd_resolve(inp, files, args):
    _need(files, (1, 1), "resolve")
    g = diagram.resolve_all_crossings(inp.diagram(files[0]))
    return {"ribbon": _ribbon_payload(g), "invariants": _invariants(g)}


def cmd_restore(inp, files, args):
    _need(files, (1, 1), "restore")
    steps = diagram.restore_all(inp.diagram(files[0]))
    return {"genus_steps": [ribbon.genus(g) for g in steps], "ribbon": _ribbon_payload(steps[-1])}


def cmd_unkink(inp, files, args):
    _need(files, (1, 1), "unkink")
    d = inp.diagram(files[0])
    out = diagram.remove_edge_self_crossings(d)
    return {"crossings_before": diagram.crossing_count(d),
            "crossings_after": diagram.crossing_count(out),
            "diagram": emit_diagram(out)}


def cmd_seifert(inp, files, args):
    _need(files, (1, 1), "seifert")
    return asdict(seifert.fill_surface(inp.word(files[0])))


def cmd_lift(inp, files, args):
    _need(files, (1, 1), "lift")
    r = lift.build_covering(inp.diagram(files[0]))
    return {
        "chi_N": r.chi_N,
        "chi_Y": r.chi_Y,
        "genus_Y": r.genus_Y,
        "degree": r.degree,
        "branch_count": r.branch_count,
        "riemann_hurwitz": lift.check_riemann_hurwitz(r),
        "circles": [
            {"face_cycle": list(c.face_cycle), "word": list(c.self_crossing_word.word),
             "m": c.seifert.num_seifert_circles, "d": c.seifert.num_crossings,
             "genus_sigma": c.seifert.genus_sigma}
            for c in r.circles
        ],
    }


def cmd_bounds(inp, files, args):
    _need(files, (1, 1), "bounds")
    g = inp.ribbon(files[0])
    genus = args.genus if args.genus is not None else ribbon.genus(g)
    inp.canonical.append("genus %d" % genus)
    kw = {"max_k": args.max_k}
    if args.budget is not None:
        kw["budget"] = args.budget
    rep = bounds.self_intersection_lower_bound(genus, ribbon.underlying_abstract_graph(g), **kw)
    return asdict(rep)


def cmd_defect(inp, files, args):
    _need(files, (1, 2), "defect")
    prescribed = inp.ribbon(files[0])
    if len(files) == 2:
        emb = inp.ribbon(files[1])
        n = defect.defect_against(prescribed, emb)
        return {"defect": n, "embedding_genus": ribbon.genus(emb)}
    return asdict(defect.min_defect(prescribed))


COMMANDS = {
    "validate": cmd_validate,
    "genus": cmd_genus,
    "faces": cmd_faces,
    "components": cmd_components,
    "bouquet": cmd_bouquet,
    "trivalent": cmd_trivalent,
    "mingenus": cmd_mingenus,
    "colourrotate": cmd_colourrotate,
    "resolve": cmd_resolve,
    "restore": cmd_restore,
    "unkink": cmd_unkink,
    "seifert": cmd_seifert,
    "lift": cmd_lift,
    "bounds": cmd_bounds,
    "defect": cmd_defect,
}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def dispatch(command: str, files, args, inp=None) -> dict:
    """Run one command and return the report dictionary (errors propagate)."""
    if command not in COMMANDS:
        raise UnknownCommand("unknown command %r" % command)
    inp = inp or _Inputs(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = COMMANDS[command](inp, list(files), args)
    return {
        "command": command,
        "input_digest": inp.digest(),
        "result": result,
        "warnings": [str(w.message) for w in caught],
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ribbonlift", description=__doc__.splitlines()[0])
    p.add_argument("command", help="one of: " + ", ".join(COMMANDS))
    p.add_argument("files", nargs="*")
    p.add_argument("--allow-low-valence", action="store_true")
    p.add_argument("--budget", type=int, default=None, help="search budget")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--max-k", type=int, default=4, help="largest crossing number searched")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for searches")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    inp = _Inputs(args)
    try:
        report = dispatch(args.command, args.files, args, inp)
    except RibbonLiftError as exc:
        # digest of whatever inputs were parsed before the failure
        err = {"error": exc.code, "message": str(exc),
               "input_digest": inp.digest() if inp.canonical else None}
        if isinstance(exc, BudgetExceeded):
            err["partial"] = exc.partial
        sys.stderr.write(dumps(err))
        return EXIT_CODES.get(exc.code, 1)
    sys.stdout.write(dumps(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
