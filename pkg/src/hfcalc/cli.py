"""Command-line front end.

Subcommands::

    hfcalc validate FILE
    hfcalc info FILE
    hfcalc generators FILE
    hfcalc spinc FILE
    hfcalc grade FILE
    hfcalc domain FILE X Y [--positive]
    hfcalc audit FILE X Y
    hfcalc stabilize FILE -o OUT
    hfcalc atlas torus P Q -o OUT
    hfcalc atlas s1s2 -o OUT
    hfcalc atlas openbook-annulus N -o OUT
    hfcalc shift --c1sq R --chi N --sigma N
    hfcalc selftest

Global flags: ``--json`` (emit one JSON document on stdout), ``--radius``
(positive-representative search bound), ``--seed`` (selftest RNG).

Generators are named on the command line by comma-joined vertex names
(order-insensitive; output order follows the alpha-curve index).  Exit
codes: 0 on success (including the "no connecting class" answer, which
is a valid result, not a failure), 1 on file or diagram errors, 2 on
usage errors.  Identical inputs and flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import atlas as atlas_mod
from .diagram import DiagramError, HeegaardDiagram, load_diagram, reverse_curve, serialize
from .grading import (Generator, NoConnectingClassError, NoPositiveRepresentative,
                      basepoint_multiplicity, enumerate_generators, euler_measure,
                      generator_measure, gr0_of_theta, grading_table, homogeneous_lattice,
                      homology_of_Y, maslov_index, positive_representative,
                      relative_grading, solve_domain, spinc_partition, theta_and_shift)
from .layers import AuditReport, audit_index


def _frac(x: Fraction) -> str:
    return str(x)


def _digest(diagram: HeegaardDiagram) -> dict:
    h = homology_of_Y(diagram)
    return {
        "genus": diagram.genus,
        "vertices": diagram.n_vertices,
        "arcs": diagram.n_arcs,
        "regions": diagram.n_regions,
        "homology": {"b1": h.b1, "torsion": list(h.torsion)},
    }


def _load(path: str) -> HeegaardDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        return load_diagram(fh.read())


def _coeff_map(diagram: HeegaardDiagram, coeffs) -> dict:
    return {diagram.canonical_region_name(i): c for i, c in enumerate(coeffs)}


def _parse_generator(diagram: HeegaardDiagram, text: str) -> Generator:
    try:
        return Generator.from_display(diagram, text)
    except KeyError as e:
        raise DiagramError(str(e)) from None


# ---------------------------------------------------------------------------
# Subcommand payloads
# ---------------------------------------------------------------------------

def _cmd_validate(diagram, args):
    return {"valid": True}, []


def _cmd_info(diagram, args):
    regions = []
    for r in diagram.regions:
        regions.append({
            "name": diagram.canonical_region_name(r.index),
            "label": r.label,
            "genus": r.genus,
            "circles": [diagram.face_names[f] for f in r.faces],
            "corners": diagram.corner_counts[r.index],
            "chi": r.chi,
        })
    payload = {
        "regions": regions,
        "basepoint_region": diagram.canonical_region_name(diagram.basepoint_region),
        "circles": list(diagram.face_names),
        "lattice_rank": len(homogeneous_lattice(diagram)),
    }
    lines = [f"basepoint region: {payload['basepoint_region']}",
             f"periodic lattice rank: {payload['lattice_rank']}"]
    for r in regions:
        lines.append(f"region {r['name']} (label {r['label']}): genus {r['genus']}, "
                     f"{len(r['circles'])} circles, {r['corners']} corners, chi {r['chi']}")
    return payload, lines


def _cmd_generators(diagram, args):
    gens = [g.display(diagram) for g in enumerate_generators(diagram)]
    return {"count": len(gens), "generators": gens}, [f"{len(gens)} generators"] + gens


def _class_payload(diagram):
    out = []
    for cls in spinc_partition(diagram):
        out.append({
            "index": cls.index,
            "members": [g.display(diagram) for g in cls.members],
            "anchor": cls.anchor.display(diagram),
            "divisibility": cls.divisibility,
        })
    return out


def _cmd_spinc(diagram, args):
    classes = _class_payload(diagram)
    lines = [f"{len(classes)} Spin^c classes"]
    for c in classes:
        lines.append(f"class {c['index']}: d={c['divisibility']} anchor={c['anchor']} "
                     f"members={','.join(c['members'])}")
    return {"classes": classes}, lines


def _cmd_grade(diagram, args):
    classes = _class_payload(diagram)
    table = []
    lines = [f"{len(classes)} Spin^c classes"]
    for g, label in grading_table(diagram):
        table.append({
            "generator": g.display(diagram),
            "class": label.spinc,
            "offset": label.offset,
            "modulus": label.modulus,
        })
        mod = f" mod {label.modulus}" if label.modulus else ""
        lines.append(f"{g.display(diagram)}: class {label.spinc} offset {label.offset}{mod}")
    return {"classes": classes, "table": table}, lines


def _domain_measurements(diagram, x, y, dom):
    return {
        "coefficients": _coeff_map(diagram, dom.coefficients),
        "euler_measure": _frac(euler_measure(diagram, dom)),
        "n_x": _frac(generator_measure(diagram, dom, x)),
        "n_y": _frac(generator_measure(diagram, dom, y)),
        "n_z": basepoint_multiplicity(diagram, dom),
        "maslov": maslov_index(diagram, x, y, dom),
    }


def _cmd_domain(diagram, args):
    x = _parse_generator(diagram, args.x)
    y = _parse_generator(diagram, args.y)
    dom = solve_domain(diagram, x, y)
    if dom is None:
        return ({"connecting": False, "note": "no connecting class: the generators "
                                              "lie in different Spin^c classes"},
                ["no connecting class (distinct Spin^c classes)"])
    payload = {"connecting": True, "lattice_rank": len(dom.lattice)}
    payload.update(_domain_measurements(diagram, x, y, dom))
    payload["relative_grading"] = relative_grading(diagram, x, y)
    lines = [f"coefficients: {payload['coefficients']}",
             f"e = {payload['euler_measure']}, n_x = {payload['n_x']}, "
             f"n_y = {payload['n_y']}, n_z = {payload['n_z']}",
             f"maslov index = {payload['maslov']}",
             f"relative grading = {payload['relative_grading']}"]
    if args.positive:
        pos = positive_representative(dom, args.radius)
        payload["positive"] = _domain_measurements(diagram, x, y, pos)
        payload["positive"]["radius"] = args.radius
        lines.append(f"positive representative: {payload['positive']['coefficients']}")
    return payload, lines


def _audit_payload(report: AuditReport) -> dict:
    return {
        "maslov": report.maslov,
        "layer_sum": _frac(report.layer_sum),
        "basepoint_multiplicity": report.basepoint,
        "x_interior": report.x_interior,
        "y_interior": report.y_interior,
        "positive_vertices": report.positive_vertices,
        "negative_vertices": report.negative_vertices,
        "single_layer_identity": report.single_layer_identity,
        "layers": [{
            "level": l.level,
            "chi": l.chi,
            "convex": l.convex,
            "concave": l.concave,
            "boundary_degenerate": l.boundary_degenerate,
            "interior_degenerate": l.interior_degenerate,
            "auxiliary_signed": l.auxiliary_signed,
            "index": _frac(l.index),
        } for l in report.layers],
        "identities": {"layer_sum_equals_maslov": True, "corner_balance": True},
    }


def _cmd_audit(diagram, args):
    x = _parse_generator(diagram, args.x)
    y = _parse_generator(diagram, args.y)
    dom = solve_domain(diagram, x, y)
    if dom is None:
        return ({"connecting": False, "note": "no connecting class: the generators "
                                              "lie in different Spin^c classes"},
                ["no connecting class (distinct Spin^c classes)"])
    pos = positive_representative(dom, args.radius)
    report = audit_index(diagram, x, y, pos)
    payload = {"connecting": True,
               "domain": _coeff_map(diagram, pos.coefficients)}
    payload.update(_audit_payload(report))
    lines = [f"domain: {payload['domain']}",
             f"maslov = {report.maslov}, layer sum = {report.layer_sum}"]
    for l in report.layers:
        lines.append(f"layer {l.level}: chi={l.chi} convex={l.convex} concave={l.concave} "
                     f"bdeg={l.boundary_degenerate} ideg={l.interior_degenerate} "
                     f"aux={l.auxiliary_signed:+d} index={l.index}")
    lines.append(f"balance: x-interior {report.x_interior} + positive {report.positive_vertices} "
                 f"= y-interior {report.y_interior} + negative {report.negative_vertices}")
    return payload, lines


def _cmd_stabilize(diagram, args):
    marked, corr = atlas_mod.stabilize(diagram)
    text = serialize(marked.diagram)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    payload = {
        "output": args.output,
        "genus": marked.diagram.genus,
        "correspondence": {g.display(diagram): ng.display(marked.diagram)
                           for g, ng in corr.items()},
    }
    return payload, [f"wrote genus-{marked.diagram.genus} diagram to {args.output}"]


def _run_atlas(args):
    if args.builder == "torus":
        marked = atlas_mod.build_torus_diagram(args.p, args.q)
    elif args.builder == "s1s2":
        marked = atlas_mod.build_s1s2()
    else:
        marked = atlas_mod.build_annulus_open_book(args.n)
    text = serialize(marked.diagram)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    payload = {
        "output": args.output,
        "provenance": marked.provenance,
        "contact_generator": (marked.contact_generator.display(marked.diagram)
                              if marked.contact_generator else None),
    }
    lines = [f"wrote {marked.provenance} to {args.output}"]
    if payload["contact_generator"]:
        lines.append(f"contact generator: {payload['contact_generator']}")
    return marked.diagram, payload, lines


def _run_shift(args):
    theta, shift = theta_and_shift(Fraction(args.c1sq), args.chi, args.sigma)
    payload = {"theta": _frac(theta), "shift": _frac(shift),
               "gr0_of_theta": _frac(gr0_of_theta(theta))}
    lines = [f"theta = {payload['theta']}",
             f"shift = {payload['shift']}",
             f"gr0(theta) = {payload['gr0_of_theta']}"]
    return payload, lines


# ---------------------------------------------------------------------------
# Randomized self-test
# ---------------------------------------------------------------------------

def _selftest(seed: int, radius: int):
    from .diagram import assemble_regions

    rng = random.Random(seed)
    suite = [atlas_mod.build_torus_diagram(3, 1).diagram,
             atlas_mod.build_torus_diagram(4, 1).diagram,
             atlas_mod.build_s1s2().diagram,
             atlas_mod.build_annulus_open_book(0).diagram,
             atlas_mod.build_annulus_open_book(2).diagram]
    checks = []

    def grading_ambiguity():
        cases = 0
        for d in suite:
            for cls in spinc_partition(d):
                for x in cls.members:
                    for y in cls.members:
                        dom = solve_domain(d, x, y)
                        basis = dom.lattice
                        base_val = relative_grading(d, x, y)
                        for _ in range(8):
                            steps = [rng.randint(-3, 3) for _ in basis]
                            other = dom.translate(steps)
                            val = (maslov_index(d, x, y, other)
                                   - 2 * basepoint_multiplicity(d, other))
                            diff = val - base_val
                            assert diff % cls.divisibility == 0 if cls.divisibility else diff == 0
                            cases += 1
        return cases

    def additivity():
        cases = 0
        for d in suite:
            for cls in spinc_partition(d):
                for x in cls.members:
                    for y in cls.members:
                        for z in cls.members:
                            lhs = relative_grading(d, x, z)
                            rhs = relative_grading(d, x, y) + relative_grading(d, y, z)
                            m = cls.divisibility
                            assert (lhs - rhs) % m == 0 if m else lhs == rhs
                            cases += 1
        return cases

    def layer_identities():
        cases = 0
        for d in suite:
            gens = enumerate_generators(d)
            for x in gens:
                for y in gens:
                    dom = solve_domain(d, x, y)
                    if dom is None:
                        continue
                    for _ in range(6):
                        steps = [rng.randint(-3, 3) for _ in dom.lattice]
                        cand = dom.translate(steps)
                        if any(c < 0 for c in cand.coefficients):
                            continue
                        audit_index(d, x, y, cand)
                        cases += 1
        return cases

    def stabilization():
        cases = 0
        for d in suite[:3]:
            st, corr = atlas_mod.stabilize(d)
            for x in enumerate_generators(d):
                for y in enumerate_generators(d):
                    try:
                        g0 = relative_grading(d, x, y)
                    except NoConnectingClassError:
                        g0 = None
                    try:
                        g1 = relative_grading(st.diagram, corr[x], corr[y])
                    except NoConnectingClassError:
                        g1 = None
                    assert g0 == g1
                    cases += 1
        return cases

    def reversal():
        cases = 0
        for d in suite[:3]:
            for curve in d.input.curve_names():
                rev = assemble_regions(reverse_curve(d.input, curve))
                a = sorted((len(c.members), c.divisibility) for c in spinc_partition(d))
                b = sorted((len(c.members), c.divisibility) for c in spinc_partition(rev))
                assert a == b
                cases += 1
        return cases

    counters = {}
    for name, fn in [("grading-ambiguity", grading_ambiguity),
                     ("grading-additivity", additivity),
                     ("layer-identities", layer_identities),
                     ("stabilization-invariance", stabilization),
                     ("orientation-reversal", reversal)]:
        try:
            counters[name] = fn()
            checks.append({"name": name, "cases": counters[name], "passed": True})
        except AssertionError:
            checks.append({"name": name, "cases": counters.get(name, 0), "passed": False})
    all_passed = all(c["passed"] for c in checks)
    payload = {"seed": seed, "checks": checks, "all_passed": all_passed}
    lines = [f"{c['name']}: {'pass' if c['passed'] else 'FAIL'} ({c['cases']} cases)"
             for c in checks]
    lines.append("all passed" if all_passed else "FAILURES PRESENT")
    return payload, lines, all_passed


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hfcalc",
                                 description="Exact calculator for gradings of "
                                             "Heegaard-diagram generators")
    ap.add_argument("--json", action="store_true", help="emit a single JSON document")
    ap.add_argument("--radius", type=int, default=8,
                    help="search radius for positive representatives (default 8)")
    ap.add_argument("--seed", type=int, default=0, help="selftest RNG seed")
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("validate", "info", "generators", "spinc", "grade"):
        p = sub.add_parser(name)
        p.add_argument("file")
    p = sub.add_parser("domain")
    p.add_argument("file")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--positive", action="store_true",
                   help="also compute a nonnegative representative")
    p = sub.add_parser("audit")
    p.add_argument("file")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("stabilize")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p = sub.add_parser("atlas")
    asub = p.add_subparsers(dest="builder", required=True)
    t = asub.add_parser("torus")
    t.add_argument("p", type=int)
    t.add_argument("q", type=int)
    t.add_argument("-o", "--output", required=True)
    s = asub.add_parser("s1s2")
    s.add_argument("-o", "--output", required=True)
    o = asub.add_parser("openbook-annulus")
    o.add_argument("n", type=int)
    o.add_argument("-o", "--output", required=True)
    p = sub.add_parser("shift")
    p.add_argument("--c1sq", required=True,
                   help="self-pairing of PD c1 (integer or rational like 3/4)")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    sub.add_parser("selftest")
    return ap


_DIAGRAM_COMMANDS = {
    "validate": _cmd_validate,
    "info": _cmd_info,
    "generators": _cmd_generators,
    "spinc": _cmd_spinc,
    "grade": _cmd_grade,
    "domain": _cmd_domain,
    "audit": _cmd_audit,
    "stabilize": _cmd_stabilize,
}


def _emit(args, report: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(argv)
    report = {"command": list(argv), "diagram": None, "payload": None,
              "status": "ok", "exit_status": 0}
    try:
        if args.command in _DIAGRAM_COMMANDS:
            diagram = _load(args.file)
            report["diagram"] = _digest(diagram)
            payload, lines = _DIAGRAM_COMMANDS[args.command](diagram, args)
        elif args.command == "atlas":
            diagram, payload, lines = _run_atlas(args)
            report["diagram"] = _digest(diagram)
        elif args.command == "shift":
            payload, lines = _run_shift(args)
        else:  # selftest
            payload, lines, ok = _selftest(args.seed, args.radius)
            if not ok:
                report["payload"] = payload
                report["status"] = "error"
                report["exit_status"] = 1
                report["error"] = {"message": "selftest failures"}
                _emit(args, report, lines)
                return 1
        report["payload"] = payload
        _emit(args, report, lines)
        return 0
    except NoPositiveRepresentative as e:
        report["status"] = "error"
        report["exit_status"] = 1
        report["error"] = {"message": str(e), "radius": e.radius}
        if args.json:
            _emit(args, report, [])
        else:
            print(f"error: {e}", file=sys.stderr)
        return 1
    except (DiagramError, OSError) as e:
        line = getattr(e, "line", None)
        report["status"] = "error"
        report["exit_status"] = 1
        report["error"] = {"message": str(e), "line": line}
        if args.json:
            _emit(args, report, [])
        else:
            print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
