"""Command-line front end.

Every subcommand writes one JSON object per line (a :class:`RunReport`), or
a plain-text rendering with ``--format text``.  The exit status is 0 when
no record has status Fail or Error, 1 otherwise, and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator

from . import ccp, dihedral, partitions, stats
from .dyck import DyckPath, parse_word, tunneling
from .errors import DyckPermError, TooLarge
from .perm import Perm, format_ints, parse_perm
from .sigma import permuted_rep, rep_as_path, sigma_path
from .verify import ERROR, FAIL, PASS, SUITES, RunReport, run_suite

MAX_RENDER_N = 26


def render_chords(path: DyckPath, sigma: Perm | None = None) -> str:
    """ASCII chord diagram: clockwise vertex labels, chord list, and arcs.

    >>> print(render_chords(DyckPath("uudd")))
    path    uudd
    labels  1 2 3 4
    chords  (1,4) (2,3)
    arcs    +-----+
              +-+
    """
    if path.n > MAX_RENDER_N:
        raise TooLarge(f"rendering is limited to n <= {MAX_RENDER_N}")
    m = len(path.word)
    labels = sigma.images if sigma is not None else tuple(range(1, m + 1))
    if len(labels) != m:
        raise DyckPermError(f"permutation of degree {len(labels)} for a path of length {m}")
    width = max(len(str(x)) for x in labels)
    cols = [i * (width + 1) for i in range(m)]
    chords = tunneling(path).chords()
    lines = [
        f"path    {path.word}",
        "labels  " + " ".join(str(x).rjust(width) for x in labels),
        "chords  " + " ".join(f"({labels[i - 1]},{labels[j - 1]})" for i, j in chords),
    ]
    offset = width - 1
    for idx, (i, j) in enumerate(chords):
        row = [" "] * (cols[-1] + width)
        for c in range(cols[i - 1] + offset, cols[j - 1] + offset + 1):
            row[c] = "-"
        row[cols[i - 1] + offset] = row[cols[j - 1] + offset] = "+"
        lines.append(("arcs    " if idx == 0 else "        ") + "".join(row).rstrip())
    return "\n".join(lines)


# -- subcommand handlers: each yields RunReports -----------------------------


def _ok(command, inputs, results) -> RunReport:
    return RunReport(command, inputs, results, PASS)


def _checked(command, inputs, results, ok, witness=None) -> RunReport:
    if ok:
        return RunReport(command, inputs, results, PASS)
    return RunReport(command, inputs, results, FAIL, [witness or dict(results)])


def cmd_map(args) -> Iterator[RunReport]:
    s, p = parse_perm(args.sigma), parse_word(args.path)
    yield _ok("map", {"sigma": str(s), "path": p.word}, {"word": sigma_path(s, p).word})


def cmd_invert(args) -> Iterator[RunReport]:
    s, p = parse_perm(args.sigma), parse_word(args.path)
    q = ccp.invert(s, p)
    yield _checked(
        "invert",
        {"sigma": str(s), "path": p.word},
        {"word": q.word},
        sigma_path(s, q) == p,
    )


def cmd_tunnel(args) -> Iterator[RunReport]:
    p = parse_word(args.path)
    t = tunneling(p)
    yield _ok("tunnel", {"path": p.word}, {"pairing": str(t), "chords": t.chords()})


def cmd_rep(args) -> Iterator[RunReport]:
    s, p = parse_perm(args.sigma), parse_word(args.path)
    rep = rep_as_path(p, s)
    yield _ok(
        "rep",
        {"sigma": str(s), "path": p.word},
        {"pairing": str(permuted_rep(p, s)), "is_path": rep is not None, "word": rep.word if rep else None},
    )


def cmd_ccp(args) -> Iterator[RunReport]:
    if args.action == "check":
        s = parse_perm(args.perm)
        yield _ok("ccp check", {"perm": str(s)}, {"is_ccp": ccp.is_ccp(s)})
    elif args.action == "count":
        n = _need_n(args)
        yield _ok("ccp count", {"n": n}, {"count": ccp.count_ccps(n)})
    else:
        n = _need_n(args)
        perms = [str(s) for s in ccp.enumerate_ccps(n, args.cap)]
        yield _checked(
            "ccp enumerate",
            {"n": n},
            {"count": len(perms), "perms": perms},
            len(perms) == ccp.count_ccps(n),
        )


def cmd_classes(args) -> Iterator[RunReport]:
    n = _need_n(args)
    brute = n <= min(4, args.cap if args.cap is not None else 4)
    if args.report == "count":
        formula = partitions.num_classes(n)
        results = {"formula": formula}
        ok = True
        if brute:
            results["bruteforce"] = partitions.count_classes_bruteforce(n)
            ok = results["bruteforce"] == formula
        yield _checked("classes count", {"n": n}, results, ok)
        return
    if n < 3:
        raise DyckPermError("parity cells are described for n >= 3")
    observed = partitions.parity_histogram(n) if brute else None
    classes = partitions.bruteforce_classes(n) if brute and args.report == "sizes" else None
    cell_sizes: dict = {}
    if classes is not None:
        for members in classes.values():
            par = partitions.parity(Perm(members[0]))
            cell_sizes.setdefault(par, set()).add(len(members))
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            census = partitions.parity_census(n, a, b)
            if census == 0:
                continue
            par = partitions.ParityPair(a, b)
            results = {"a": a, "b": b, "census": census}
            ok = True
            if observed is not None:
                results["census_bruteforce"] = observed[par]
                ok = observed[par] == census
            if args.report == "sizes":
                size = partitions.cell_class_size(n, a, b)
                results["class_size"] = size
                results["classes"] = census // size
                if classes is not None:
                    results["class_size_bruteforce"] = sorted(cell_sizes.get(par, ()))
                    ok = ok and cell_sizes.get(par) == {size}
            yield _checked(f"classes {args.report}", {"n": n}, results, ok)


def cmd_generators(args) -> Iterator[RunReport]:
    p, q = parse_word(args.p), parse_word(args.q)
    count = partitions.count_generators(p, q)
    inputs = {"p": p.word, "q": q.word}
    if args.count_only:
        yield _ok("generators", inputs, {"count": count})
        return
    gens = [format_ints(g) for g in partitions.generator_images(p, q, args.cap)]
    yield _checked("generators", inputs, {"count": len(gens), "generators": gens}, len(gens) == count)


def cmd_identity(args) -> Iterator[RunReport]:
    n = _need_n(args)
    chk = partitions.double_factorial_identity_check(n, args.cap)
    yield _checked("identity", {"n": n}, {"lhs": chk.lhs, "rhs": chk.rhs, "ok": chk.ok}, chk.ok)


def cmd_sequence(args) -> Iterator[RunReport]:
    seq = [partitions.num_classes(k) for k in range(1, args.max_n + 1)]
    yield _ok("sequence", {"max_n": args.max_n}, {"num_classes": seq})


def cmd_dihedral(args) -> Iterator[RunReport]:
    n = _need_n(args)
    group = dihedral.dihedral_group(n)
    if args.list or not args.verify_theorem5:
        yield _ok("dihedral list", {"n": n}, {"order": len(group), "elements": sorted(str(g) for g in group)})
    if args.verify_theorem5:
        for r in run_suite("dihedral", n):
            yield r


def cmd_orbit(args) -> Iterator[RunReport]:
    p = parse_word(args.path)
    orb = sorted(q.word for q in dihedral.action_orbit(p))
    yield _ok("orbit", {"path": p.word}, {"size": len(orb), "orbit": orb})


def cmd_stats(args) -> Iterator[RunReport]:
    n = _need_n(args)
    if args.check == "equidistribution":
        m = 2 * n
        for a in range(1, m + 1):
            for k in range(1, m + 1):
                ok = stats.equidistribution_check(n, a, k, args.cap)
                yield _checked("stats equidistribution", {"n": n, "a": a, "k": k}, {"ok": ok}, ok)
            ok = stats.umax_equidistribution_check(n, a, args.cap)
            yield _checked("stats umax_equidistribution", {"n": n, "a": a}, {"ok": ok}, ok)
        return
    for word, h, umax in stats.umax_table(n, args.cap):
        yield _ok("stats umax", {"n": n, "path": word}, {"h": h, "umax": list(umax)})


def cmd_verify(args) -> Iterator[RunReport]:
    n = _need_n(args)
    names = list(SUITES) if args.all or not args.suite else args.suite
    for name in names:
        if name not in SUITES:
            raise DyckPermError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            batches = list(pool.map(run_suite, names, [n] * len(names)))
    else:
        batches = [run_suite(name, n) for name in names]
    for batch in batches:
        yield from batch


def cmd_render(args) -> Iterator[RunReport]:
    p = parse_word(args.path)
    s = parse_perm(args.sigma) if args.sigma else None
    inputs = {"path": p.word}
    if s is not None:
        inputs["sigma"] = str(s)
    yield _ok("render", inputs, {"diagram": render_chords(p, s)})


def _need_n(args) -> int:
    if args.n is None:
        raise DyckPermError("--n is required")
    if args.n < 1:
        raise DyckPermError("--n must be positive")
    return args.n


# -- text rendering -----------------------------------------------------------


def _text(rep: RunReport) -> str:
    if rep.command == "render":
        return rep.results["diagram"]
    parts = [rep.command, rep.status]
    for key, val in list(rep.inputs.items()) + list(rep.results.items()):
        if isinstance(val, (list, tuple)):
            val = " ".join(map(str, val))
        parts.append(f"{key}={val}")
    if rep.witnesses:
        parts.append(f"witness={rep.witnesses[0]}")
    return "  ".join(str(x) for x in parts)


def _umax_text(reports: list[RunReport]) -> str:
    n = int(reports[0].inputs["n"])
    heads = ["P", "h(P)"] + [f"u{a}" for a in range(1, 2 * n + 1)]
    rows = [[r.inputs["path"], str(r.results["h"])] + [str(x) for x in r.results["umax"]] for r in reports]
    widths = [max(len(row[i]) for row in [heads] + rows) for i in range(len(heads))]
    fmt = lambda row: "  ".join(c.rjust(w) for c, w in zip(row, widths))  # noqa: E731
    return "\n".join([fmt(heads)] + [fmt(r) for r in rows])


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--sorted", action="store_true", help="sort records by command name")
    common.add_argument("--cap", type=int, default=None, help="largest n to enumerate")
    common.add_argument("--n", type=int, default=None)

    parser = argparse.ArgumentParser(prog="dyckperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(handler=handler)
        return p

    p = add("map", cmd_map, "apply sigma to a path")
    p.add_argument("--sigma", required=True)
    p.add_argument("--path", required=True)

    p = add("invert", cmd_invert, "preimage of a path under a CCP")
    p.add_argument("--sigma", required=True)
    p.add_argument("--path", required=True)

    p = add("tunnel", cmd_tunnel, "tunnel pairing of a path")
    p.add_argument("--path", required=True)

    p = add("rep", cmd_rep, "relabel the chord diagram of a path by sigma")
    p.add_argument("--sigma", required=True)
    p.add_argument("--path", required=True)

    p = add("ccp", cmd_ccp, "circularly-connected permutations")
    p.add_argument("action", choices=("check", "count", "enumerate"))
    p.add_argument("--perm")

    p = add("classes", cmd_classes, "classes of permutations inducing the same map")
    p.add_argument("--report", choices=("sizes", "count", "census"), default="count")

    p = add("generators", cmd_generators, "permutations mapping Q to P")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--count-only", action="store_true")

    add("identity", cmd_identity, "sum of height products against (2n-1)!!")

    p = add("sequence", cmd_sequence, "number of distinct maps for n = 1..max")
    p.add_argument("--max-n", type=int, default=6)

    p = add("dihedral", cmd_dihedral, "rotation/reflection group")
    p.add_argument("--list", action="store_true")
    p.add_argument("--verify-theorem5", action="store_true", help="maximality and map relations")

    p = add("orbit", cmd_orbit, "orbit of a path under the dihedral action")
    p.add_argument("--path", required=True)

    p = add("stats", cmd_stats, "unpaired-step statistics")
    p.add_argument("--table", choices=("umax",), default=None)
    p.add_argument("--check", choices=("equidistribution",), default=None)

    p = add("verify", cmd_verify, "run verification suites")
    p.add_argument("--all", action="store_true")
    p.add_argument("--suite", action="append", choices=list(SUITES))

    p = add("render", cmd_render, "ASCII chord diagram")
    p.add_argument("--path", required=True)
    p.add_argument("--sigma")

    return parser


def run(argv: Iterable[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        reports = list(args.handler(args))
    except DyckPermError as exc:
        reports = [RunReport(args.command, {"argv": argv}, {"error": f"{type(exc).__name__}: {exc}"}, ERROR)]
    if args.sorted:
        reports.sort(key=lambda r: r.command)
    if args.format == "text":
        if args.command == "stats" and args.check is None and reports and reports[0].status == PASS:
            print(_umax_text(reports), file=out)
        else:
            for r in reports:
                print(_text(r), file=out)
    else:
        for r in reports:
            print(r.to_json(), file=out)
    return 0 if all(r.status == PASS for r in reports) else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
