"""Exhaustive and sampled verification suites.

Each check returns a :class:`RunReport`; a failing check always carries at
least one counterexample in ``witnesses``.  Sweeps are exhaustive while the
search space is small and fall back to a seeded random sample otherwise, so
reports are reproducible.
"""
from __future__ import annotations

import itertools
import json
import random
from collections import defaultdict
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterator

from . import ccp, dihedral, partitions, stats
from .dyck import (
    DyckPath,
    Pairing,
    _noncrossing,
    catalan,
    heights,
    is_noncrossing,
    iter_words,
    path_from_tunneling,
    tunneling,
)
from .perm import Perm, all_perms, inverse_images
from .sigma import compose_action_check, conjugate_partners, rep_as_path, sigma_word

PASS, FAIL, ERROR = "Pass", "Fail", "Error"

# Above this many (sigma, path) evaluations a sweep is sampled instead.
EXHAUSTIVE_LIMIT = 600_000
SAMPLE_SIZE = 2000
# Targets with more generators than this are checked by formula only.
GENERATOR_LIMIT = 100_000
SEED = 20240601


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    status: str = PASS
    witnesses: list | None = None

    def __post_init__(self):
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing report needs a witness")

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "inputs": _stringify(self.inputs),
            "results": _stringify(self.results),
            "status": self.status,
        }
        if self.witnesses is not None:
            body["witnesses"] = _stringify(self.witnesses)
        return json.dumps(body, sort_keys=False, separators=(",", ":"))


def _stringify(obj):
    """Integers become decimal strings so consumers never lose precision."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [_stringify(v) for v in sorted(obj)]
    return str(obj)


def _report(name: str, n: int, ok: bool, results: dict, witnesses: list, mode: str | None = None):
    inputs = {"n": n}
    if mode:
        inputs["mode"] = mode
    return RunReport(
        f"verify:{name}",
        inputs,
        results,
        PASS if ok else FAIL,
        None if ok else (list(witnesses[:5]) or [dict(results)]),
    )


def _perm_source(n: int, rng: random.Random, cost_per_perm: int) -> tuple[str, Iterator[tuple[int, ...]]]:
    m = 2 * n
    if factorial(m) * cost_per_perm <= EXHAUSTIVE_LIMIT:
        return "exhaustive", all_perms(m)
    base = list(range(1, m + 1))

    def sample():
        for _ in range(SAMPLE_SIZE):
            p = base[:]
            rng.shuffle(p)
            yield tuple(p)

    return f"sample({SAMPLE_SIZE},seed={SEED})", sample()


# -- dyck --------------------------------------------------------------------


def suite_dyck(n: int) -> Iterator[RunReport]:
    words = list(iter_words(n))
    bad = [w for w in words if path_from_tunneling(tunneling(DyckPath(w))).word != w]
    yield _report("dyck.round_trip", n, not bad, {"paths": len(words)}, bad)

    yield _report(
        "dyck.count",
        n,
        len(words) == catalan(n) == len(set(words)),
        {"paths": len(words), "catalan": catalan(n)},
        [{"paths": len(words)}],
    )

    bad = []
    for w in words:
        p = DyckPath(w)
        for i, j in tunneling(p).chords():
            if w[i - 1] != "u" or w[j - 1] != "d" or (j - i) % 2 == 0:
                bad.append({"path": w, "chord": (i, j)})
        if min(heights(p)) < 0 or heights(p)[-1] != 0:
            bad.append({"path": w, "heights": heights(p)})
        if not is_noncrossing(tunneling(p)):
            bad.append({"path": w, "crossing": True})
    yield _report("dyck.tunnels", n, not bad, {"paths": len(words)}, bad)

    # every pairing: non-crossing test against all chord pairs
    rng = random.Random(SEED)
    m = 2 * n
    bad = []
    for _ in range(SAMPLE_SIZE):
        pts = list(range(1, m + 1))
        rng.shuffle(pts)
        partner = [0] * m
        for x, y in zip(pts[::2], pts[1::2]):
            partner[x - 1], partner[y - 1] = y, x
        t = Pairing(tuple(partner))
        if is_noncrossing(t) != chords_pairwise_noncrossing(t):
            bad.append(str(t))
    yield _report("dyck.noncrossing_oracle", n, not bad, {"pairings": SAMPLE_SIZE}, bad, "sample")


def _is_dyck_word(w: str) -> bool:
    h = 0
    for ch in w:
        h += 1 if ch == "u" else -1
        if h < 0:
            return False
    return h == 0 and len(w) % 2 == 0


def chords_pairwise_noncrossing(t: Pairing) -> bool:
    """Oracle: no two chords interleave."""
    chords = t.chords()
    for (a, b), (c, d) in itertools.combinations(chords, 2):
        if a < c < b < d or c < a < d < b:
            return False
    return True


# -- sigma -------------------------------------------------------------------


def suite_sigma(n: int) -> Iterator[RunReport]:
    rng = random.Random(SEED)
    words = list(iter_words(n))
    partners = [DyckPath(w).partners for w in words]
    mode, perms = _perm_source(n, rng, len(partners))
    dyck_bad, thm2_bad, count = [], [], 0
    for images in perms:
        count += 1
        inv = inverse_images(images)
        for w, t in zip(words, partners):
            img = sigma_word(images, t)
            if not _is_dyck_word(img):
                dyck_bad.append({"sigma": images, "path": w})
            conj = conjugate_partners(images, t)
            if _noncrossing(conj):
                rep = "".join("u" if i < j else "d" for i, j in enumerate(conj, 1))
                if rep != sigma_word(inv, t):
                    thm2_bad.append({"sigma": images, "path": w})
    yield _report("sigma.is_dyck", n, not dyck_bad, {"perms": count}, dyck_bad, mode)
    yield _report("sigma.rep_is_inverse_map", n, not thm2_bad, {"perms": count}, thm2_bad, mode)

    bad = []
    paths = [DyckPath(w) for w in iter_words(n)]
    group = sorted(dihedral.dihedral_group(n), key=lambda g: g.images)
    for d in paths:
        for mu in group:
            for _ in range(3):
                lam = list(range(1, 2 * n + 1))
                rng.shuffle(lam)
                lam = Perm(tuple(lam))
                if not compose_action_check(d, lam, mu):
                    bad.append({"path": d.word, "lam": lam.images, "mu": mu.images})
    yield _report("sigma.composition", n, not bad, {"paths": len(paths)}, bad, "sample")


# -- ccp ---------------------------------------------------------------------


def suite_ccp(n: int) -> Iterator[RunReport]:
    perms = list(ccp.iter_ccp_images(n))
    ok = len(perms) == len(set(perms)) == ccp.count_ccps(n) and all(map(ccp.is_ccp, perms))
    yield _report(
        "ccp.count",
        n,
        ok,
        {"enumerated": len(perms), "formula": ccp.count_ccps(n)},
        [{"enumerated": len(perms)}],
    )

    rng = random.Random(SEED)
    paths = [DyckPath(w) for w in iter_words(n)]
    if len(perms) * len(paths) <= EXHAUSTIVE_LIMIT:
        mode, chosen = "exhaustive", perms
    else:
        mode, chosen = f"sample({SAMPLE_SIZE},seed={SEED})", rng.sample(perms, SAMPLE_SIZE)
    bad = []
    for images in chosen:
        s = Perm(images)
        for p in paths:
            q = ccp.invert(s, p)
            if sigma_word(images, q.partners) != p.word:
                bad.append({"sigma": images, "path": p.word, "got": q.word})
            elif ccp.invert(s, DyckPath(sigma_word(images, p.partners))) != p:
                bad.append({"sigma": images, "preimage_of": p.word})
    yield _report("ccp.inverse_round_trip", n, not bad, {"ccps": len(chosen)}, bad, mode)

    mode, source = _perm_source(n, rng, len(paths))
    bad, count, bijective = [], 0, 0
    for images in source:
        count += 1
        inj = ccp.is_injective_on_paths(Perm(images))
        bijective += inj
        if inj != ccp.is_ccp(images):
            bad.append({"sigma": images, "injective": inj})
    yield _report(
        "ccp.characterization",
        n,
        not bad,
        {"perms": count, "bijective": bijective},
        bad,
        mode,
    )


# -- partitions --------------------------------------------------------------


def suite_partitions(n: int) -> Iterator[RunReport]:
    check = partitions.double_factorial_identity_check(n)
    yield _report(
        "partitions.double_factorial_identity",
        n,
        check.ok,
        {"lhs": check.lhs, "rhs": check.rhs},
        [{"lhs": check.lhs, "rhs": check.rhs}],
    )

    paths = [DyckPath(w) for w in iter_words(n)]
    base = paths[-1]
    bad, total = [], 0
    exhaustive = factorial(2 * n) <= EXHAUSTIVE_LIMIT // 10 and n <= 4
    by_target: dict[str, set] = defaultdict(set)
    if exhaustive:
        for images in all_perms(2 * n):
            by_target[sigma_word(images, base.partners)].add(images)
    enumerated = 0
    for p in paths:
        expect = partitions.count_generators(p, base)
        total += expect
        if expect > GENERATOR_LIMIT:
            continue
        enumerated += 1
        got = set(partitions.generator_images(p, base))
        if len(got) != expect or (exhaustive and got != by_target[p.word]):
            bad.append({"target": p.word, "base": base.word, "formula": expect, "generated": len(got)})
    ok = not bad and total == factorial(2 * n)
    yield _report(
        "partitions.generator_counts",
        n,
        ok,
        {"base": base.word, "total": total, "targets_enumerated": enumerated},
        bad or [{"total": total}],
        "exhaustive" if exhaustive else "formula-vs-enumeration",
    )

    if 3 <= n <= 4:
        yield from _class_structure(n)

    seq = [partitions.num_classes(k) for k in range(1, 7)]
    yield _report(
        "partitions.sequence",
        n,
        seq == [1, 3, 154, 8369, 711226, 90349957],
        {"num_classes": seq},
        [{"num_classes": seq}],
    )


def _class_structure(n: int) -> Iterator[RunReport]:
    classes = partitions.bruteforce_classes(n)
    size_bad, parity_bad, key_bad, thm4_bad = [], [], [], []
    key_to_fp: dict = {}
    for fp, members in classes.items():
        if len(members) < 4 or len(members) % 4:
            size_bad.append({"class_of": members[0], "size": len(members)})
        pars = {partitions.parity(Perm(m)) for m in members}
        if len(pars) != 1:
            parity_bad.append({"class_of": members[0], "parities": [(p.a, p.b) for p in pars]})
        for images in members:
            s = Perm(images)
            key = partitions.class_key(s)
            prev = key_to_fp.setdefault(key, fp)
            if prev != fp:
                key_bad.append({"sigma": images, "key_shared_across_classes": True})
            if partitions.class_size(s) != len(members):
                thm4_bad.append({"sigma": images, "formula": partitions.class_size(s), "actual": len(members)})
    if len(key_to_fp) != len(classes):
        key_bad.append({"keys": len(key_to_fp), "classes": len(classes)})
    yield _report("partitions.class_sizes_multiple_of_4", n, not size_bad, {"classes": len(classes)}, size_bad)
    yield _report("partitions.class_parity", n, not parity_bad, {"classes": len(classes)}, parity_bad)
    yield _report("partitions.class_key", n, not key_bad, {"keys": len(key_to_fp)}, key_bad)
    yield _report("partitions.class_size_formula", n, not thm4_bad, {"classes": len(classes)}, thm4_bad)
    yield _report(
        "partitions.num_classes",
        n,
        len(classes) == partitions.num_classes(n),
        {"bruteforce": len(classes), "formula": partitions.num_classes(n)},
        [{"bruteforce": len(classes)}],
    )


# -- dihedral ----------------------------------------------------------------


def suite_dihedral(n: int) -> Iterator[RunReport]:
    group = dihedral.dihedral_group(n)
    expected = 4 * n if n >= 2 else 2
    closed = all((g @ h) in group for g in group for h in group) and all(g.inverse() in group for g in group)
    yield _report(
        "dihedral.group",
        n,
        closed and len(group) == expected and all(ccp.is_ccp(g) for g in group),
        {"order": len(group)},
        [{"order": len(group), "closed": closed}],
    )

    rng = random.Random(SEED)
    paths = [DyckPath(w) for w in iter_words(n)]
    mode, source = _perm_source(n, rng, len(paths))
    bad, count, preserving = [], 0, 0
    for images in source:
        count += 1
        g = Perm(images)
        keeps = dihedral.preserves_paths(g)
        preserving += keeps
        if keeps != (g in group):
            bad.append({"g": images, "witness": getattr(dihedral.crossing_witness(g), "word", None)})
    yield _report(
        "dihedral.maximality",
        n,
        not bad,
        {"perms": count, "preserving": preserving},
        bad,
        mode,
    )

    words = [p.word for p in paths]
    rmap = {w: sigma_word(dihedral.rho(n).images, DyckPath(w).partners) for w in words}
    wmap = {w: sigma_word(dihedral.omega(n).images, DyckPath(w).partners) for w in words}
    bad = []
    for w in words:
        cur = w
        for _ in range(2 * n):
            cur = rmap[cur]
        if cur != w:
            bad.append({"path": w, "relation": "rho^2n"})
        if wmap[wmap[w]] != w:
            bad.append({"path": w, "relation": "omega^2"})
        if rmap[wmap[rmap[w]]] != wmap[w]:
            bad.append({"path": w, "relation": "rho omega rho"})
    yield _report("dihedral.map_relations", n, not bad, {"paths": len(words)}, bad)

    bad = []
    for d in paths:
        for g in group:
            for h in group:
                lhs = rep_as_path(d, g @ h)
                inner = rep_as_path(d, h)
                if inner is None or lhs != rep_as_path(inner, g):
                    bad.append({"path": d.word, "g": g.images, "h": h.images})
    orbit_total = sum(len(o) for o in dihedral.orbits(n))
    if orbit_total != catalan(n):
        bad.append({"orbit_total": orbit_total})
    yield _report("dihedral.action", n, not bad, {"orbits": len(dihedral.orbits(n))}, bad)


# -- stats -------------------------------------------------------------------


TABLE2 = {
    "uuuddd": (3, (3, 2, 2, 3, 2, 2)),
    "uududd": (2, (2, 1, 2, 1, 2, 1)),
    "uuddud": (2, (2, 2, 3, 2, 2, 3)),
    "uduudd": (2, (2, 3, 2, 2, 3, 2)),
    "ududud": (1, (1, 2, 1, 2, 1, 2)),
}


def suite_stats(n: int) -> Iterator[RunReport]:
    m = 2 * n
    bad = [(a, k) for a in range(1, m + 1) for k in range(1, m + 1) if not stats.equidistribution_check(n, a, k)]
    yield _report("stats.equidistribution", n, not bad, {"windows": m * m}, bad)

    bad = [a for a in range(1, m + 1) if not stats.umax_equidistribution_check(n, a)]
    yield _report("stats.umax_equidistribution", n, not bad, {"starts": m}, bad)

    bad = []
    for k in range(1, m + 1):
        hist = stats.height_histogram(n, k).as_dict()
        for level in range(0, n + 1):
            if stats.height_level_count(n, k, level) != hist.get(level, 0):
                bad.append({"k": k, "level": level})
    yield _report("stats.height_closed_form", n, not bad, {"steps": m}, bad)

    bad = []
    for w in iter_words(n):
        p = DyckPath(w)
        for a in range(1, m + 1):
            for k in range(1, m):
                u = stats.unpaired_count(p, a, k)
                if u != stats.unpaired_count(p, (a + k - 1) % m + 1, m - k) or (u - k) % 2:
                    bad.append({"path": w, "a": a, "k": k})
    yield _report("stats.window_identities", n, not bad, {"paths": catalan(n)}, bad)

    if n == 3:
        rows = stats.umax_table(3)
        bad = [r for r in rows if TABLE2[r[0]] != (r[1], r[2])]
        yield _report("stats.table2", n, not bad, {"rows": len(rows)}, bad)


SUITES: dict[str, Callable[[int], Iterator[RunReport]]] = {
    "dyck": suite_dyck,
    "sigma": suite_sigma,
    "ccp": suite_ccp,
    "partitions": suite_partitions,
    "dihedral": suite_dihedral,
    "stats": suite_stats,
}


def run_suite(name: str, n: int) -> list[RunReport]:
    try:
        return list(SUITES[name](n))
    except Exception as exc:  # surfaced as an Error record, never swallowed silently
        return [RunReport(f"verify:{name}", {"n": n}, {"error": f"{type(exc).__name__}: {exc}"}, ERROR)]
