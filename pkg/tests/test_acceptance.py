"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible with ``-s`` or in
the captured output of a failure) and then asserts the same condition.
Runtime limits are wall-clock, measured around the command under test.
"""

import io
import json
import time
from fractions import Fraction

import pytest

from arcdiam.bounds import (bound_report, brown, eps_bound, flag_expansion_check,
                            flag_params, hamming_lb, mms, moore, q_delta_inequality)
from arcdiam.certify import GROUP, certify
from arcdiam.cli import main
from arcdiam.constructions import flag_graph
from arcdiam.gf import is_prime, is_prime_power
from arcdiam.graphcore import diameter, girth, is_connected

from oracles import corpus, naive_diameter, naive_girth


def report(capsys, name, ok, detail=""):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail


def run(*argv):
    out = io.StringIO()
    t0 = time.perf_counter()
    code = main(list(argv), stdout=out)
    return code, out.getvalue(), time.perf_counter() - t0


def certify_cli(*argv):
    code, out, dt = run("certify", *argv)
    return code, json.loads(out), dt


def test_c1_fano_flag_graph(capsys):
    code, c, dt = certify_cli("flag", "3", "2", "--variant", "degree-consistent", "--mode", "both")
    ok = (code == 0 and dt < 1.0
          and (c["order"], c["degree"], c["diameter"], c["girth"]) == (21, 8, 2, 3)
          and c["vertex_orbit_count"] == 1 and c["arc_orbit_count"] == 1
          and c["oracle_vertex_transitive"] is True and c["oracle_arc_transitive"] is True
          and c["vertex_transitive"] == GROUP and c["arc_transitive"] == GROUP)
    report(capsys, "C1 flag(3,2) both routes", ok,
           f"order={c['order']} degree={c['degree']} diam={c['diameter']} "
           f"girth={c['girth']} exit={code} t={dt:.3f}s")


def test_c2_flag_3_3(capsys):
    code, c, dt = certify_cli("flag", "3", "3")
    bound = eps_bound(27, 1)
    exact = bound.exact_value
    ok = (code == 0 and dt < 5.0
          and (c["order"], c["degree"], c["diameter"], c["girth"]) == (52, 27, 2, 3)
          and c["arc_orbit_count"] == 1
          and exact == 51 and bound.compare(52)[0] == 1)
    report(capsys, "C2 flag(3,3)", ok,
           f"order={c['order']} degree={c['degree']} arc_orbits={c['arc_orbit_count']} "
           f"bound(27)={exact} t={dt:.3f}s")


def test_c3_flag_4_2(capsys):
    code, c, dt = certify_cli("flag", "4", "2", "--mode", "both", "--budget", "120")
    ok = (code == 0 and dt < 30.0
          and (c["order"], c["degree"], c["diameter"], c["girth"]) == (105, 24, 2, 3)
          and c["arc_orbit_count"] == 1 and c["oracle_arc_transitive"] is True)
    report(capsys, "C3 flag(4,2)", ok,
           f"order={c['order']} degree={c['degree']} arc_orbits={c['arc_orbit_count']} "
           f"oracle={c['oracle_arc_transitive']} t={dt:.3f}s")


def test_c4_hamming_family(capsys):
    t0 = time.perf_counter()
    bad = []
    for q in range(2, 11):
        code, c, _ = certify_cli("hamming", str(q))
        if not (code == 0 and c["order"] == q * q and c["degree"] == 2 * (q - 1)
                and c["diameter"] == 2 and c["arc_transitive"] == GROUP
                and hamming_lb(2 * (q - 1)) == Fraction(q * q)):
            bad.append(q)
    dt = time.perf_counter() - t0
    report(capsys, "C4 hamming q=2..10", not bad and dt < 10.0,
           f"failures={bad} t={dt:.3f}s")


def test_c5_identities(capsys):
    bad = []
    for d in range(3, 10):
        for q in range(2, 17):
            if not is_prime_power(q):
                continue
            delta, _ = flag_params(d, q)
            holds, equal = q_delta_inequality(d, q)
            odd = (d % 2 == 1 and q % 2 == 1)
            if not (flag_expansion_check(d, q) and holds and equal == (d == 3)
                    and (delta % 2 == 1) == odd):
                bad.append((d, q))
    report(capsys, "C5 expansion / q-delta / parity", not bad, f"failures={bad}")


def test_c6_bound_table(capsys):
    bad = [delta for delta in range(1, 101) if not bound_report(delta).consistent()]
    brown_bad = [delta for delta in range(1, 101)
                 if (brown(delta) is not None) != is_prime(delta - 1)]
    at7 = (mms(7) == 50 and moore(7)[0] == 50)
    report(capsys, "C6 bounds below Moore", not bad and not brown_bad and at7,
           f"inconsistent={bad} brown_mismatch={brown_bad} mms(7)={mms(7)} moore(7)={moore(7)[0]}")


def test_c7_scan(capsys):
    code, out, dt = run("scan", "--eps", "1/2", "--d-max", "9", "--q-max", "9", "--format", "json")
    rows = json.loads(out)
    bad = [r for r in rows
           if not (r["d"] % 2 == 1 and r["d"] >= 7 and r["q"] % 2 == 1
                   and is_prime_power(r["q"]) and r["delta"] % 2 == 1
                   and r["strict"] == "true" and r["decided_bits"] > 0)]
    ok = code == 0 and rows and not bad and dt < 5.0
    report(capsys, "C7 scan eps=1/2", ok,
           f"rows={len(rows)} bad={len(bad)} t={dt:.3f}s")


def test_c8_as_stated_variant(capsys):
    code, c, _ = certify_cli("flag", "3", "2", "--variant", "as-stated")
    subset_ok = True
    for d, q in ((3, 2), (3, 3), (4, 2)):
        dc = set(flag_graph(d, q, "degree-consistent").edges())
        ast = set(flag_graph(d, q, "as-stated").edges())
        subset_ok &= dc < ast
    ok = code == 1 and c["degree"] == 18 and c["match"] is False and subset_ok
    report(capsys, "C8 as-stated variant", ok,
           f"degree={c['degree']} match={c['match']} exit={code} subset={subset_ok}")


def test_c9_small_graph_oracles(capsys):
    bad = []
    for name, g in corpus().items():
        assert g.n <= 64
        d = diameter(g) if is_connected(g) else None
        if d != naive_diameter(g) or girth(g) != naive_girth(g):
            bad.append(name)
    for family, params in [("flag_graph", {"d": 3, "q": 2, "variant": "degree-consistent"}),
                           ("flag_graph", {"d": 3, "q": 3, "variant": "degree-consistent"}),
                           ("flag_graph", {"d": 3, "q": 2, "variant": "as-stated"}),
                           ("flag_graph", {"d": 3, "q": 3, "variant": "as-stated"})] + \
                          [("hamming2", {"q": q}) for q in range(2, 9)]:
        c = certify(family, params, mode="both", budget=64)
        if c.arc_orbit_count == 1 and c.oracle_arc_transitive is not True:
            bad.append((family, tuple(params.values())))
        if c.vertex_orbit_count == 1 and c.oracle_vertex_transitive is not True:
            bad.append((family, tuple(params.values())))
    report(capsys, "C9 oracles on graphs <= 64 vertices", not bad, f"failures={bad}")


def _data_outputs():
    cmds = [
        ("certify", "flag", "3", "2", "--mode", "both", "--no-timing"),
        ("certify", "flag", "3", "3", "--no-timing"),
        ("certify", "flag", "4", "2", "--mode", "both", "--no-timing"),
        ("bounds", "--delta-min", "1", "--delta-max", "100"),
        ("scan", "--eps", "1/2", "--d-max", "9", "--q-max", "9"),
        ("generate", "flag", "3", "3"),
    ] + [("certify", "hamming", str(q), "--no-timing") for q in range(2, 11)]
    return [run(*cmd)[:2] for cmd in cmds]


@pytest.mark.slow
def test_c10_determinism(capsys):
    first, second = _data_outputs(), _data_outputs()
    ok = first == second
    report(capsys, "C10 byte-identical reruns", ok, f"commands={len(first)}")
