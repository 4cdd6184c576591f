"""Acceptance battery: every headline criterion at full scale.

Each test prints its one-line PASS/FAIL summary (visible with `pytest -s`
or in the captured output on failure).  Budgets are generous: the whole
module takes roughly half an hour, dominated by the degree-2010
irreducibility certificate.

Criteria:
  1. Gleason battery (n <= 14): product identity, separability, degree table.
  2. Irreducibility certificates for G_n, n <= 12, plus the degree-<=4
     soundness oracle.  Fails only on an exact reducibility witness or an
     oracle mismatch.
  3. Curve models for 2 <= n <= 4 (and the n = 5 stretch goal) with exact
     membership certificates and restriction checks.
  4. Empty bounded-height rational point search on the period-5 curve.
  5. Boundary-cover battery for 4 <= n <= 64.
  6. Randomized property suites at the stated trial counts, zero tolerance.
"""

from quadmod import suite


def _run(result):
    print(result.line)
    for key, val in sorted(result.details.items(), key=lambda kv: str(kv[0])):
        print(f"    {key}: {val}")
    return result


def test_criterion_1_gleason_battery():
    res = _run(suite.criterion_gleason(max_n=14))
    assert res.status == "PASS", res.details


def test_criterion_2_irreducibility():
    res = _run(suite.criterion_irred(max_n=12, seed=0))
    assert res.status == "PASS", res.details
    # expectation (not contract): every G_n certifies within the prime budget
    verdicts = {n: v["verdict"] for n, v in res.details["verdicts"].items()}
    inconclusive = [n for n, v in verdicts.items() if v == "Inconclusive"]
    if inconclusive:
        print(f"    NOTE: inconclusive at n={inconclusive} (allowed by contract)")
    assert all(v in ("Irreducible", "Inconclusive") for v in verdicts.values())


def test_criterion_3_curve_models():
    res = _run(suite.criterion_pern(stretch=True))
    assert res.status == "PASS", res.details
    for n in (2, 3, 4):
        det = res.details[n]
        assert det["certified"] and det["restriction"] and det["meets_per1"], det


def test_criterion_4_rational_points():
    res = _run(suite.criterion_rpoints(n=5, height=50))
    assert res.status == "PASS", res.details
    assert res.details["points"] == []


def test_criterion_5_boundary_covers():
    res = _run(suite.criterion_covers(max_n=64))
    assert res.status == "PASS", res.details


def test_criterion_6_property_suites():
    res = _run(suite.criterion_properties(full=True))
    assert res.status == "PASS", res.details
    assert all(v == 0 for v in res.details.values()), res.details
