"""Smoke test for the coxnet extension module.

Build and install first, e.g. ``pip install ./crates/py`` or
``maturin develop -m crates/py/Cargo.toml``.
"""

import json
from fractions import Fraction

import coxnet


def fractions(pairs):
    return [Fraction(n, d) for n, d in pairs]


def main():
    net = coxnet.confidence_net("B3", [1.0, 2.0, 4.0])
    assert net.kind == "B3"
    assert len(net) == 7
    assert fractions(net.probs) == [Fraction(c, 8) for c in (1, 1, 1, 2, 1, 1, 1)]
    assert net.boundaries == [1.0, 1.5, 2.0, 2.5, 3.0, 4.0]
    j, p = net.covering_interval(2.2)
    assert j == 3 and Fraction(*p) == Fraction(1, 4)
    lo, hi, lower, upper, prob = net.central_coverage_set(0.25)
    assert (lo, hi) == (1, 5) and Fraction(*prob) == Fraction(6, 8)

    report = json.loads(net.to_json())
    assert list(report) == ["group", "n", "boundaries", "intervals", "warnings", "gf"]
    assert report["intervals"][0]["lo"] == "-inf"

    assert coxnet.net_generating_function("B4") == [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]
    e8 = coxnet.net_generating_function("E8")
    assert len(e8) == 93 and sum(e8) == 17280 and e8 == e8[::-1]
    assert coxnet.live_root_count("E8") == 92
    assert coxnet.degrees("E6") == [2, 5, 6, 8, 9, 12]
    assert coxnet.poincare_polynomial("B2") == [1, 2, 2, 2, 1]
    assert coxnet.length_histogram("B2") == [1, 2, 2, 2, 1]
    assert coxnet.coset_min_length_histogram("D4") == [1, 1, 1, 2, 1, 1, 1]
    assert coxnet.nongroup_gf(3) == [1, 1, 2, 2, 1, 1]

    a3 = coxnet.confidence_net("A3", [0.5, -1.25, 3.0, 2.125])
    assert fractions(a3.probs) == [Fraction(1, 4)] * 4
    assert len(coxnet.hartigan_net([0.3, 1.1, -0.4])) == 8
    assert len(coxnet.nongroup_net([1.0, 2.0, 4.0])) == 6

    mc = coxnet.monte_carlo_coverage("B3", 20000, 42)
    assert sum(mc["counts"]) == 20000 and mc["max_abs_z"] < 5
    assert coxnet.monte_carlo_coverage("B3", 20000, 42) == mc

    edge = coxnet.edgeworth("E8")
    assert edge["sigma2"] == "601/3"
    assert abs(edge["sum"] - 1.0001534) < 1e-6

    try:
        coxnet.net_generating_function("F4")
    except ValueError as e:
        assert "F4" in str(e)
    else:
        raise AssertionError("F4 should be rejected")

    print("coxnet smoke test passed")


if __name__ == "__main__":
    main()
