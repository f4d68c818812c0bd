import cmath
import itertools

import pytest

import stabrank


def triangle_circuit():
    return stabrank.Circuit.from_stab(
        "qubits 3\nH 0\nH 1\nH 2\nCZ 0 1\nCZ 0 2\nCZ 1 2\nH 0\nH 1\nH 2\n"
    )


def test_rank_matches_simulation():
    rows = ["110", "011", "101"]
    assert stabrank.rank(rows) == 2
    assert stabrank.rank_via_simulation(rows) == 2


def test_hadamard_amplitude():
    c = stabrank.Circuit(1)
    c.append("H", 0)
    a = stabrank.amplitude(c, "0", "0")
    assert complex(a) == pytest.approx(2**-0.5)
    assert str(stabrank.probability(c, "0", "0")) == "2^-1"


def test_triangle_cancels():
    c = triangle_circuit()
    assert stabrank.amplitude(c, "000", "000").is_zero()
    assert stabrank.probability(c, "000", "000").is_zero


def test_counts_match_enumeration():
    q_prime = [[2, 1, 1], [1, 0, 1], [1, 1, 0]]
    n0, n1, n2, n3 = stabrank.path_sum(q_prime)
    assert (n0, n2) == (6, 2)
    assert stabrank.count(q_prime) == (n0 - n2, n1 - n3)
    assert stabrank.count_linear([1, 1, 1, 1]) == (-4, 0)


def test_amplitudes_for_outputs_sum_to_one():
    c = stabrank.Circuit.from_stab("qubits 3\nH 0\nCNOT 0 1\nS 1\nH 2\nCZ 1 2\nY 0\n")
    outs = ["".join(bits) for bits in itertools.product("01", repeat=3)]
    amps = stabrank.amplitudes_for_outputs(c, "000", outs)
    assert sum(abs(complex(a)) ** 2 for a in amps) == pytest.approx(1.0)
    for out, a in zip(outs, amps):
        assert cmath.isclose(complex(a), stabrank.statevector_amplitude(c, "000", out), abs_tol=1e-12)


def test_netzero():
    assert stabrank.net_class(3, [(0, 1), (1, 2), (0, 2)])[0] == "Zero"
    assert stabrank.polymatroid_sum(2, [(0, 1)]) == (1, 1)
    graphs = stabrank.enumerate_netzero(3)
    assert graphs == [(3, [(0, 1), (0, 2), (1, 2)])]


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        stabrank.count([[0, 2], [2, 0]])
    with pytest.raises(ValueError):
        stabrank.Circuit.from_stab("qubits 1\nFOO 0\n")
