"""First class-number factors h_p^- and the odd-factor gate.

[DERIVED] h_p^- values are from the standard published table of minus
class numbers for small p (e.g. Washington, Introduction to Cyclotomic
Fields, Tables); the implementation additionally cross-checks two
independent methods internally.
"""

import os

import pytest

from cyclocover.classnumbers import (ClassGateReport, DEFAULT_PRIME_BOUND,
                                     HplusRecord, default_fixture_path,
                                     gate_theorem_CD, hp_minus,
                                     load_hplus_table, odd_prime_factor,
                                     prime_bound)
from cyclocover.errors import PreconditionError


KNOWN_H_MINUS = {
    3: 1, 5: 1, 7: 1, 11: 1, 13: 1, 17: 1, 19: 1,
    23: 3, 29: 8, 31: 9, 37: 37, 41: 121, 43: 211, 47: 695,
    53: 4889, 59: 41241, 61: 76301, 67: 853513, 71: 3882809,
}


class TestHpMinus:
    @pytest.mark.parametrize("p,h", sorted(KNOWN_H_MINUS.items()))
    def test_published_values(self, p, h):
        assert hp_minus(p) == h

    def test_bound_enforced(self):
        with pytest.raises(PreconditionError, match="bound"):
            hp_minus(223, bound=211)

    def test_composite_rejected(self):
        with pytest.raises(PreconditionError):
            hp_minus(15)

    def test_even_and_small_rejected(self):
        with pytest.raises(PreconditionError):
            hp_minus(2)
        with pytest.raises(PreconditionError):
            hp_minus(1)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("CCK_PRIME_BOUND", "30")
        assert prime_bound() == 30
        with pytest.raises(PreconditionError, match="bound"):
            hp_minus(31, prime_bound())
        monkeypatch.setenv("CCK_PRIME_BOUND", "abc")
        with pytest.raises(PreconditionError):
            prime_bound()
        monkeypatch.setenv("CCK_PRIME_BOUND", "2")
        with pytest.raises(PreconditionError):
            prime_bound()
        monkeypatch.delenv("CCK_PRIME_BOUND")
        assert prime_bound() == DEFAULT_PRIME_BOUND


class TestOddPrimeFactor:
    def test_basics(self):
        assert odd_prime_factor(1) is None
        assert odd_prime_factor(8) is None
        assert odd_prime_factor(12) == 3
        assert odd_prime_factor(35) == 5
        assert odd_prime_factor(853513) == 67  # 853513 = 67 * 12739
        assert odd_prime_factor(1000003) == 1000003  # prime

    def test_rejects_nonpositive(self):
        with pytest.raises(PreconditionError):
            odd_prime_factor(0)
        with pytest.raises(PreconditionError):
            odd_prime_factor(-3)


class TestFixture:
    def test_default_table_loads(self):
        table = load_hplus_table(default_fixture_path())
        assert 3 in table and 191 in table
        assert 199 not in table
        assert table[191].odd_factor() == 11
        assert table[3].odd_factor() is None

    def test_missing_file(self):
        with pytest.raises(PreconditionError, match="cannot read"):
            load_hplus_table("/nonexistent/hplus.csv")

    def test_empty_file(self, tmp_path):
        f = tmp_path / "empty.csv"
        f.write_text("")
        assert load_hplus_table(str(f)) == {}

    def test_bad_header(self, tmp_path):
        f = tmp_path / "bad.csv"
        f.write_text("p,factors\n")
        with pytest.raises(PreconditionError, match=":1:"):
            load_hplus_table(str(f))

    HEADER = "p,hplus_factors,source,heuristic\n"

    def test_line_numbered_errors(self, tmp_path):
        f = tmp_path / "t.csv"
        f.write_text(self.HEADER + "15,,src,true\n")
        with pytest.raises(PreconditionError, match="t.csv:2: 15 is not prime"):
            load_hplus_table(str(f))
        f.write_text(self.HEADER + "5,,src,true\n5,,src,true\n")
        with pytest.raises(PreconditionError, match=":3: duplicate"):
            load_hplus_table(str(f))
        f.write_text(self.HEADER + "5,4,src,true\n")
        with pytest.raises(PreconditionError, match="factor 4 is not prime"):
            load_hplus_table(str(f))
        f.write_text(self.HEADER + "5,,src,maybe\n")
        with pytest.raises(PreconditionError, match="heuristic"):
            load_hplus_table(str(f))
        f.write_text(self.HEADER + "5,,src\n")
        with pytest.raises(PreconditionError, match="4 fields"):
            load_hplus_table(str(f))

    def test_factor_list_parsing(self, tmp_path):
        f = tmp_path / "t.csv"
        f.write_text(self.HEADER + "163,2;2,src,false\n191,11,src,true\n5,,s,true\n")
        table = load_hplus_table(str(f))
        assert table[163].factors == [2, 2]
        assert table[163].odd_factor() is None
        assert table[191].factors == [11]
        assert table[5].factors == []
        assert table[163].heuristic is False


class TestGate:
    def test_p3_false(self):
        table = load_hplus_table(default_fixture_path())
        rep = gate_theorem_CD(3, table)
        assert isinstance(rep, ClassGateReport)
        assert rep.gate is False
        assert rep.h_minus == 1 and rep.h_minus_odd_factor is None

    def test_p23_needs_plus_side(self):
        # h_23^- = 3 is odd, but the fixture records h_23^+ = 1
        table = load_hplus_table(default_fixture_path())
        rep = gate_theorem_CD(23, table)
        assert rep.h_minus_odd_factor == 3 and rep.gate is False

    def test_p191_true(self):
        table = load_hplus_table(default_fixture_path())
        rep = gate_theorem_CD(191, table)
        assert rep.gate is True
        assert rep.h_minus_odd_factor is not None
        assert rep.h_plus_odd_factor == 11
        assert rep.h_minus % rep.h_minus_odd_factor == 0

    def test_p199_unknown(self):
        table = load_hplus_table(default_fixture_path())
        rep = gate_theorem_CD(199, table)
        assert rep.gate is None and rep.h_plus_entry is None

    def test_custom_fixture(self):
        rep = gate_theorem_CD(23, {23: HplusRecord(23, [3], "made up", True)})
        assert rep.gate is True

    def test_env_bound_applies(self, monkeypatch):
        monkeypatch.setenv("CCK_PRIME_BOUND", "20")
        with pytest.raises(PreconditionError, match="bound"):
            gate_theorem_CD(23, {}, prime_bound())


def test_h191_runtime_and_value():
    # the headline computation: both methods agree and the odd part is there
    h = hp_minus(191)
    assert h == 165008365487223656458987611326929859
    assert odd_prime_factor(h) == 11
