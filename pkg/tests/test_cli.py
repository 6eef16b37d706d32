import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from northcott.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def value(iv):
    return (Fraction(iv["lo"]) + Fraction(iv["hi"])) / 2


def test_height_golden_ratio():
    code, out = call("height", "--poly", "x^2-x-1")
    assert code == 0
    h = json.loads(out)["height"]
    assert h["kind"] == "interval"
    assert abs(float(value(h)) - 1.27202) < 1e-5


def test_height_exact_provenance():
    _, out = call("height", "--poly", "x^4+1")
    assert json.loads(out)["height"]["kind"] == "exact"


def test_enumerate_count():
    code, out = call("enumerate", "--degree", "1", "--X", "2")
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    assert lines[-1]["number_count"] == 7
    assert all({"poly", "degree", "mahler_lo", "mahler_hi"} == set(l) for l in lines[:-1])


def test_bz_sum():
    code, out = call("bz-sum", "--data", "[[2,1,1]]")
    assert code == 0
    assert abs(float(value(json.loads(out)["liminf_bound"])) - 2 ** (1 / 6)) < 1e-9  # 1.1224620...


def test_field_split_tame(tmp_path):
    code, out = call("field", "--poly", "x^3-2")
    assert code == 0 and json.loads(out)["field"]["disc"] == -108
    code, out = call("split", "--poly", "x^6+x^5+x^4+x^3+x^2+x+1", "--p", "7", "29")
    primes = json.loads(out)["primes"]
    assert [p["sum_ef"] for p in primes] == [6, 6]
    code, out = call("tame-check", "--poly", "x^6+x^5+x^4+x^3+x^2+x+1", "--exponent", "6", "--primes", "2", "3", "5", "7")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["largest_ramified_prime"] == 7


def test_reldisc_gamma_tower(tmp_path):
    ff = tmp_path / "fields.json"
    ff.write_text(json.dumps({"fields": [{"poly": "x^2+1", "label": "Qi"}, {"poly": "x^4+1", "label": "Z8"}]}))
    code, out = call("reldisc", "--field-file", str(ff))
    assert code == 0 and json.loads(out)["norm_rel_disc"] == 16

    mk = tmp_path / "mk.json"
    mk.write_text(json.dumps([{"poly": "x-1", "label": "Q"}, {"poly": "x^4+1", "label": "Z8"}]))
    cands = tmp_path / "cands.json"
    cands.write_text(json.dumps([{"poly": "x-1", "label": "Q"}, {"poly": "x^2+1", "label": "Qi"}]))
    code, out = call("gamma", "--field-file", str(mk), "--candidates-file", str(cands))
    rep = json.loads(out)
    assert code == 0 and abs(float(value(rep["best"])) - 2**0.5) < 1e-8

    tower = tmp_path / "tower.json"
    tower.write_text(json.dumps({"fields": [{"poly": "x-1", "label": "Q"}, {"poly": "x^2-2", "label": "Q2"}, {"poly": "x^4+1", "label": "Z8"}]}))
    code, out = call("tower", "--tower-file", str(tower))
    terms = json.loads(out)["terms"]
    assert code == 0 and [round(float(value(t["value"])), 5) for t in terms] == [1.68179, 1.18921]


def test_silverman_and_radical():
    code, out = call("silverman", "--poly", "x^2-5")
    assert code == 0 and json.loads(out)["verdict"] == "verified"
    code, out = call("radical-tower", "--data", "[[2,1],[3,1],[5,1],[7,1],[11,1]]")
    assert code == 0 and json.loads(out)["verdict"] == "consistent with divergence"


@pytest.mark.parametrize(
    "argv, code",
    [
        (("bogus",), 2),
        (("height", "--poly", "x^2-1"), 2),
        (("height", "--poly", "x^^2"), 2),
        (("field", "--poly", "2x^2+1"), 2),
        (("split", "--poly", "x^2-5", "--p", "2"), 2),
        (("split", "--poly", "x^2+1", "--p", "4"), 2),
        (("bz-sum", "--data", "[[2,1]]"), 2),
        (("bz-sum", "--data", "not json"), 2),
        (("enumerate", "--degree", "7", "--X", "2"), 4),
        (("enumerate", "--degree", "2", "--X", "100"), 4),
        (("enumerate", "--degree", "3", "--X", "2", "--budget", "0"), 4),
        (("field", "--field-file", "/nonexistent.json"), 2),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_inconclusive_exit_code(monkeypatch):
    import northcott.cli as cli
    from northcott.errors import Inconclusive

    def undecided(*a, **k):
        raise Inconclusive("not resolved at the precision cap")

    monkeypatch.setattr(cli, "weil_height", undecided)
    code, out = call("height", "--poly", "x^2-x-1")
    assert code == 3 and json.loads(out)["error"] == "inconclusive"


def test_table_format():
    code, out = call("bz-sum", "--data", "[[2,1,1]]", "--format", "table")
    assert code == 0 and "liminf_bound" in out and "[interval]" in out


def test_config_file_overridden_by_flags(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"output_format": "table"}))
    _, out = call("bz-sum", "--data", "[]", "--config", str(cfg), "--format", "json")
    assert json.loads(out)["liminf_bound"]["kind"] == "exact"
    cfg.write_text(json.dumps({"colour": True}))
    assert call("bz-sum", "--data", "[]", "--config", str(cfg))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("height", "--poly", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"),
        ("enumerate", "--degree", "2", "--X", "3/2"),
        ("silverman", "--poly", "x^3-2"),
        ("field", "--poly", "x^4-10x^2+1"),
    ],
)
def test_byte_identical_subprocess(argv):
    cmd = [sys.executable, "-m", "northcott", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
