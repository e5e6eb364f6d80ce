from __future__ import annotations

import json

import pytest
from sympy import divisors, primerange

from corpus.families import build_group, family
from corpus.group_file import GroupFileError, emit_groups, format_group_line, ingest, parse_group_lines
from corpus.manifest import builtin_corpus, expand_manifest, load_corpus, load_group_dir
from corpus.report import MAX_SAFE_INT, build_report, dumps, emit_report, group_invariants, json_safe
from corpus.sweep import map_ordered, run_corpus, summarize, verify_spec
from realclass.models import GroupSpec


def test_parse_group_lines():
    lines = [
        "# comment",
        "",
        "s3 ; 3 ; (1,2) ; (1,2,3)  # trailing comment",
        "c1 ; 2 ; ()",
    ]
    specs = parse_group_lines(lines, "mem")
    assert [s.name for s in specs] == ["s3", "c1"]
    assert specs[0].generator_strings == ("(1,2)", "(1,2,3)")
    assert specs[0].source == "mem"
    assert build_group(specs[0]).order == 6
    assert build_group(specs[1]).order == 1


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("s3 ; 3", "expected"),
        (" ; 3 ; (1,2)", "empty group name"),
        ("s3 ; three ; (1,2)", "degree must be an integer"),
        ("s3 ; 0 ; ()", "degree must be positive"),
        ("s3 ; 3 ; (1,4)", "outside 1..3"),
    ],
)
def test_group_file_errors_carry_line(line, fragment):
    with pytest.raises(GroupFileError) as exc:
        parse_group_lines(["# header", line], "bad.txt")
    assert exc.value.line_no == 2
    assert fragment in str(exc.value)
    assert str(exc.value).startswith("bad.txt:2:")


def test_duplicate_group_names():
    with pytest.raises(GroupFileError) as exc:
        parse_group_lines(["a ; 2 ; (1,2)", "a ; 2 ; ()"], "dup.txt")
    assert exc.value.line_no == 2


def test_emit_then_ingest(tmp_path):
    specs = [family("dihedral", 8), family("frobenius", 7, 3)]
    path = tmp_path / "out.txt"
    emit_groups(specs, path, ["two groups"])
    text = path.read_text(encoding="utf-8")
    assert text.startswith("# two groups\n")
    assert format_group_line(specs[0]) in text
    again = ingest(path)
    assert [(s.name, s.degree, s.generator_strings) for s in again] == [
        (s.name, s.degree, s.generator_strings) for s in specs
    ]


def test_ingest_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        ingest(tmp_path / "nope.txt")


def test_expand_manifest(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text(
        json.dumps(
            {
                "families": [
                    {"family": "cyclic", "range": [2, 4]},
                    {"family": "dihedral", "range": [6, 10, 4]},
                    {"family": "frobenius", "params": [[5, 2]]},
                    {"family": "direct_product", "factors": [[["cyclic", 2], ["cyclic", 3]]]},
                ]
            }
        ),
        encoding="utf-8",
    )
    names = [s.name for s in expand_manifest(path)]
    assert names == [
        "cyclic(2)",
        "cyclic(3)",
        "cyclic(4)",
        "dihedral(6)",
        "dihedral(10)",
        "frobenius(5,2)",
        "direct_product(cyclic(2),cyclic(3))",
    ]


def test_expand_manifest_rejects_bad_entries(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"families": [{"family": "dihedral", "params": [[5]]}]}), encoding="utf-8")
    with pytest.raises(ValueError):
        expand_manifest(path)


def test_builtin_corpus(cfg):
    specs = builtin_corpus(cfg)
    names = [s.name for s in specs]
    assert len(names) == len(set(names))
    assert len(specs) >= 150
    for p in (5, 7, 11, 13):
        assert f"psl2({p})" in names
    assert "alt4_semidirect_c4[(3,4)]" in names


def test_builtin_grid_covers_every_small_parameter_set(cfg):
    names = {s.name for s in builtin_corpus(cfg)}
    expected = {f"cyclic({n})" for n in range(1, 201)}
    expected |= {f"dihedral({n})" for n in range(2, 201, 2)}
    expected |= {f"dicyclic({n})" for n in range(4, 201, 4)}
    expected |= {f"symmetric({n})" for n in range(1, 6)} | {f"alternating({n})" for n in range(1, 6)}
    expected |= {
        f"elementary_abelian({p},{k})" for p in primerange(2, 201) for k in range(1, 8) if p**k <= 200
    }
    expected |= {
        f"frobenius({p},{q})" for p in primerange(3, 101) for q in divisors(p - 1) if q >= 2 and p * q <= 200
    }
    assert expected <= names


def test_load_corpus_variants(cfg, groups_dir):
    assert [s.name for s in load_corpus(str(groups_dir / "extras.txt"), cfg)] == ["sl2_3", "v4_semidirect_c9"]
    assert load_corpus(str(groups_dir), cfg) == load_group_dir(groups_dir)
    with pytest.raises(FileNotFoundError):
        load_corpus(str(groups_dir / "missing"), cfg)


def test_shipped_group_files_have_advertised_orders(groups_dir):
    orders = {s.name: build_group(s).order for s in load_group_dir(groups_dir)}
    assert orders == {
        "sl2_3": 24,
        "v4_semidirect_c9": 36,
        "alt4_semidirect_c4[()]": 48,
        "alt4_semidirect_c4[(3,4)]": 48,
        "sym4_x_c2": 48,
        "gl2_3": 48,
    }


def test_json_safe_and_dumps():
    assert json_safe(MAX_SAFE_INT) == MAX_SAFE_INT
    assert json_safe(MAX_SAFE_INT + 1) == str(MAX_SAFE_INT + 1)
    assert json_safe({"a": frozenset({3, 1}), "b": True}) == {"a": [1, 3], "b": True}
    text = dumps({"b": 1, "a": [2, 3]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')


def test_report(sym3, tmp_path):
    spec = family("symmetric", 3)
    report = build_report(spec, sym3)
    data = report.to_json()
    assert data["order"] == 6
    assert data["real_class_sizes"] == [1, 2, 3]
    assert data["delta_star"]["components"] == [[2], [3]]
    assert data["status"] == "complete"
    path = tmp_path / "report.json"
    text = emit_report(report, path)
    assert json.loads(path.read_text(encoding="utf-8")) == json.loads(text)


def test_group_invariants(sym4):
    inv = group_invariants(sym4)
    assert inv == {
        "order": 24,
        "center_order": 1,
        "solvable": True,
        "two_closed": False,
        "two_nilpotent": False,
        "o2prime_upper_order": 24,
        "o2prime_lower_order": 1,
        "o2_order": 4,
    }


def test_map_ordered_keeps_input_order():
    items = [-i for i in range(12)]
    assert map_ordered(abs, items, 1) == map_ordered(abs, items, 3) == list(range(12))


def test_verify_spec_statuses():
    spec = family("symmetric", 5)
    skipped = verify_spec(spec, ["Lemma2.4"], cap=50)
    assert skipped.status == "skipped"
    assert skipped.verdicts == ()
    incomplete = verify_spec(family("symmetric", 3), ["Lemma2.4"], budget_seconds=-1)
    assert incomplete.status == "incomplete"
    complete = verify_spec(family("symmetric", 3), ["Lemma2.4", "TheoremA"])
    assert complete.status == "complete"
    assert complete.order == 6
    assert not complete.failed


def test_run_corpus_is_independent_of_jobs():
    specs = [family("dihedral", 2 * n) for n in range(3, 9)]
    ids = ["Lemma2.4", "TheoremA", "Theorem3.5"]
    serial = run_corpus(specs, ids, jobs=1)
    parallel = run_corpus(specs, ids, jobs=2)
    assert dumps([o.to_json() for o in serial]) == dumps([o.to_json() for o in parallel])
    summary = summarize(serial)
    assert summary["groups"] == 6
    assert summary["complete"] == 6
    assert summary["failing_verdicts"] == 0


def test_group_spec_json():
    spec = GroupSpec("g", 3, ("(1,2)",), "mem")
    assert spec.to_json() == {"name": "g", "degree": 3, "generators": ["(1,2)"], "source": "mem"}
