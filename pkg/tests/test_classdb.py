import json
from collections import Counter

import pytest

from conftest import random_k_graphs
from tempered_kit import census, classdb
from tempered_kit.classdb import (
    NOTE_FG,
    NOTE_UNITAL,
    ClassificationReport,
    Status,
    classification_report,
    component_status,
    lookup,
    lookup_table_label,
)
from tempered_kit.errors import UnknownSignatureError
from tempered_kit.graphalg import prim_space
from tempered_kit.signature import Signature, format_signature, parse_signature


def test_keys_match_census():
    for n in range(1, 5):
        keys = sorted(r.signature for r in classdb.records() if r.signature.n == n)
        assert keys == census.enumerate_tempered(n, True)


def test_totals():
    four = classdb.aggregate_stats(4)
    assert four["total"] == 125 and four["OPEN"] == 22
    assert four["total"] - four["OPEN"] == 103
    three = classdb.aggregate_stats(3)
    assert three["total"] == 20 and three["OPEN"] == 0
    assert classdb.aggregate_stats(2)["total"] == 4
    assert classdb.aggregate_stats(1)["total"] == 2


def test_open_cases_per_space():
    opens = Counter(
        format_signature(r.signature.space) for r in classdb.records() if r.status is Status.OPEN
    )
    assert opens == {"4.E": 11, "4.3F": 1, "4.1E": 4, "4.3B": 6}
    assert lookup("4.3F.11").status is Status.OPEN


def test_open_records_have_no_references():
    for r in classdb.records():
        assert (r.status is Status.OPEN) == (not r.references)


def test_constant_temperatures():
    for r in classdb.records():
        n = r.signature.n
        if r.signature.t == 0:
            assert r.references == ("Theorem AF",)
        elif r.signature.t == (1 << n) - 1 and r.label != "4.1E.15":
            assert r.status is Status.CLASSIFIED
            assert r.references[0].startswith("Theorem PI")
    assert lookup("4.1E.15").status is Status.OPEN


def test_spot_checks():
    assert lookup("2.1.3").references == ("Theorem PI(i)",)
    assert lookup("3.7.5").status is Status.CLASSIFIED_IF_FG_K
    assert lookup("4.1E.15").status is Status.OPEN
    rec = lookup("4.3B.14")
    assert rec.status is Status.CLASSIFIED and rec.references == ("Cor adhocO",)
    assert lookup("4.3B.15").references == ("Theorem PI(iii)",)
    assert lookup("4.A.15").references == ("Theorem PI(ii)",)
    assert lookup("2.1.2").references == ("Prop classgraph2",)
    assert lookup("4.F.10").status is Status.CLASSIFIED_IF_FG_K


def test_alias_lookup():
    assert lookup("4.B.6") == lookup("4.A.6")
    assert lookup(Signature(4, 0x0B, 6)).label == "4.A.6"


def test_table_labels_for_three_point_fans():
    for printed, canonical in {"3.3.1": "3.3.2", "3.3.2": "3.3.1", "3.3.5": "3.3.6", "3.6.2": "3.6.4", "3.6.3": "3.6.5", "3.6.5": "3.6.3"}.items():
        rec = lookup_table_label(printed)
        assert rec.label == canonical and rec.table_label == printed
    assert lookup_table_label("3.7.5") == lookup("3.7.5")


def test_fan_translation_preserves_pi_count():
    # the number of purely infinite points is a homeomorphism invariant
    for printed, canonical in {"3.3.1": "3.3.2", "3.3.5": "3.3.6", "3.6.3": "3.6.5"}.items():
        assert bin(parse_signature(printed).t).count("1") == bin(parse_signature(canonical).t).count("1")


def test_unknown_signatures():
    with pytest.raises(UnknownSignatureError):
        lookup("5.1.0")
    with pytest.raises(UnknownSignatureError):
        lookup("2.1")
    with pytest.raises(UnknownSignatureError):
        lookup_table_label("3.3.4")


def test_json_roundtrip():
    doc = json.loads(json.dumps(classdb.export_json()))
    assert doc["format_version"] == 1
    back = classdb.import_json(doc)
    assert back == {r.signature: r for r in classdb.records()}


def test_component_status_discharge():
    c = component_status(parse_signature("3.7.5"))
    assert c.status is Status.CLASSIFIED_IF_FG_K and c.resolved_status is Status.CLASSIFIED
    assert c.notes == (NOTE_FG,)
    c = component_status(parse_signature("4.F.2"))
    assert c.resolved_status is Status.CLASSIFIED and c.notes == (NOTE_UNITAL,)
    c = component_status(parse_signature("4.F.2"), finite_graph=False)
    assert c.resolved_status is Status.CLASSIFIED_IF_UNITAL
    assert component_status(parse_signature("4.E.2")).resolved_status is Status.OPEN


def test_component_status_beyond_four_points():
    assert component_status(Signature(5, 0x3FF, 0)).references == ("Theorem AF",)
    assert component_status(Signature(5, 0x3FF, 31)).references == ("Theorem PI(i)",)
    assert component_status(Signature(5, 0x3FF, 1)).status is Status.UNKNOWN


def test_report_for_graphs(mixed_graph, g_4_39_10):
    rep = classification_report(mixed_graph)
    assert [format_signature(c.signature) for c in rep.components] == ["2.1.2"]
    assert rep.resolved is Status.CLASSIFIED
    rep = classification_report(g_4_39_10)
    (comp,) = rep.components
    assert format_signature(comp.signature) == "4.39.10"
    assert comp.status is Status.CLASSIFIED_IF_UNITAL
    assert comp.resolved_status is Status.CLASSIFIED and comp.notes == (NOTE_UNITAL,)
    assert ClassificationReport.from_json(json.loads(json.dumps(rep.to_json()))) == rep


def test_af_points_of_graphs_are_maximal():
    # sinks of a stratum stay in every ideal above it, so AF points never sit below others
    for g in random_k_graphs(200, seed=70):
        space, _ = prim_space(g)
        top = set(space.poset.maximal_points())
        assert space.af_points <= top


def test_conditional_rows_realisable_by_graphs():
    found = []
    for r in classdb.records():
        if r.status.conditional:
            tp = r.signature.tempered_poset()
            if tp.af_points <= set(tp.poset.maximal_points()):
                found.append(r.label)
    assert found == ["4.39.10", "4.39.14"]
