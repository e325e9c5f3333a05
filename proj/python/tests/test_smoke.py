"""Smoke tests for the python bindings."""

import json

try:
    import kacmod as km
except ImportError:  # running against the build tree
    import _kacmod as km


def test_qbracket_values():
    assert km.qbracket(2.0, 2.0) == 2.5
    assert km.qbracket(2.0, 0.0) == 0.0
    assert abs(km.qbracket_sqrt(2.0, 2.0) - 2.5**0.5) < 1e-15


def test_classify():
    typical = km.classify([1.0, 0.0, 1.0])
    assert typical["kind"] == "typical"
    assert typical["dim"] == 8
    assert km.classify([1.0, 0.0, -2.0])["kind"] == "class1"
    assert km.classify([1.0, 0.0, 0.0])["kind"] == "class2"


def test_build_module_shape():
    mod = km.build_module([1.0, 0.0, 1.0], q=1.7)
    assert mod["dim"] == 8
    assert len(mod["basis"]) == 8
    assert len(mod["matrices"]["E23"]) == 8
    assert sum(mod["parity"]) == 4  # floors 1 and 2 are odd


def test_factor_module_dimension():
    factor = km.build_module([1.0, 0.0, 0.0], q=1.7, factor=True)
    assert factor["dim"] == 3  # class-2 factor: 2d - 1 with d = 2


def test_check_module_all_passed():
    for report in km.check_module([2.0, 0.0, 0.37], q=1.3):
        assert report["passed"], report


def test_bundle_json_roundtrip_fields():
    text = km.bundle_json([1.0, 0.0, 1.0], q=1.7)
    doc = json.loads(text)
    assert doc["format"] == "kacmod/1"
    assert doc["dim"] == 8
    assert len(doc["matrices"]["E11"]) == 64


def test_limit_compare_small():
    assert km.limit_compare([1.0, 0.0, 1.0], 1.0 + 1e-8) <= 1e-4
