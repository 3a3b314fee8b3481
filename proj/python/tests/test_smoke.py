import json

import pytest

import binplot

CSV = "x,y,class\n1,1,a\n2,3,b\n4,2,a\n"


def test_csv_roundtrip():
    ds = binplot.Dataset.from_csv(CSV)
    assert ds.size == 3
    assert ds.labels == ["a", "b"]
    again = binplot.Dataset.from_csv(ds.to_csv())
    assert again.points() == ds.points()


def test_missing_column():
    with pytest.raises(binplot.BinplotError, match="missing-column"):
        binplot.Dataset.from_csv("x,y\n1,2\n")


def test_rect_lattice_counts():
    ds = binplot.cluster_dataset(2000, 3, 5)
    lattice = binplot.build_lattice(ds.bounding_domain(), "rect", 10)
    assert lattice.bin_count == 100
    counts = binplot.aggregate(lattice, ds, threads=2)
    assert sum(map(sum, counts)) == 2000


def test_normalize_unit_max():
    ds = binplot.demo_dataset()
    lattice = binplot.build_lattice(ds.bounding_domain(), "hex", 8)
    values = binplot.normalize(lattice, ds, "global")
    assert max(map(max, values)) == 1.0


def test_largest_remainder():
    assert binplot.largest_remainder([1, 1, 1], 2) == [1, 1, 0]


def test_validate_reports_rule():
    config = json.dumps({"glyph": "pie", "normalization": "class-internal"})
    rules = [v["rule"] for v in binplot.validate(config)]
    assert "pie-requires-bin-internal" in rules


def test_render_deterministic():
    ds = binplot.demo_dataset()
    config = json.dumps({"background": "weave", "normalization": "global", "bins_x": 8})
    a = binplot.render_svg(ds, config, seed=7)
    b = binplot.render_svg(ds, config, seed=7, threads=4)
    assert a == b
    assert a.startswith("<?xml")


def test_scene_json_panels():
    ds = binplot.demo_dataset()
    config = json.dumps({"composition": "juxtaposed", "normalization": "global"})
    scene = json.loads(binplot.scene_json(ds, config))
    assert len(scene["panels"]) == 3


def test_invalid_design_raises():
    ds = binplot.demo_dataset()
    with pytest.raises(ValueError):
        binplot.render_svg(ds, json.dumps({"glyph": "pie"}))


def test_error_carries_code_and_line():
    with pytest.raises(binplot.BinplotError) as info:
        binplot.Dataset.from_csv("x,y,class\n1,2,a\n1,bad,b\n")
    assert info.value.code == "parse-error"
    assert info.value.line == 3


def test_config_as_dict_or_string():
    ds = binplot.demo_dataset()
    cfg = {"background": "weave", "normalization": "global", "seed": 3}
    assert binplot.render_svg(ds, cfg) == binplot.render_svg(ds, json.dumps(cfg))
