from framedlinks.report import SuiteReport


def test_report_table_and_json():
    rep = SuiteReport("demo")
    assert rep.add("first", True, "fine")
    assert not rep.add("second", False)
    assert not rep.ok and [c.name for c in rep.failures()] == ["second"]
    table = rep.table()
    assert "first   PASS  fine" in table and "=> 1 failed" in table
    obj = rep.to_json_obj()
    assert obj["ok"] is False and len(obj["checks"]) == 2


def test_extend_prefixes_names():
    inner = SuiteReport("inner")
    inner.add("x", True)
    outer = SuiteReport("outer")
    outer.extend(inner, "sub: ")
    assert outer.checks[0].name == "sub: x" and outer.ok
    assert SuiteReport("empty").table().endswith("all passed")
