import json

import pytest

from umbra import catalog
from umbra.catalog import (
    CatalogError,
    IdentityCheck,
    UnknownCheckError,
    reports_to_csv,
    reports_to_json,
)

NON_SLOW = 35
SLOW = {"int-j0-xsq", "tricomi-sincos", "tricomi-j0-projection"}


class TestRegistry:
    def test_expected_population(self):
        ids = catalog.all_ids()
        assert len(ids) == 38
        assert SLOW <= set(ids)

    def test_slow_flags(self):
        for check_id in SLOW:
            assert "slow" in catalog.get_check(check_id).flags
        assert "slow" not in catalog.get_check("mehler").flags

    def test_unknown_id(self):
        with pytest.raises(UnknownCheckError):
            catalog.run_check("nope")

    def test_every_check_carries_reference_and_samples(self):
        for check_id in catalog.all_ids():
            check = catalog.get_check(check_id)
            assert check.reference.strip()
            assert check.samples
            assert check.tolerance > 0

    def test_registration_guards(self):
        with pytest.raises(CatalogError):
            IdentityCheck(id="x", description="d", reference="",
                          samples=((),), tolerance=1e-6, pair=lambda s: (0, 0))
        with pytest.raises(CatalogError):
            IdentityCheck(id="x", description="d", reference="r",
                          samples=(), tolerance=1e-6, pair=lambda s: (0, 0))
        with pytest.raises(CatalogError):
            IdentityCheck(id="x", description="d", reference="r",
                          samples=((),), tolerance=0.0, pair=lambda s: (0, 0))


class TestRunner:
    def test_default_suite_skips_slow(self):
        reports = catalog.run_all()
        assert len(reports) == NON_SLOW
        assert all(r.passed for r in reports)
        assert not SLOW & {r.id for r in reports}

    def test_include_slow(self):
        reports = catalog.run_all(include_slow=True)
        assert len(reports) == 38
        assert all(r.passed for r in reports)

    def test_prefix_filter(self):
        reports = catalog.run_all("gf-")
        assert reports
        assert all(r.id.startswith("gf-") for r in reports)

    def test_reports_sorted_by_id(self):
        ids = [r.id for r in catalog.run_all("borel")]
        assert ids == sorted(ids)

    def test_tolerance_scale_loosens_and_tightens(self):
        base = catalog.run_check("prop1")
        assert base.passed
        strict = catalog.run_check("prop1", tolerance_scale=1e-9)
        assert not strict.passed  # quadrature noise exceeds the scaled bar
        assert strict.max_abs_diff == base.max_abs_diff  # values unchanged


class TestReports:
    def test_deterministic_json(self):
        a = reports_to_json(catalog.run_all("mehler"))
        b = reports_to_json(catalog.run_all("mehler"))
        assert a == b

    def test_json_schema_round_trip(self):
        reports = catalog.run_all("borel-c0")
        parsed = json.loads(reports_to_json(reports))
        assert parsed[0]["id"] == "borel-c0-exp"
        assert set(parsed[0]) == {"id", "pass", "tolerance", "max_abs_diff",
                                  "max_rel_diff", "samples", "reference"}
        sample = parsed[0]["samples"][0]
        assert set(sample) == {"sample", "lhs", "rhs", "abs_diff", "rel_diff"}

    def test_runtime_only_on_request(self):
        reports = catalog.run_all("mehler")
        with_rt = json.loads(reports_to_json(reports, include_runtime=True))
        without = json.loads(reports_to_json(reports))
        assert "runtime_ms" in with_rt[0]
        assert "runtime_ms" not in without[0]

    def test_csv_summary(self):
        text = reports_to_csv(catalog.run_all("mehler"))
        lines = text.strip().splitlines()
        assert lines[0] == "id,pass,tolerance,max_abs_diff,max_rel_diff," \
                           "n_samples,reference"
        assert lines[1].startswith("mehler,True,")

    def test_report_pass_consistency(self):
        for report in catalog.run_all():
            within = all(s.rel_diff <= report.tolerance for s in report.samples)
            assert report.passed == within
