"""Unit tests for the verification service."""

import json
import logging

import pytest
from testfixtures import LogCapture

from skewlab.services import VerificationService
from skewlab.services.verification import RELATION_ORDER
from skewlab.types import RelationName

RELATIONS = set(RelationName.__args__)


@pytest.fixture(scope="module")
def report():
    """A small verification run shared by the tests of this module."""
    return VerificationService().run([2, 3], 5, seed=42)


class TestRun:
    """Test cases for VerificationService.run()."""

    def test_everything_holds(self, report):
        """Test every check holds on a small run."""
        assert VerificationService.all_passed(report)
        assert report["summary"]["worst_slack"] >= -1e-9

    def test_covers_every_relation(self, report):
        """Test every relation appears in the report."""
        assert set(report["summary"]["by_relation"]) == RELATIONS
        assert tuple(report["summary"]["by_relation"]) == RELATION_ORDER

    def test_records(self, report):
        """Test each record carries its dimension and sample index."""
        checks = report["checks"]
        per_sample = len(checks) // 10
        assert len(checks) == report["summary"]["total"] == 10 * per_sample
        assert checks[0]["dim"] == 2
        assert checks[0]["sample"] == 0
        assert checks[-1]["dim"] == 3
        assert checks[-1]["sample"] == 4
        assert set(checks[0]) == {
            "name",
            "lhs",
            "rhs",
            "slack",
            "holds",
            "tol",
            "inputs_digest",
            "dim",
            "sample",
        }

    def test_summary(self, report):
        """Test the summary records the run configuration."""
        summary = report["summary"]
        assert summary["seed"] == 42
        assert summary["dims"] == [2, 3]
        assert summary["samples"] == 5
        assert "timestamp" in report

    def test_deterministic(self, report):
        """Test a repeated run differs only in its timestamp."""
        again = VerificationService().run([2, 3], 5, seed=42)
        assert again["checks"] == report["checks"]
        assert again["summary"] == report["summary"]

    def test_threads_do_not_change_results(self, report):
        """Test a parallel run gives the same records."""
        parallel = VerificationService(threads=3).run([2, 3], 5, seed=42)
        assert parallel["checks"] == report["checks"]

    def test_sample_replays(self, report):
        """Test one sample can be replayed on its own."""
        service = VerificationService()
        replay = [result.to_json() for result in service.sample(42, 3, 2)]
        recorded = [
            {key: value for key, value in record.items() if key not in ("dim", "sample")}
            for record in report["checks"]
            if record["dim"] == 3 and record["sample"] == 2
        ]
        assert replay == recorded

    def test_logs_summary(self):
        """Test the run logs its totals."""
        with LogCapture(level=logging.INFO) as capture:
            VerificationService().run([2], 1, seed=0)
        messages = [record.getMessage() for record in capture.records]
        assert any(message.startswith("Verified ") for message in messages)

    @pytest.mark.parametrize(("dims", "samples"), [([2], 0), ([], 3)])
    def test_invalid_arguments(self, dims, samples):
        """Test an empty run raises ValueError."""
        with pytest.raises(ValueError):  # noqa: PT011
            VerificationService().run(dims, samples, seed=0)


class TestSummarize:
    """Test cases for VerificationService.summarize() and all_passed()."""

    def test_summarize(self):
        """Test totals, passes and worst slacks per relation."""
        records = [
            {"name": "theorem1", "holds": True, "slack": 0.5},
            {"name": "theorem1", "holds": False, "slack": -0.25},
            {"name": "lemma2", "holds": True, "slack": 0.0},
        ]
        summary = VerificationService.summarize(records)
        assert summary["total"] == 3
        assert summary["passed"] == 2
        assert summary["worst_slack"] == -0.25
        assert summary["by_relation"] == {
            "theorem1": {"count": 2, "passed": 1, "worst_slack": -0.25},
            "lemma2": {"count": 1, "passed": 1, "worst_slack": 0.0},
        }
        assert not VerificationService.all_passed({"summary": summary})

    def test_relation_order(self):
        """Test relations come out in their canonical order, unknown names last."""
        records = [
            {"name": "custom", "holds": True, "slack": 1.0},
            {"name": "theorem2", "holds": True, "slack": 0.1},
            {"name": "i_nonnegative", "holds": True, "slack": 0.2},
        ]
        summary = VerificationService.summarize(records)
        assert list(summary["by_relation"]) == ["theorem2", "i_nonnegative", "custom"]

    def test_empty(self):
        """Test an empty record list has no worst slack."""
        summary = VerificationService.summarize([])
        assert summary["worst_slack"] is None
        assert VerificationService.all_passed({"summary": summary})

    def test_write_report(self, tmp_path, report):
        """Test the report is written as JSON."""
        path = VerificationService.write_report(report, tmp_path / "report.json")
        assert json.loads(path.read_text(encoding="utf-8")) == report
