import pathlib
import tempfile
from fractions import Fraction

from ..config.config import load_engine
from ..exact.params import Params
from ..exact.tail import tail_product
from . import test_jobs_common as tjc
from .job import Job
from .parameters import DEFAULT_GRID, JobParameters


class TestJobs(tjc.TestCommon):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.load_jobs(tjc.CONFIG_DIR / "sample.ini")

    def test_parsing(self):
        """Every section and every (n, d) combination becomes a job."""
        self.parse_config()
        assert self.get_jobs().count_sections() == 9
        assert self.get_jobs().count_jobs() == 14
        self.assert_job(0, "tail_small", "exact", n=4, d=3)
        self.assert_job(1, "tail_log_million", "log", n=1000000, d=3)
        expected = [(2, 3), (2, 4), (4, 3), (4, 4), (10, 3), (10, 4)]
        for index, (n, d) in enumerate(expected, start=2):
            self.assert_job(index, "expect_grid", "exact", n=n, d=d)
        self.assert_job(8, "expect_constant", "grid", d=3)
        self.assert_job(9, "limit_sqrt", "limit", d=3)
        self.assert_job(10, "limit_scaled", "scaled", d=4)
        self.assert_job(11, "simulate_small", "growth", n=4)
        self.assert_job(12, "simulate_radius", "radius", n=1024)
        self.assert_job(13, "enumerate_k4", "size", n=4)

    def test_job_keys(self):
        self.parse_config()
        keys = [self.get_jobs().job_key(job) for job in self.get_jobs().get_jobs()]
        assert keys[0] == "0-tail_small"
        assert keys[13] == "13-enumerate_k4"
        assert len(set(keys)) == len(keys)

    def test_parameters(self):
        self.parse_config()
        p = self.get_job_parameters(0)
        assert p.get_set_parameters() == ["n", "d", "k_max"]
        assert p.get_seed() == 0x5EED_0001
        assert p.get_format() == "csv"
        limit = self.get_job_parameters(9)
        assert limit.get_rho() == 0.5
        assert limit.get_grid() == [1000, 10000]
        assert self.get_job_parameters(12).get_seed() == 0x5EED0001

    def test_unused_keyword(self):
        """A keyword the selected engine module ignores is fatal."""
        self.load_jobs(tjc.FIXTURES / "unused_keyword.ini")
        self.should_be_fatal(self.parse_config)

    def test_missing_required(self):
        self.load_jobs(tjc.FIXTURES / "sample_weirds.conf")
        # nod has no degree
        self.get_config().validate_section("nod")
        engine = self.get_jobs().get_engine("nod")
        job = Job(0, engine, JobParameters("nod", "tail", n=4))
        assert job.check_parameters() == "d is required"
        self.should_be_fatal(job.validate_parameters)

    def test_runtime_error_is_fatal(self):
        """Parameters only checked by the computation stop the campaign."""
        self.load_jobs(tjc.FIXTURES / "bad_parity.ini")
        self.parse_config()
        self.should_be_fatal(self.get_jobs().run)

    def test_run_and_dump(self):
        with tempfile.TemporaryDirectory() as tmp:
            self.load_jobs(tjc.CONFIG_DIR / "sample.ini", tmp)
            self.parse_config()
            results = self.get_jobs().run()
            self.get_jobs().dump()
            assert len(results) == 14

            tail = results["0-tail_small"]
            assert tail.summary["job_name"] == "tail_small"
            assert tail.summary["engine_module"] == "exact"
            assert [row["p_float"] for row in tail.rows] == [
                tail_product(Params(4, 3), k) for k in range(1, 5)
            ]
            assert results["13-enumerate_k4"].rows[3]["p_float"] == Fraction(18, 77)
            assert results["11-simulate_small"].summary["seed"] == 42

            expanded = (pathlib.Path(tmp) / "expanded_job_file.conf").read_text()
            assert "[0-tail_small]\nengine=tail\nengine_module=exact\n" in expanded
            assert "[12-simulate_radius]" in expanded


class TestJobParameters:
    def test_flags(self):
        p = JobParameters("limit", "limit", d=3, scaled=False, radius=False)
        assert p.get_set_parameters() == ["d"]
        assert not p.is_scaled()
        assert JobParameters("limit", "limit", d=3, scaled=True).is_scaled()

    def test_defaults(self):
        p = JobParameters("tail", "tail", n=4, d=3)
        assert str(p.get_mode()) == "exact"
        assert p.get_grid() == DEFAULT_GRID
        assert p.get_root() == 0
        assert p.get_k() is None
        assert p.to_dict() == {"n": 4, "d": 3}

    def test_mutually_exclusive(self):
        p = JobParameters("tail", "tail", n=4, d=3, k=2, k_max=3)
        job = Job(0, load_engine("tail"), p)
        assert job.check_parameters() == "k and k_max are mutually exclusive"
