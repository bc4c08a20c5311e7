import pathlib
import unittest

from ..config import config
from . import jobs
from .parameters import JobParameters

CONFIG_DIR = pathlib.Path(__file__).parent.parent / "config"
FIXTURES = pathlib.Path(__file__).parent.parent / "tests" / "configs"


class TestCommon(unittest.TestCase):
    def load_jobs(self, config_file: pathlib.Path, out_dir: str = "."):
        """Turn config_file into jobs"""
        self.config = config.Config(str(config_file))
        self.jobs = jobs.Jobs(pathlib.Path(out_dir), self.config)

    def parse_config(self, validate_parameters=True):
        return self.jobs.parse_config(validate_parameters)

    def get_config(self) -> config.Config:
        return self.config

    def get_jobs(self) -> jobs.Jobs:
        return self.jobs

    def get_job_parameters(self, index) -> JobParameters:
        return self.jobs.get_jobs()[index].get_parameters()

    def job_name(self, index) -> str:
        return self.get_job_parameters(index).get_name()

    def job_em(self, index) -> str:
        """Return the engine module serving a job"""
        return self.jobs.get_jobs()[index].get_enginemodule().get_name()

    def should_be_fatal(self, func, *args):
        """Test if the function func is exiting."""
        with self.assertRaises(SystemExit):
            func(*args)

    def assert_job(self, index, name, engine_module, n=None, d=None):
        """Assert if a job does not match the config file description."""
        assert self.job_name(index) == name
        assert self.job_em(index) == engine_module
        if n is not None:
            assert self.get_job_parameters(index).n == n
        if d is not None:
            assert self.get_job_parameters(index).d == d
