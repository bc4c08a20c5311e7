from __future__ import annotations

import pathlib
import time
from datetime import timedelta

from ..utils import helpers as h
from ..utils.runlogging import runlog
from .engine import EngineBase
from .job import Job
from .parameters import JobParameters
from .results import JobResult


class Jobs:
    """A class to list and execute the jobs of a campaign file."""

    def __init__(self, out_dir: pathlib.Path, config):
        self.config = config
        self.out_dir = out_dir
        self.jobs: list[Job] = []

    def get_engine(self, section) -> EngineBase:
        """Return the engine of a particular section."""
        engine_name = self.config.get_engine(section)
        try:
            return self.config.load_engine(engine_name)
        except ModuleNotFoundError:
            h.fatal(f'Unknown "{engine_name}" engine')

    def get_config(self):
        """Return the config."""
        return self.config

    def parse_config(self, validate_parameters=True):
        """Parse the configuration file to create the list of jobs to run."""
        # Ensure the configuration file has a valid syntax
        self.config.validate_sections()

        for section in self.config.get_sections():
            engine = self.get_engine(section)
            # every (n, d) combination is a job of its own
            for n in self.config.get_sizes(section, "n"):
                for d in self.config.get_sizes(section, "d"):
                    self.__schedule_job(section, engine, n, d, validate_parameters)

    def __schedule_job(
        self, section, engine: EngineBase, n, d, validate_parameters: bool
    ):
        c = self.config
        parameters = JobParameters(
            section,
            engine.get_name(),
            n=n,
            d=d,
            k=c.get_int(section, "k"),
            k_max=c.get_int(section, "k_max"),
            mode=c.get_mode(section),
            rho=c.get_float(section, "rho"),
            x=c.get_float(section, "x"),
            scaled=c.get_flag(section, "scaled"),
            grid=c.get_grid(section),
            trials=c.get_int(section, "trials"),
            seed=c.get_seed(section),
            radius=c.get_flag(section, "radius"),
            root=c.get_int(section, "root"),
            output_format=c.get_format(section),
        )
        self.add_job(Job(self.count_jobs(), engine, parameters), validate_parameters)

    def add_job(self, job: Job, validate_parameters: bool):
        if validate_parameters:
            job.validate_parameters()
        self.jobs.append(job)

    def count_jobs(self) -> int:
        return len(self.jobs)

    def count_sections(self) -> int:
        """Return the number of sections defined in the configuration file."""
        return len(self.config.get_sections())

    def get_jobs(self) -> list[Job]:
        return self.jobs

    @staticmethod
    def job_key(job: Job) -> str:
        return f"{job.get_job_number()}-{job.get_parameters().get_name()}"

    def run(self) -> dict[str, JobResult]:
        results = {}
        print(f"embtree: {self.count_sections()} sections, {self.count_jobs()} jobs")
        for job in self.get_jobs():
            started = time.monotonic()
            try:
                results[self.job_key(job)] = job.run()
            except h.EmbtreeError as exc:
                h.fatal(f"job {self.job_key(job)}: {exc}")
            elapsed = timedelta(seconds=round(time.monotonic() - started))
            print(f"embtree: [{self.job_key(job)}] done in {elapsed}")
            runlog().info(
                "job done",
                extra={"job": self.job_key(job), "elapsed": str(elapsed)},
            )
        return results

    def dump(self):
        """Write the expanded job list next to the results."""
        with open(self.out_dir / "expanded_job_file.conf", "w") as f:
            for job in self.jobs:
                param = job.get_parameters()
                print(f"[{self.job_key(job)}]", file=f)
                print(f"engine={job.get_engine().get_name()}", file=f)
                print(f"engine_module={job.get_enginemodule().get_name()}", file=f)
                for name, value in param.to_dict().items():
                    print(f"{name}={value}", file=f)
                print(f"format={param.get_format()}", file=f)
                print("", file=f)
