from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    input: str
    expected: str
    got: str


@dataclass
class SuiteReport:
    suite: str
    params: dict
    seed: int
    trials: int
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self):
        return not self.failures

    def comparable(self):
        """Everything except the timing, which is not reproducible."""
        return (self.suite, self.params, self.seed, self.trials, self.failures)
