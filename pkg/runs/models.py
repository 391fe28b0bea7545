from django.db import models


class ComputationRun(models.Model):
    ALGORITHM_CHOICES = [
        ("buchberger", "Buchberger"),
        ("f5b", "F5B"),
        ("f5b-fast", "F5B with fast reduction"),
    ]

    system = models.CharField(max_length=255)
    algorithm = models.CharField(max_length=16, choices=ALGORITHM_CHOICES)
    reduction = models.CharField(max_length=16, blank=True, default="")
    field = models.CharField(max_length=64)
    order = models.CharField(max_length=16)
    variables = models.JSONField(default=list)
    generator_count = models.PositiveIntegerField()
    variable_count = models.PositiveIntegerField()
    degree_bound = models.PositiveIntegerField()
    basis = models.JSONField(default=list)
    counters = models.JSONField(default=dict)
    predicted = models.JSONField(default=dict)
    verified = models.BooleanField(null=True, blank=True)
    elapsed_ms = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ("-created_at", "-id")
        indexes = [models.Index(fields=["system", "algorithm"], name="runs_run_system_algo_idx")]

    def __str__(self) -> str:
        return f"{self.system} / {self.algorithm}"

    @classmethod
    def from_report(cls, report) -> "ComputationRun":
        """Unsaved row for a ``runs.runner.RunReport``."""
        return cls(
            system=report.system,
            algorithm=report.algorithm,
            reduction=report.reduction or "",
            field=report.field,
            order=report.order,
            variables=list(report.variables),
            generator_count=report.input.m,
            variable_count=report.input.n,
            degree_bound=report.input.degree_bound,
            basis=list(report.basis),
            counters=report.counters,
            predicted=report.predicted,
            verified=report.verified,
            elapsed_ms=report.elapsed_ms,
        )

    @property
    def field_ops(self) -> int:
        return int(self.counters.get("field_ops", 0))
