import json

from django.core.management.base import BaseCommand, CommandError

from algebra.errors import DomainError
from complexity.cost_model import (
    ComplexityReport,
    CostModelInput,
    crossover_point,
    eval_f5_reduction_cost,
    eval_fast_reduction_cost,
    f5_reduction_cost_coefficients,
    fast_reduction_cost_coefficients,
    fast_reduction_threshold,
    format_cost_polynomial,
    format_rational,
)
from complexity.pair_counts import simulate_pair_counts


class Command(BaseCommand):
    help = "Evaluate the field-operation cost model without running any algorithm."

    def add_arguments(self, parser):
        parser.add_argument("--m", type=int, required=True, help="Number of generators.")
        parser.add_argument("--n", type=int, required=True, help="Number of variables.")
        size = parser.add_mutually_exclusive_group(required=True)
        size.add_argument("--N", type=int, dest="N", help="Monomial count N.")
        size.add_argument("--degree", type=int, help="Degree bound D; N is the number of monomials up to D.")
        parser.add_argument("--b-size", type=int, help="Basis size for the per-reduction cost rows.")
        parser.add_argument("--trace", action="store_true", help="Include the critical-pair count trace.")
        parser.add_argument("--json", action="store_true", help="Emit JSON output.")

    def handle(self, *args, **options):
        try:
            if options.get("degree") is not None:
                model = CostModelInput.from_degree(options["m"], options["n"], options["degree"])
            else:
                model = CostModelInput(m=options["m"], n=options["n"], N=options["N"])
            payload = self._evaluate(model, options.get("b_size"), options.get("trace", False))
        except DomainError as exc:
            raise CommandError(str(exc), returncode=1) from exc

        if options.get("json"):
            self.stdout.write(json.dumps(payload, sort_keys=True))
            return
        self._write_text(payload)

    def _evaluate(self, model: CostModelInput, b_size, trace: bool) -> dict:
        payload = ComplexityReport.build(model).to_dict()
        del payload["measured"]
        payload["crossover_N"] = crossover_point(model.m, model.n)
        threshold = fast_reduction_threshold(model)
        payload["reduction"] = {
            "f5": format_cost_polynomial(f5_reduction_cost_coefficients(model), "B"),
            "fast": format_cost_polynomial(fast_reduction_cost_coefficients(model), "B"),
            "threshold_B": threshold,
        }
        if b_size is not None:
            payload["reduction"]["b_size"] = b_size
            payload["reduction"]["f5_value"] = format_rational(eval_f5_reduction_cost(model, b_size))
            payload["reduction"]["fast_value"] = format_rational(eval_fast_reduction_cost(model, b_size))
        if trace:
            payload["trace"] = simulate_pair_counts(model.m, model.N).as_dict()
        return payload

    def _write_text(self, payload: dict) -> None:
        model = payload["model"]
        degree = "-" if model["D"] is None else model["D"]
        self.stdout.write(f"model: m={model['m']} n={model['n']} D={degree} N={model['N']}")
        if not payload["in_domain"]:
            self.stdout.write("note: m >= N, outside the model's domain")
        for name in sorted(payload["predicted"]):
            self.stdout.write(
                f"{name}: {payload['predicted'][name]} (leading {payload['leading_terms'][name]})"
            )
            self.stdout.write(f"  {payload['polynomials'][name]}")
        self.stdout.write(f"ordering fast < f5b < buchberger holds for N >= {payload['crossover_N']}")

        reduction = payload["reduction"]
        self.stdout.write(f"f5 reduction:   {reduction['f5']}")
        self.stdout.write(f"fast reduction: {reduction['fast']}")
        if "b_size" in reduction:
            self.stdout.write(
                f"at |B|={reduction['b_size']}: f5={reduction['f5_value']} fast={reduction['fast_value']}"
            )
        threshold = reduction["threshold_B"]
        if threshold is None:
            self.stdout.write("fast reduction is never cheaper")
        else:
            self.stdout.write(f"fast reduction is cheaper for |B| >= {threshold}")

        trace = payload.get("trace")
        if trace:
            self.stdout.write(f"pairs: {' '.join(str(value) for value in trace['pairs'])}")
            self.stdout.write(f"main loop iterations: {trace['loops']}")
            for note in trace["notes"]:
                self.stdout.write(f"note: {note}")
