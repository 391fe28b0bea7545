import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from algebra.errors import AlgebraError
from groebner.errors import ComputationLimitExceeded, InvariantViolation, SignatureCollisionError
from runs.models import ComputationRun
from runs.reports import REPORT_FORMATS, emit_prediction, emit_report, emit_reports
from runs.runner import ALGORITHM_CHOICES, InputSummary, predict, run
from runs.systems import SystemParseError, load_system

INPUT_ERROR = 1
INTERNAL_ERROR = 2


class Command(BaseCommand):
    help = "Compute a Gröbner basis of a system file and report the operation counts."

    def add_arguments(self, parser):
        parser.add_argument("system", help="Path to a system file, '-' for stdin, or a bundled system name.")
        parser.add_argument(
            "--algorithm",
            default="f5b",
            choices=[*ALGORITHM_CHOICES, "all"],
            help="Algorithm to run (default: f5b).",
        )
        parser.add_argument("--order", help="Override the system's monomial order.")
        parser.add_argument("--field", help="Override the system's field ('q' or 'gf <p>').")
        parser.add_argument(
            "--reduction",
            default="safe",
            choices=["safe", "literal"],
            help="Reducer admissibility for f5b-fast (default: safe).",
        )
        parser.add_argument(
            "--selection",
            default="normal",
            choices=["normal", "signature"],
            help="Critical pair order for f5b and f5b-fast (default: normal).",
        )
        parser.add_argument("--report", default="text", choices=REPORT_FORMATS, help="Output format.")
        parser.add_argument("--predict", action="store_true", help="Only evaluate the cost model.")
        parser.add_argument("--degree-bound", type=int, help="Use this degree bound instead of the computed one.")
        parser.add_argument("--max-pairs", type=int, help="Critical pair ceiling (default: GROEBNER_MAX_PAIRS).")
        parser.add_argument("--save", action="store_true", help="Store each report as a ComputationRun.")

    def handle(self, *args, **options):
        reference = options["system"]
        stdin_text = sys.stdin.read() if reference == "-" else None
        try:
            system = load_system(
                reference,
                settings.GROEBNER_SYSTEMS_ROOT,
                stdin_text=stdin_text,
                order=options.get("order"),
                field=options.get("field"),
                default_order=settings.GROEBNER_DEFAULT_ORDER,
                default_field=settings.GROEBNER_DEFAULT_FIELD,
            )
            summary = InputSummary.from_polynomials(list(system.polynomials), options.get("degree_bound"))
        except (SystemParseError, AlgebraError, OSError) as exc:
            raise CommandError(str(exc), returncode=INPUT_ERROR) from exc

        if options["predict"]:
            self.stdout.write(emit_prediction(predict(summary).to_dict(), options["report"]))
            return

        algorithms = ALGORITHM_CHOICES if options["algorithm"] == "all" else [options["algorithm"]]
        max_pairs = options.get("max_pairs") or settings.GROEBNER_MAX_PAIRS
        reports = []
        for algorithm in algorithms:
            try:
                report = run(
                    system,
                    algorithm,
                    mode=options["reduction"],
                    selection=options["selection"],
                    max_pairs=max_pairs,
                    validate=settings.GROEBNER_VALIDATE_OUTPUT,
                    degree_bound=options.get("degree_bound"),
                )
            except (InvariantViolation, SignatureCollisionError) as exc:
                raise CommandError(f"{algorithm}: internal invariant violated: {exc}", returncode=INTERNAL_ERROR) from exc
            except (ComputationLimitExceeded, AlgebraError) as exc:
                raise CommandError(f"{algorithm}: {exc}", returncode=INPUT_ERROR) from exc
            reports.append(report)
            if options["save"]:
                ComputationRun.from_report(report).save()

        if len({tuple(report.basis) for report in reports}) > 1:
            self.stderr.write("warning: algorithms returned different reduced bases")
        if options["report"] == "json" and len(reports) == 1:
            self.stdout.write(emit_report(reports[0], "json"))
        else:
            self.stdout.write(emit_reports(reports, options["report"]))

        # Literal fast reduction may lose the basis property; every other mode must not.
        unverified = [
            report.algorithm for report in reports if report.verified is False and report.reduction != "literal"
        ]
        if unverified:
            raise CommandError(
                f"{', '.join(unverified)}: output is not a Gröbner basis", returncode=INTERNAL_ERROR
            )
