import json
from concurrent.futures import ThreadPoolExecutor
from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from runs.reports import REPORT_FORMATS
from runs.runner import ALGORITHM_CHOICES
from runs.systems import bundled_systems
from runs.tasks import run_system_job


class Command(BaseCommand):
    help = "Run every algorithm over the bundled systems and tabulate the operation counts."

    def add_arguments(self, parser):
        parser.add_argument(
            "--systems",
            nargs="+",
            help="Bundled system names to run (default: all bundled systems).",
        )
        parser.add_argument(
            "--algorithms",
            nargs="+",
            choices=ALGORITHM_CHOICES,
            help="Algorithms to run (default: all).",
        )
        parser.add_argument("--jobs", type=int, help="Worker threads (default: GROEBNER_BENCH_JOBS).")
        parser.add_argument("--report", default="text", choices=REPORT_FORMATS, help="Output format.")
        parser.add_argument(
            "--enqueue",
            action="store_true",
            help="Send the jobs to the Celery broker and print the task ids.",
        )

    def handle(self, *args, **options):
        bundled = bundled_systems(settings.GROEBNER_SYSTEMS_ROOT)
        systems = options.get("systems") or list(bundled)
        unknown = [name for name in systems if name not in bundled]
        if unknown:
            raise CommandError(
                f"Unknown bundled system(s): {', '.join(unknown)}. Known: {', '.join(bundled) or 'none'}.",
                returncode=1,
            )
        algorithms = options.get("algorithms") or ALGORITHM_CHOICES
        jobs = [(system, algorithm) for system in systems for algorithm in algorithms]
        if not jobs:
            self.stdout.write("No benchmark jobs found.")
            return

        if options.get("enqueue"):
            for system, algorithm in jobs:
                result = run_system_job.delay(system, algorithm)
                self.stdout.write(f"{system} {algorithm} {result.id}")
            return

        workers = max(1, options.get("jobs") or settings.GROEBNER_BENCH_JOBS)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {job: executor.submit(self._run_job, *job) for job in jobs}
            results = []
            failures = []
            for job, future in futures.items():
                try:
                    results.append(future.result())
                except Exception as exc:
                    failures.append(f"{job[0]}/{job[1]}: {exc}")
        results.sort(key=lambda report: (report["system"], report["algorithm"]))

        if options["report"] == "json":
            self.stdout.write(json.dumps(results, sort_keys=True, indent=2))
        else:
            self._write_table([self._serialize_report(report) for report in results])
        if failures:
            raise CommandError(
                f"{len(failures)} benchmark job(s) failed: " + "; ".join(failures),
                returncode=1,
            )

    def _run_job(self, system: str, algorithm: str) -> dict[str, Any]:
        return run_system_job.apply(args=(system, algorithm)).get()

    def _serialize_report(self, report: dict[str, Any]) -> dict[str, str]:
        counters = report["counters"]
        predicted = report["predicted"].get("predicted", {})
        verified = report["verified"]
        return {
            "system": report["system"],
            "algorithm": report["algorithm"],
            "basis": str(len(report["basis"])),
            "pairs": str(counters.get("pairs_generated", 0)),
            "zero": str(counters.get("reduced_to_zero", 0)),
            "field_ops": str(counters.get("field_ops", 0)),
            "predicted": predicted.get(report["algorithm"], "-"),
            "verified": "skipped" if verified is None else ("yes" if verified else "no"),
            "elapsed_ms": str(report["elapsed_ms"]),
        }

    def _write_table(self, rows: list[dict[str, str]]) -> None:
        if not rows:
            self.stdout.write("No benchmark results found.")
            return
        headers = {
            "SYSTEM": "system",
            "ALGORITHM": "algorithm",
            "BASIS": "basis",
            "PAIRS": "pairs",
            "ZERO": "zero",
            "FIELD_OPS": "field_ops",
            "PREDICTED": "predicted",
            "VERIFIED": "verified",
            "MS": "elapsed_ms",
        }
        widths = {header: len(header) for header in headers}
        for row in rows:
            for header, key in headers.items():
                widths[header] = max(widths[header], len(row[key]))

        format_str = "  ".join(f"{{{header}:<{widths[header]}}}" for header in headers)
        self.stdout.write(format_str.format(**{header: header for header in headers}))
        for row in rows:
            self.stdout.write(format_str.format(**{header: row[key] for header, key in headers.items()}))
