import json
from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand

from runs.systems import bundled_systems, parse_system


class Command(BaseCommand):
    help = "List the bundled polynomial systems."

    def add_arguments(self, parser):
        parser.add_argument("--json", action="store_true", help="Emit JSON output.")

    def handle(self, *args, **options):
        rows = [
            self._serialize_system(name, path)
            for name, path in bundled_systems(settings.GROEBNER_SYSTEMS_ROOT).items()
        ]

        if options.get("json", False):
            self.stdout.write(json.dumps(rows))
            return

        if not rows:
            self.stdout.write("No bundled systems found.")
            return

        headers = ["NAME", "VARS", "ORDER", "FIELD", "POLYNOMIALS"]
        widths = {header: len(header) for header in headers}
        for row in rows:
            widths["NAME"] = max(widths["NAME"], len(row["name"]))
            widths["VARS"] = max(widths["VARS"], len(row["vars"]))
            widths["ORDER"] = max(widths["ORDER"], len(row["order"]))
            widths["FIELD"] = max(widths["FIELD"], len(row["field"]))

        format_str = "  ".join(f"{{{header}:<{widths[header]}}}" for header in headers)
        self.stdout.write(format_str.format(**{header: header for header in headers}))
        for row in rows:
            self.stdout.write(
                format_str.format(
                    NAME=row["name"],
                    VARS=row["vars"],
                    ORDER=row["order"],
                    FIELD=row["field"],
                    POLYNOMIALS=row["polynomials"],
                )
            )

    def _serialize_system(self, name: str, path) -> dict[str, Any]:
        system = parse_system(
            path.read_text(encoding="utf-8"),
            name=name,
            default_order=settings.GROEBNER_DEFAULT_ORDER,
            default_field=settings.GROEBNER_DEFAULT_FIELD,
        )
        return {
            "name": name,
            "vars": ",".join(system.ctx.variable_names),
            "order": system.ctx.order.kind.value,
            "field": system.ctx.field.descriptor,
            "polynomials": len(system),
        }
