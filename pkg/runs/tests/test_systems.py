"""Tests for runs/systems.py."""
import tempfile
from pathlib import Path

from django.conf import settings
from django.test import SimpleTestCase

from runs.systems import (
    SystemParseError,
    bundled_systems,
    format_system,
    load_system,
    parse_system,
)

PARABOLA = """\
# parabola and hyperbola
vars: x, y
order: lex
field: q
x^2 - y
x*y - 1
"""


class ParseSystemTests(SimpleTestCase):
    def test_parses_headers_and_polynomials(self):
        system = parse_system(PARABOLA, name="parabola")

        self.assertEqual(system.name, "parabola")
        self.assertEqual(system.ctx.variable_names, ("x", "y"))
        self.assertEqual(system.ctx.order.kind.value, "lex")
        self.assertEqual(system.ctx.field.descriptor, "q")
        self.assertEqual(len(system), 2)
        self.assertEqual(system.polynomials[0], system.ctx.parse("x^2 - y"))

    def test_head_term_follows_declared_order(self):
        system = parse_system("vars: x, y\norder: lex\nfield: q\nx^2*y - 1")

        self.assertEqual(len(system), 1)
        self.assertEqual(system.polynomials[0].head_monomial, system.ctx.monomial([2, 1]))

    def test_missing_order_and_field_use_defaults(self):
        system = parse_system("vars: x, y\nx^2 - y  # parabola\n", default_order="grevlex", default_field="gf 7")

        self.assertEqual(system.ctx.order.kind.value, "grevlex")
        self.assertEqual(system.ctx.field.descriptor, "gf 7")

    def test_overrides_beat_headers(self):
        system = parse_system(PARABOLA, order="grevlex", field="gf 32003")

        self.assertEqual(system.ctx.order.kind.value, "grevlex")
        self.assertEqual(system.ctx.field.descriptor, "gf 32003")

    def test_rational_coefficients(self):
        system = parse_system("vars: x\n1/2*x - 3/4\n")

        self.assertEqual(system.ctx.format_polynomial(system.polynomials[0]), "1/2*x - 3/4")

    def test_composite_modulus_is_rejected(self):
        with self.assertRaises(SystemParseError) as caught:
            parse_system("vars: x, y\nfield: gf 4\nx + y\n")

        self.assertEqual(caught.exception.line, 2)
        self.assertEqual(caught.exception.column, 8)
        self.assertIn("not prime", str(caught.exception))

    def test_unknown_variable_reports_its_column(self):
        with self.assertRaises(SystemParseError) as caught:
            parse_system("vars: x, y\nx + z\n")

        self.assertEqual((caught.exception.line, caught.exception.column), (2, 5))
        self.assertEqual(str(caught.exception), "line 2, column 5: unknown variable 'z'")

    def test_unknown_order(self):
        with self.assertRaises(SystemParseError) as caught:
            parse_system("vars: x\norder: revlex\nx\n")

        self.assertEqual((caught.exception.line, caught.exception.column), (2, 8))

    def test_structural_errors(self):
        cases = {
            "x + y\n": (1, "missing 'vars:'"),
            "vars: x\nx\norder: lex\n": (3, "must come before the polynomials"),
            "vars: x\nvars: y\ny\n": (2, "declared twice"),
            "ring: q\nvars: x\nx\n": (1, "unknown header"),
            "vars: x, x\nx\n": (1, "declared twice"),
            "vars: x, 2y\nx\n": (1, "invalid variable name"),
            "vars: x\nx - x\n": (2, "polynomial is zero"),
            "vars: x\nx & 1\n": (2, "unexpected character"),
            "# nothing here\n": (2, "system has no polynomials"),
        }
        for text, (line, message) in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(SystemParseError) as caught:
                    parse_system(text)
                self.assertEqual(caught.exception.line, line)
                self.assertIn(message, caught.exception.message)

    def test_parse_error_is_a_value_error(self):
        with self.assertRaises(ValueError):
            parse_system("")


class FormatSystemTests(SimpleTestCase):
    def test_emitted_text_parses_back_to_the_same_system(self):
        texts = [
            PARABOLA,
            "vars: a, b\norder: grevlex\nfield: q\n1/2*a^2*b - 3*b + 5/7\na - b\n",
            "vars: u0, u1\norder: grlex\nfield: gf 101\nu0^3 - 2*u1\n",
        ]
        for text in texts:
            with self.subTest(text=text):
                system = parse_system(text, name="sample")
                again = parse_system(format_system(system), name="sample")
                self.assertEqual(again.polynomials, system.polynomials)
                self.assertEqual(format_system(again), format_system(system))

    def test_emits_name_as_comment(self):
        text = format_system(parse_system(PARABOLA, name="parabola"))

        self.assertEqual(
            text,
            "# parabola\nvars: x, y\norder: lex\nfield: q\nx^2 - y\nx*y - 1\n",
        )


class LoadSystemTests(SimpleTestCase):
    def test_bundled_systems_all_parse(self):
        bundled = bundled_systems(settings.GROEBNER_SYSTEMS_ROOT)

        self.assertTrue(
            {"cyclic-3", "cyclic-4", "cyclic-5", "katsura-3", "katsura-4"} <= set(bundled)
        )
        for name in bundled:
            with self.subTest(system=name):
                system = load_system(name, settings.GROEBNER_SYSTEMS_ROOT)
                self.assertEqual(system.name, name)
                self.assertGreater(len(system), 0)

    def test_cyclic_systems_have_n_generators(self):
        for size in (3, 4, 5):
            system = load_system(f"cyclic-{size}", settings.GROEBNER_SYSTEMS_ROOT)
            self.assertEqual(len(system), size)
            self.assertEqual(system.ctx.variable_count, size)

    def test_loads_from_path(self):
        with tempfile.TemporaryDirectory() as root:
            path = Path(root) / "mine.sys"
            path.write_text(PARABOLA, encoding="utf-8")

            system = load_system(str(path), settings.GROEBNER_SYSTEMS_ROOT)

        self.assertEqual(system.name, "mine")
        self.assertEqual(len(system), 2)

    def test_undecodable_file_is_a_parse_error(self):
        with tempfile.TemporaryDirectory() as root:
            path = Path(root) / "binary.sys"
            path.write_bytes(b"vars: x\nx + \xff\xfe\n")

            with self.assertRaises(SystemParseError) as caught:
                load_system(str(path), settings.GROEBNER_SYSTEMS_ROOT)

        self.assertEqual((caught.exception.line, caught.exception.column), (2, 5))
        self.assertEqual(caught.exception.message, "binary.sys is not valid UTF-8 (byte 12)")

    def test_loads_from_stdin_text(self):
        system = load_system("-", settings.GROEBNER_SYSTEMS_ROOT, stdin_text=PARABOLA)

        self.assertEqual(system.name, "stdin")

    def test_stdin_without_text(self):
        with self.assertRaises(SystemParseError):
            load_system("-", settings.GROEBNER_SYSTEMS_ROOT)

    def test_missing_system_lists_bundled_names(self):
        with self.assertRaises(FileNotFoundError) as caught:
            load_system("no-such-system", settings.GROEBNER_SYSTEMS_ROOT)

        self.assertIn("cyclic-3", str(caught.exception))
