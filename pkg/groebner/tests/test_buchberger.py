import random

from django.test import SimpleTestCase
from sympy import groebner

from algebra.errors import DomainError
from algebra.monomials import Monomial
from algebra.orders import MonomialOrder
from groebner.buchberger import (
    PairQueue,
    buchberger_basis,
    is_groebner,
    normal_form,
    reduce_basis,
    spol,
)
from groebner.errors import ComputationLimitExceeded, InvariantViolation
from groebner.test_utils import build_context, build_system, random_system


class SpolTests(SimpleTestCase):
    def setUp(self):
        self.ctx = build_context("x,y", order="lex")

    def test_identical_inputs_cancel(self):
        f = self.ctx.parse("x^2 + 3*y")
        self.assertTrue(spol(f, f).is_zero())

    def test_overlapping_heads(self):
        f, g = build_system(self.ctx, "x^2 + y", "x*y + 1")
        self.assertEqual(spol(f, g), self.ctx.parse("y^2 - x"))

    def test_coprime_heads(self):
        f, g = build_system(self.ctx, "x^2 + 1", "y^2 + 1")
        self.assertEqual(spol(f, g), self.ctx.parse("y^2 - x^2"))

    def test_head_coefficients_cross_scale(self):
        f, g = build_system(self.ctx, "2*x + 1", "3*x + y")
        self.assertEqual(spol(f, g), self.ctx.parse("3 - 2*y"))

    def test_zero_input_is_rejected(self):
        with self.assertRaises(DomainError):
            spol(self.ctx.zero(), self.ctx.parse("x"))


class NormalFormTests(SimpleTestCase):
    def setUp(self):
        self.ctx = build_context("x,y", order="lex")

    def test_irreducible_polynomial_is_unchanged(self):
        h = self.ctx.parse("x - y^2")
        basis = build_system(self.ctx, "x^2 - y", "x*y - 1")
        self.assertEqual(normal_form(h, basis), h)

    def test_single_step(self):
        basis = build_system(self.ctx, "x^2 - y")
        self.assertEqual(normal_form(self.ctx.parse("x^2*y"), basis), self.ctx.parse("y^2"))

    def test_tail_terms_are_reduced(self):
        basis = build_system(self.ctx, "y^2 - 1")
        h = self.ctx.parse("x + y^3")
        self.assertEqual(normal_form(h, basis), self.ctx.parse("x + y"))
        self.assertEqual(normal_form(h, basis, top_only=True), h)

    def test_zero_reduces_to_zero(self):
        self.assertTrue(normal_form(self.ctx.zero(), build_system(self.ctx, "x")).is_zero())

    def test_idempotent(self):
        rng = random.Random(0)
        ctx = build_context("x,y,z", order="grevlex", field="gf 101")
        for _ in range(30):
            basis = random_system(rng, ctx, generators=3, max_degree=2)
            h = random_system(rng, ctx, generators=1, max_degree=4, max_terms=5)[0]
            once = normal_form(h, basis)
            self.assertEqual(normal_form(once, basis), once)
            for _, monomial in once:
                self.assertFalse(any(g.head_monomial.divides(monomial) for g in basis))

    def test_counts_reduction_steps(self):
        basis = build_system(self.ctx, "x^2 - y")
        normal_form(self.ctx.parse("x^2*y"), basis)
        self.assertEqual(self.ctx.counter.event("reduction_steps"), 1)


class PairQueueTests(SimpleTestCase):
    def test_smallest_lcm_first_then_indices(self):
        queue = PairQueue(MonomialOrder("lex", 2))
        queue.push(0, 2, Monomial((2, 0)))
        queue.push(1, 2, Monomial((1, 1)))
        queue.push(0, 1, Monomial((1, 1)))
        self.assertEqual([queue.pop() for _ in range(3)], [(0, 1), (1, 2), (0, 2)])

    def test_rejects_duplicates_and_self_pairs(self):
        queue = PairQueue(MonomialOrder("lex", 2))
        queue.push(0, 1, Monomial((1, 1)))
        with self.assertRaises(InvariantViolation):
            queue.push(1, 0, Monomial((1, 1)))
        with self.assertRaises(InvariantViolation):
            queue.push(2, 2, Monomial((1, 1)))


class BuchbergerBasisTests(SimpleTestCase):
    def test_single_generator(self):
        ctx = build_context("x,y", order="lex")
        self.assertEqual(buchberger_basis([ctx.parse("x")]), [ctx.parse("x")])

    def test_worked_example(self):
        ctx = build_context("x,y", order="lex")
        basis = buchberger_basis(build_system(ctx, "x^2 - y", "x*y - 1"))
        self.assertTrue(is_groebner(basis))
        self.assertEqual(reduce_basis(basis), build_system(ctx, "x - y^2", "y^3 - 1"))

    def test_membership_of_worked_example(self):
        ctx = build_context("x,y", order="lex")
        a, b = build_system(ctx, "x - y^2", "y^3 - 1")
        self.assertEqual(_times(ctx, "x + y^2", a) + _times(ctx, "y", b), ctx.parse("x^2 - y"))
        self.assertEqual(_times(ctx, "y", a) + b, ctx.parse("x*y - 1"))

    def test_linear_system_over_rationals(self):
        ctx = build_context("x,y", order="lex")
        basis = buchberger_basis(build_system(ctx, "x + y", "x - y"))
        self.assertEqual(reduce_basis(basis), build_system(ctx, "x", "y"))

    def test_zero_generators_are_dropped(self):
        ctx = build_context("x,y", order="lex")
        basis = buchberger_basis([ctx.zero(), ctx.parse("x")])
        self.assertEqual(basis, [ctx.parse("x")])

    def test_all_zero_input_is_rejected(self):
        ctx = build_context("x,y")
        with self.assertRaises(DomainError):
            buchberger_basis([ctx.zero()])

    def test_pair_accounting(self):
        ctx = build_context("x,y", order="lex")
        buchberger_basis(build_system(ctx, "x^2 - y", "x*y - 1"))
        events = ctx.counter.events()
        self.assertGreater(events["pairs_generated"], 0)
        self.assertEqual(events["discarded_syzygy"] + events["discarded_rewritten"], 0)
        self.assertTrue(ctx.counter.pairs_accounted())

    def test_pair_limit(self):
        ctx = build_context("x,y", order="lex")
        with self.assertRaises(ComputationLimitExceeded):
            buchberger_basis(build_system(ctx, "x^2 - y", "x*y - 1"), max_pairs=1)

    def test_output_contains_input_and_generates_the_same_ideal(self):
        rng = random.Random(4)
        for kind in ("lex", "grlex", "grevlex"):
            ctx = build_context("x,y,z", order=kind, field="gf 32003")
            for _ in range(5):
                system = random_system(rng, ctx, generators=3, max_degree=2)
                basis = buchberger_basis(system)
                with self.subTest(order=kind, system=[str(p) for p in system]):
                    self.assertEqual(basis[: len(system)], system)
                    self.assertTrue(is_groebner(basis))
                    symbols = [ctx.symbols()[name] for name in ctx.variable_names]
                    reference = groebner(
                        [ctx.to_expression(p) for p in system], *symbols, order=kind, modulus=32003
                    )
                    for member in basis:
                        self.assertTrue(reference.contains(ctx.to_expression(member)))


def _times(ctx, text, poly):
    """``parse(text) * poly`` built from shifted, scaled copies."""
    result = ctx.zero()
    for coefficient, monomial in ctx.parse(text):
        result = result + poly.shifted(monomial).scaled(coefficient)
    return result


class ReduceBasisTests(SimpleTestCase):
    def setUp(self):
        self.ctx = build_context("x,y", order="lex")

    def test_reduced_basis_is_fixed(self):
        basis = build_system(self.ctx, "x - y^2", "y^3 - 1")
        self.assertEqual(reduce_basis(basis), basis)

    def test_makes_members_monic(self):
        self.assertEqual(reduce_basis([self.ctx.parse("2*x - 2*y^2")]), [self.ctx.parse("x - y^2")])

    def test_drops_redundant_members(self):
        basis = build_system(self.ctx, "x^2 - y", "x*y - 1", "x - y^2", "y^3 - 1")
        self.assertEqual(reduce_basis(basis), build_system(self.ctx, "x - y^2", "y^3 - 1"))

    def test_does_not_touch_algorithm_counters(self):
        reduce_basis(build_system(self.ctx, "x^2 - y", "x*y - 1", "x - y^2", "y^3 - 1"))
        self.assertEqual(self.ctx.counter.field_ops(), 0)
        self.assertEqual(self.ctx.counter.event("reduction_steps"), 0)


class IsGroebnerTests(SimpleTestCase):
    def test_variables_form_a_basis(self):
        ctx = build_context("x,y", order="lex")
        self.assertTrue(is_groebner(build_system(ctx, "x", "y")))

    def test_worked_example_input_is_not_a_basis(self):
        ctx = build_context("x,y", order="lex")
        self.assertFalse(is_groebner(build_system(ctx, "x^2 - y", "x*y - 1")))
