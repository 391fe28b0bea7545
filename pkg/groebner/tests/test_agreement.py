"""Cross-checks of the three basis algorithms against each other and sympy."""
from django.test import SimpleTestCase

from groebner.buchberger import buchberger_basis, is_groebner, reduce_basis
from groebner.f5b import ReductionStrategy, f5b_basis
from groebner.fast_reduce import ReductionMode
from groebner.test_utils import agreement_corpus, build_context, build_system, sympy_reduced_basis

PAIR_LIMIT = 20000

ALGORITHMS = {
    "buchberger": lambda system: buchberger_basis(system, max_pairs=PAIR_LIMIT),
    "f5b": lambda system: f5b_basis(system, max_pairs=PAIR_LIMIT),
    "fast": lambda system: f5b_basis(
        system, ReductionStrategy.FAST, mode=ReductionMode.SAFE, max_pairs=PAIR_LIMIT
    ),
}


class AgreementTests(SimpleTestCase):
    def test_corpus(self):
        for label, ctx, system in agreement_corpus():
            reference = sympy_reduced_basis(ctx, system)
            for name, algorithm in ALGORITHMS.items():
                run_ctx = ctx.with_counter()
                inputs = [run_ctx.convert(p) for p in system]
                with self.subTest(system=label, algorithm=name):
                    basis = algorithm(inputs)
                    self.assertTrue(is_groebner(basis))
                    self.assertEqual(reduce_basis(basis), reference)
                    self.assertTrue(run_ctx.counter.pairs_accounted())
                    if name == "buchberger":
                        self.assertEqual(run_ctx.counter.event("discarded_syzygy"), 0)

    def test_corpus_covers_three_variables_at_degree_three_over_both_fields(self):
        corpus = list(agreement_corpus())
        shapes = {(ctx.variable_count, label.split("/")[3], ctx.field.descriptor) for label, ctx, _ in corpus}

        self.assertGreaterEqual(len(corpus), 200)
        for field in ("q", "gf 32003"):
            for degree in ("d2", "d3"):
                with self.subTest(field=field, degree=degree):
                    self.assertIn((3, degree, field), shapes)

    def test_criteria_skip_the_zero_reductions_of_the_worked_example(self):
        zeros = {}
        for name, algorithm in ALGORITHMS.items():
            ctx = build_context("x,y", order="lex")
            algorithm(build_system(ctx, "x^2 - y", "x*y - 1"))
            events = ctx.counter.events()
            self.assertEqual(events["basis_contributing"], 2)
            zeros[name] = events["reduced_to_zero"]
        self.assertEqual(zeros, {"buchberger": 4, "f5b": 0, "fast": 0})
