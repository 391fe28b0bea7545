"""Tests for complexity/pair_counts.py."""
from django.test import SimpleTestCase

from algebra.errors import DomainError
from complexity.pair_counts import closed_form_pairs, saturated_pairs, simulate_pair_counts


class ClosedFormTests(SimpleTestCase):
    def test_initial_pairs(self):
        for m in range(1, 10):
            self.assertEqual(closed_form_pairs(m, 0), m * (m - 1) // 2)

    def test_first_step(self):
        self.assertEqual(closed_form_pairs(3, 1), 5)

    def test_rejects_negative_steps(self):
        with self.assertRaises(DomainError):
            closed_form_pairs(3, -1)


class SimulatePairCountsTests(SimpleTestCase):
    def test_three_generators_six_monomials(self):
        trace = simulate_pair_counts(3, 6)
        self.assertEqual(trace.growth, (3, 5, 8, 12))
        self.assertEqual(trace.loops, 15)
        self.assertEqual(trace.basis_sizes, (3, 4, 5, 6))
        self.assertEqual(trace.pairs[-1], 0)
        self.assertEqual(len(trace.pairs), trace.loops + 1)

    def test_single_growth_step(self):
        trace = simulate_pair_counts(4, 5)
        self.assertEqual(trace.growth_steps, 1)
        self.assertEqual(trace.growth, (6, 9))

    def test_one_generator(self):
        trace = simulate_pair_counts(1, 3)
        self.assertEqual(trace.growth, (0, 0, 1))
        self.assertEqual(trace.loops, 3)

    def test_domain(self):
        with self.assertRaises(DomainError):
            simulate_pair_counts(3, 3)
        with self.assertRaises(DomainError):
            simulate_pair_counts(0, 3)

    def test_recurrences_match_the_closed_form(self):
        for N in range(2, 41):
            for m in range(1, N):
                trace = simulate_pair_counts(m, N)
                with self.subTest(m=m, N=N):
                    for i, value in enumerate(trace.growth):
                        self.assertEqual(value, closed_form_pairs(m, i))
                    self.assertEqual(trace.buchberger_pairs[: N - m + 1], trace.growth)
                    self.assertEqual(trace.loops, (N - m) + trace.growth[-1])

    def test_saturated_pair_count(self):
        for N in range(2, 41):
            for m in range(1, N):
                with self.subTest(m=m, N=N):
                    self.assertEqual(closed_form_pairs(m, N - m), saturated_pairs(m, N))
                    self.assertEqual(2 * closed_form_pairs(m, N - m), N * N - 3 * N + 2 * m)

    def test_notes_report_agreement(self):
        trace = simulate_pair_counts(3, 6)
        self.assertEqual(len(trace.notes), 2)
        self.assertTrue(all("matches the closed form" in note for note in trace.notes))

    def test_as_dict(self):
        data = simulate_pair_counts(3, 6).as_dict()
        self.assertEqual(data["loops"], 15)
        self.assertEqual(data["pairs"][:4], [3, 5, 8, 12])
