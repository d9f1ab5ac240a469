"""
Braid Toolkit — Unit Test Suite
===============================
Covers:
  1. Configuration & Errors
  2. Braid Words (parsing, group operations, strand tracking)
  3. Dehornoy Ordering (handle reduction, sign, compare)
  4. Garside Elements (Δ_k, centralizers, Shepperd generators, h)
  5. Laurent Polynomials & Burau Matrices
  6. Normal Subgroups (deciders, samplers, Brunnian search)
  7. Density Witnesses & Verifiers
  8. Bench

Run:
    python -m pytest tests/test_system.py -v
    # or
    python tests/test_system.py
"""

from __future__ import annotations

import os
import random
import sys
import unittest
from unittest.mock import patch

# Add parent directory to path for imports
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, PROJECT_ROOT)

from dotenv import load_dotenv
load_dotenv(os.path.join(PROJECT_ROOT, ".env"))

from core.bench import run_bench
from core.burau import BurauMatrix, burau_det, burau_matrix, determinant, expected_det, in_burau_kernel
from core.config import DEFAULTS, Settings, load_settings
from core.density import (
    between,
    shrink_centralizer_element,
    smaller_positive,
    verify_dense,
    verify_least,
)
from core.errors import (
    BraidError,
    BudgetExceededError,
    ConfigError,
    PreconditionError,
    StrandCountError,
    UnsupportedOperationError,
    WordFormatError,
)
from core.garside import (
    CandidateFamily,
    CentralizerParams,
    FRZForm,
    RootKind,
    UVForm,
    centralizer_element,
    change_of_variables,
    delta,
    full_twist,
    homo_h,
    least_element_candidates,
    periodic_root,
    root_order,
    shepperd_generator,
    shepperd_word,
)
from core.laurent import ONE, T, T_INV, LaurentPoly
from core.ordering import (
    OrderingResult,
    SigmaSign,
    compare,
    handle_reduce,
    is_trivial,
    predecessor,
    reduce_with_stats,
    sigma_sign,
    sort_words,
    successor,
    words_equal,
)
from core.subgroups import (
    SubgroupId,
    decide,
    find_brunnian,
    linking_check_brunnian,
    membership_certificate,
    sample,
    sample_from_generators,
)
from core.words import (
    BraidWord,
    WordStyle,
    commutator,
    compose,
    concat,
    crossing_table,
    embed_shift,
    exponent_sum,
    format_word,
    free_reduce,
    generator,
    identity,
    inverse,
    linking_numbers,
    parse_word,
    permutation,
    power,
    product,
    random_word,
    remove_strand,
)

BORROMEAN = BraidWord(3, (1, -2, 1, -2, 1, -2))
MISSING_ENV = os.path.join(PROJECT_ROOT, ".env.does-not-exist")


def w(text: str, n: int = None) -> BraidWord:
    return parse_word(text, n)


# ─────────────────────────────────────────────────────────────────────────────
# Suite 1 — Configuration & Errors
# ─────────────────────────────────────────────────────────────────────────────

class TestConfiguration(unittest.TestCase):

    def test_defaults(self):
        self.assertEqual(DEFAULTS.step_budget, 1_000_000)
        self.assertEqual(DEFAULTS.density_budget, 10_000)
        self.assertEqual(DEFAULTS.candidate_length_cap, 4)
        self.assertEqual(DEFAULTS.seed, 1)

    def test_env_override(self):
        with patch.dict(os.environ, {"BRAID_STEP_BUDGET": "500", "BRAID_LOG_LEVEL": "debug"}):
            settings = load_settings(MISSING_ENV)
        self.assertEqual(settings.step_budget, 500)
        self.assertEqual(settings.log_level, "DEBUG")
        self.assertEqual(settings.density_budget, DEFAULTS.density_budget)

    def test_bad_env_values_raise_config_error(self):
        for key, value in [("BRAID_STEP_BUDGET", "lots"), ("BRAID_WORKERS", "0"), ("BRAID_LOG_LEVEL", "LOUD")]:
            with self.subTest(key=key):
                with patch.dict(os.environ, {key: value}):
                    with self.assertRaises(ConfigError):
                        load_settings(MISSING_ENV)

    def test_settings_validation(self):
        with self.assertRaises(ConfigError):
            Settings(density_budget=-1)

    def test_error_hierarchy(self):
        for cls in (WordFormatError, StrandCountError, BudgetExceededError,
                    UnsupportedOperationError, PreconditionError, ConfigError):
            with self.subTest(cls=cls.__name__):
                self.assertTrue(issubclass(cls, BraidError))
        self.assertTrue(issubclass(WordFormatError, ValueError))


# ─────────────────────────────────────────────────────────────────────────────
# Suite 2 — Braid Words
# ─────────────────────────────────────────────────────────────────────────────

class TestWords(unittest.TestCase):

    def test_parse_integer_and_letter_styles(self):
        self.assertEqual(w("1 -2 1"), BraidWord(3, (1, -2, 1)))
        self.assertEqual(w("s1 s2^-1 s1"), BraidWord(3, (1, -2, 1)))
        self.assertEqual(w("1", 5).n, 5)

    def test_empty_word_defaults_to_b1(self):
        self.assertEqual(w(""), BraidWord(1, ()))

    def test_parse_errors(self):
        for text, n in [("0", None), ("x", None), ("3", 3), ("s0", None), ("1 2.5", None)]:
            with self.subTest(text=text):
                with self.assertRaises(WordFormatError):
                    w(text, n)

    def test_word_validation(self):
        with self.assertRaises(WordFormatError):
            BraidWord(3, (3,))
        with self.assertRaises(StrandCountError):
            BraidWord(0)

    def test_format(self):
        word = BraidWord(3, (1, -2))
        self.assertEqual(format_word(word), "1 -2")
        self.assertEqual(format_word(word, WordStyle.LETTER), "s1 s2^-1")
        self.assertEqual(format_word(identity(4)), "")

    def test_group_operations(self):
        a = w("1 2", 3)
        self.assertEqual(inverse(a).letters, (-2, -1))
        self.assertEqual(power(generator(1, 3), -2).letters, (-1, -1))
        self.assertEqual(power(a, 0), identity(3))
        self.assertEqual(commutator(a, generator(1, 3)).letters, (1, 2, 1, -2, -1, -1))
        self.assertEqual((a * a).letters, (1, 2, 1, 2))
        self.assertEqual(free_reduce(w("1 2 -2 -1 3")).letters, (3,))
        self.assertEqual(exponent_sum(w("1 -2 -1 -1")), -2)
        with self.assertRaises(StrandCountError):
            concat(w("1", 2), w("1", 3))

    def test_embed_shift(self):
        self.assertEqual(embed_shift(w("1 -1"), 1, 3), BraidWord(3, (2, -2)))
        with self.assertRaises(StrandCountError):
            embed_shift(w("1"), 2, 3)

    def test_permutation_convention(self):
        self.assertEqual(permutation(w("1 2")).images, (3, 1, 2))
        self.assertTrue(permutation(w("1 1")).is_identity())

    def test_permutation_is_a_homomorphism(self):
        rng = random.Random(11)
        for _ in range(50):
            a, b = random_word(5, 7, rng), random_word(5, 7, rng)
            self.assertEqual(permutation(a * b), compose(permutation(a), permutation(b)))

    def test_remove_strand(self):
        self.assertEqual(remove_strand(w("1 1", 3), 3), BraidWord(2, (1, 1)))
        self.assertEqual(remove_strand(w("1 1", 3), 1), BraidWord(2, ()))
        self.assertEqual(remove_strand(w("2"), 1), BraidWord(2, (1,)))
        with self.assertRaises(StrandCountError):
            remove_strand(w("1"), 3)

    def test_crossing_table_and_linking(self):
        table = crossing_table(w("1 1"))
        self.assertEqual(table[1, 2], 2)
        self.assertEqual(linking_numbers(w("1 1")), ((0, 1), (1, 0)))
        with self.assertRaises(WordFormatError):
            linking_numbers(w("1"))

    def test_parse_format_round_trip(self):
        rng = random.Random(23)
        for _ in range(1000):
            word = random_word(rng.randint(2, 8), rng.randint(0, 64), rng)
            for style in WordStyle:
                self.assertEqual(parse_word(format_word(word, style), word.n), word)

    def test_exponent_sum_laws(self):
        rng = random.Random(27)
        for _ in range(100):
            n = rng.randint(2, 6)
            a, b = random_word(n, rng.randint(0, 20), rng), random_word(n, rng.randint(0, 20), rng)
            self.assertEqual(exponent_sum(a * b), exponent_sum(a) + exponent_sum(b))
            self.assertEqual(exponent_sum(inverse(a)), -exponent_sum(a))

    def test_crossing_pairs_sum_to_exponent_sum(self):
        rng = random.Random(29)
        for _ in range(200):
            word = random_word(rng.randint(2, 7), rng.randint(0, 30), rng)
            table = crossing_table(word)
            self.assertEqual(table.pair_total(), exponent_sum(word))
            for i in range(1, word.n + 1):
                self.assertEqual(table[i, i], 0)
                for j in range(i + 1, word.n + 1):
                    self.assertEqual(table[i, j], table[j, i])

    def test_remove_strand_of_product(self):
        rng = random.Random(31)
        for _ in range(200):
            n = rng.randint(2, 6)
            a, b = random_word(n, rng.randint(0, 12), rng), random_word(n, rng.randint(0, 12), rng)
            k = rng.randint(1, n)
            expected = remove_strand(a, k) * remove_strand(b, permutation(a)(k))
            self.assertEqual(remove_strand(a * b, k), expected)

    def test_free_reduce_keeps_invariants(self):
        rng = random.Random(37)
        for _ in range(200):
            word = random_word(rng.randint(2, 5), rng.randint(0, 30), rng)
            reduced = free_reduce(word)
            self.assertEqual(exponent_sum(reduced), exponent_sum(word))
            self.assertEqual(permutation(reduced), permutation(word))
            self.assertEqual(crossing_table(reduced), crossing_table(word))

    def test_random_word_is_seeded(self):
        self.assertEqual(random_word(4, 10, random.Random(3)), random_word(4, 10, random.Random(3)))


# ─────────────────────────────────────────────────────────────────────────────
# Suite 3 — Dehornoy Ordering
# ─────────────────────────────────────────────────────────────────────────────

class TestOrdering(unittest.TestCase):

    def test_sign_cases(self):
        cases = [
            ("2 -1", 3, "positive:2"),
            ("1 -2", 3, "negative:2"),
            ("", 3, "trivial"),
            ("1 2 1 -2 -1 -2", 3, "trivial"),
            ("2 1 -2", 3, "positive:2"),
            ("-1", 2, "negative:1"),
        ]
        for text, n, expected in cases:
            with self.subTest(word=text):
                self.assertEqual(str(sigma_sign(w(text, n))), expected)

    def test_single_handle_reduction(self):
        result = reduce_with_stats(w("2 1 -2"))
        self.assertEqual(result.word.letters, (-1, 2, 1))
        self.assertEqual(result.steps, 1)
        self.assertEqual(result.max_length, 3)

    def test_step_budget(self):
        with self.assertRaises(BudgetExceededError):
            reduce_with_stats(w("2 1 -2 1 2 1 -2"), step_budget=1)
        with self.assertRaises(ValueError):
            reduce_with_stats(w("1"), step_budget=0)

    def test_reduced_word_is_equivalent(self):
        rng = random.Random(5)
        for _ in range(40):
            word = random_word(4, 12, rng)
            self.assertTrue(is_trivial(inverse(handle_reduce(word)) * word))

    def test_compare(self):
        self.assertIs(compare(w("", 3), w("1", 3)), OrderingResult.LT)
        self.assertIs(compare(w("1", 3), w("1", 3)), OrderingResult.EQ)
        self.assertIs(compare(w("2", 3), w("1", 3)), OrderingResult.GT)
        self.assertTrue(words_equal(w("1 2 1"), w("2 1 2")))
        with self.assertRaises(StrandCountError):
            compare(w("1", 2), w("1", 3))

    def test_inverse_flips_sign(self):
        rng = random.Random(7)
        for _ in range(100):
            word = random_word(rng.randint(2, 5), rng.randint(0, 15), rng)
            self.assertEqual(sigma_sign(inverse(word)), sigma_sign(word).flipped())

    def test_sigma_sign_values(self):
        self.assertTrue(SigmaSign.positive(2).is_positive)
        self.assertEqual(SigmaSign.negative(3).flipped(), SigmaSign.positive(3))
        self.assertEqual(str(SigmaSign.trivial()), "trivial")

    def test_sort_words(self):
        words = [w("2", 3), w("", 3), w("1", 3), w("-1", 3)]
        ordered = [format_word(x) for x in sort_words(words)]
        self.assertEqual(ordered, ["-1", "", "1", "2"])

    def test_neighbours(self):
        rng = random.Random(13)
        for _ in range(30):
            g = random_word(4, 8, rng)
            self.assertIs(compare(g, successor(g)), OrderingResult.LT)
            self.assertIs(compare(predecessor(g), g), OrderingResult.LT)


# ─────────────────────────────────────────────────────────────────────────────
# Suite 4 — Garside Elements
# ─────────────────────────────────────────────────────────────────────────────

class TestGarside(unittest.TestCase):

    def test_delta_words(self):
        self.assertEqual(delta(3, 3).letters, (2, 1, 2))
        self.assertEqual(delta(4, 4).letters, (3, 2, 1, 3, 2, 3))
        self.assertEqual(delta(2, 5), BraidWord(5, (1,)))
        with self.assertRaises(StrandCountError):
            delta(4, 3)

    def test_full_twist_normal_form(self):
        self.assertTrue(words_equal(full_twist(3, 3), w("1 1 2 1 1 2")))

    def test_full_twist_is_central(self):
        for k in (3, 4):
            twist = full_twist(k, k)
            for i in range(1, k):
                with self.subTest(k=k, i=i):
                    s = generator(i, k)
                    self.assertTrue(words_equal(twist * s, s * twist))

    def test_change_of_variables_values(self):
        self.assertEqual(change_of_variables(CentralizerParams(3, FRZForm(1, 3))).form, UVForm(1, 1))
        self.assertEqual(change_of_variables(CentralizerParams(4, FRZForm(1, 3))).form, UVForm(1, 2))
        back = change_of_variables(CentralizerParams(4, UVForm(1, 2)))
        self.assertEqual(back.form, FRZForm(1, 3))

    def test_change_of_variables_preserves_element(self):
        for r in (3, 4, 5):
            for p in range(-2, 3):
                for q in range(-2, 3):
                    with self.subTest(r=r, p=p, q=q):
                        params = CentralizerParams(r, FRZForm(p, q))
                        self.assertTrue(words_equal(
                            centralizer_element(params, r),
                            centralizer_element(change_of_variables(params), r),
                        ))

    def test_centralizer_commutes_with_smaller_group(self):
        for r in (3, 4, 5):
            c = centralizer_element(CentralizerParams(r, FRZForm(1, -1)), r)
            for j in range(1, r - 1):
                with self.subTest(r=r, j=j):
                    s = generator(j, r)
                    self.assertTrue(words_equal(c * s, s * c))

    def test_centralizer_needs_r_at_least_3(self):
        with self.assertRaises(StrandCountError):
            CentralizerParams(2, FRZForm(1, 1))

    def test_least_element_candidates(self):
        self.assertEqual(least_element_candidates(3, 3, 2), [full_twist(3, 3, 1), full_twist(3, 3, 2)])
        sigma = least_element_candidates(4, 3, 3, CandidateFamily.SIGMA1)
        self.assertEqual([x.letters for x in sigma], [(1,), (1, 1), (1, 1, 1)])
        with self.assertRaises(StrandCountError):
            least_element_candidates(3, 2, 1)
        with self.assertRaises(ValueError):
            least_element_candidates(3, 3, 0)

    def test_homomorphism_h(self):
        self.assertEqual(homo_h(w("1 2 3 -3")), BraidWord(3, (1, 2, 1, -1)))
        with self.assertRaises(StrandCountError):
            homo_h(w("1 2"))
        # relators of B_4 land on trivial braids
        for rel in ("1 3 -1 -3", "2 3 2 -3 -2 -3"):
            with self.subTest(rel=rel):
                self.assertTrue(is_trivial(homo_h(w(rel, 4))))

    def test_shepperd_generators(self):
        self.assertEqual(shepperd_generator(3, 3), full_twist(3, 3))
        self.assertEqual(shepperd_generator(3, 1).letters, (-2, -2))
        self.assertEqual(shepperd_generator(4, 3), full_twist(3, 4))
        for n in (3, 4, 5):
            for i in range(1, n + 1):
                with self.subTest(n=n, i=i):
                    self.assertTrue(permutation(shepperd_generator(n, i)).is_identity())
        with self.assertRaises(WordFormatError):
            shepperd_generator(3, 0)
        with self.assertRaises(StrandCountError):
            shepperd_generator(2, 1)

    def test_shepperd_n_minus_1_sign(self):
        self.assertEqual(sigma_sign(shepperd_generator(4, 3)), SigmaSign.positive(2))

    def test_periodic_roots(self):
        for m in (3, 4):
            for kind in RootKind:
                with self.subTest(m=m, kind=kind):
                    root = periodic_root(m, kind, m)
                    self.assertTrue(words_equal(power(root, root_order(m, kind)), full_twist(m, m)))
        self.assertEqual(periodic_root(3, RootKind.EPSILON, 3).letters, (1, 1, 2))

    def test_periodic_roots_have_no_smaller_pure_power(self):
        for m in (3, 4, 5):
            for kind in RootKind:
                root = periodic_root(m, kind, m)
                for k in range(1, root_order(m, kind)):
                    with self.subTest(m=m, kind=kind, k=k):
                        self.assertFalse(permutation(power(root, k)).is_identity())


# ─────────────────────────────────────────────────────────────────────────────
# Suite 5 — Laurent Polynomials & Burau Matrices
# ─────────────────────────────────────────────────────────────────────────────

class TestLaurent(unittest.TestCase):

    def test_parse_and_format(self):
        for text, expected in [("1-t", "1-t"), ("t^-1", "t^-1"), ("-2t^3+t", "t-2t^3"), ("0", "0"), ("t-t", "0")]:
            with self.subTest(text=text):
                self.assertEqual(str(LaurentPoly.parse(text)), expected)
        with self.assertRaises(WordFormatError):
            LaurentPoly.parse("2x")

    def test_arithmetic(self):
        self.assertEqual(T * T_INV, 1)
        self.assertEqual(str((ONE - T) * 2), "2-2t")
        self.assertEqual(str((-T) ** -1), "-t^-1")
        self.assertEqual(str((ONE + T) ** 2), "1+2t+t^2")
        with self.assertRaises(ValueError):
            (ONE + T) ** -1


class TestBurau(unittest.TestCase):

    def test_generator_images(self):
        self.assertEqual(burau_matrix(w("1")).to_text(), "1-t t\n1 0")
        self.assertEqual(burau_matrix(w("2")).to_text(), "1 0 0\n0 1-t t\n0 1 0")

    def test_relators_map_to_identity(self):
        for n in range(3, 8):
            for i in range(1, n - 1):
                with self.subTest(n=n, i=i):
                    self.assertTrue(burau_matrix(BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1)))).is_identity())
            for i in range(1, n):
                for j in range(i + 2, n):
                    self.assertTrue(burau_matrix(BraidWord(n, (i, j, -i, -j))).is_identity())

    def test_text_round_trip(self):
        m = burau_matrix(w("2 -1 2"))
        self.assertEqual(BurauMatrix.from_text(m.to_text()), m)
        with self.assertRaises(ValueError):
            BurauMatrix.from_text("1 0\n0")

    def test_homomorphism(self):
        rng = random.Random(17)
        for _ in range(20):
            a, b = random_word(4, 5, rng), random_word(4, 5, rng)
            self.assertEqual(burau_matrix(a * b), burau_matrix(a) @ burau_matrix(b))

    def test_determinant_law(self):
        self.assertEqual(str(burau_det(w("1"))), "-t")
        self.assertEqual(str(burau_det(w("-1"))), "-t^-1")
        self.assertEqual(determinant(BurauMatrix.identity(4)), ONE)
        rng = random.Random(19)
        for _ in range(40):
            word = random_word(rng.randint(2, 5), rng.randint(0, 10), rng)
            self.assertEqual(burau_det(word), expected_det(word))

    def test_kernel(self):
        self.assertTrue(in_burau_kernel(w("1 -1")))
        self.assertFalse(in_burau_kernel(w("1 1")))


# ─────────────────────────────────────────────────────────────────────────────
# Suite 6 — Normal Subgroups
# ─────────────────────────────────────────────────────────────────────────────

class TestSubgroups(unittest.TestCase):

    def test_tokens(self):
        self.assertIs(SubgroupId.from_token("pure-commutator"), SubgroupId.PURE_COMMUTATOR)
        with self.assertRaises(UnsupportedOperationError):
            SubgroupId.from_token("bogus")

    def test_decide(self):
        cases = [
            (SubgroupId.COMMUTATOR, w("2 -1"), True),
            (SubgroupId.COMMUTATOR, w("1"), False),
            (SubgroupId.PURE, w("1 1"), True),
            (SubgroupId.PURE, w("1"), False),
            (SubgroupId.BRUNNIAN, BORROMEAN, True),
            (SubgroupId.BRUNNIAN, w("1 1", 3), False),
            (SubgroupId.BURAU_KERNEL, w("", 3), True),
            (SubgroupId.BURAU_KERNEL, w("1"), False),
            (SubgroupId.KER_H4, w("1 -3"), True),
            (SubgroupId.KER_H4, w("1", 4), False),
        ]
        for sid, word, expected in cases:
            with self.subTest(sid=sid.value, word=str(word)):
                self.assertEqual(decide(sid, word), expected)

    def test_decide_errors(self):
        with self.assertRaises(UnsupportedOperationError):
            decide(SubgroupId.SHEPPERD, w("1", 3))
        with self.assertRaises(StrandCountError):
            decide(SubgroupId.KER_H4, w("1", 3))

    def test_borromean_is_nontrivial(self):
        self.assertFalse(is_trivial(BORROMEAN))
        self.assertTrue(linking_check_brunnian(BORROMEAN))
        self.assertFalse(linking_check_brunnian(w("1 1")))
        with self.assertRaises(PreconditionError):
            linking_check_brunnian(w("1"))

    def test_samples_are_members(self):
        for seed in range(10):
            with self.subTest(seed=seed):
                c = sample(SubgroupId.COMMUTATOR, 4, seed=seed)
                self.assertEqual(exponent_sum(c), 0)
                self.assertTrue(decide(SubgroupId.PURE, sample(SubgroupId.PURE, 4, seed=seed)))
                pc = sample(SubgroupId.PURE_COMMUTATOR, 3, seed=seed)
                self.assertTrue(membership_certificate(SubgroupId.PURE_COMMUTATOR, pc))
                self.assertTrue(decide(SubgroupId.KER_H4, sample(SubgroupId.KER_H4, 4, seed=seed)))
                self.assertTrue(membership_certificate(SubgroupId.SHEPPERD, sample(SubgroupId.SHEPPERD, 4, seed=seed)))

    def test_samples_are_reproducible_and_reduced(self):
        for sid in (SubgroupId.COMMUTATOR, SubgroupId.PURE, SubgroupId.SHEPPERD):
            with self.subTest(sid=sid.value):
                s = sample(sid, 4, size=3, seed=42)
                self.assertEqual(s, sample(sid, 4, size=3, seed=42))
                self.assertEqual(free_reduce(s), s)

    def test_sample_errors(self):
        with self.assertRaises(UnsupportedOperationError):
            sample(SubgroupId.BRUNNIAN, 3)
        with self.assertRaises(StrandCountError):
            sample(SubgroupId.KER_H4, 3)

    def test_find_brunnian(self):
        found = find_brunnian(3, 6)
        self.assertIn(BORROMEAN, found)
        for b in found:
            with self.subTest(word=str(b)):
                self.assertTrue(decide(SubgroupId.COMMUTATOR, b))
                self.assertFalse(is_trivial(b))

    def test_normal_closure_sampler(self):
        for seed in range(5):
            with self.subTest(seed=seed):
                s = sample_from_generators([BORROMEAN], 3, 2, seed)
                self.assertTrue(decide(SubgroupId.BRUNNIAN, s))
        with self.assertRaises(PreconditionError):
            sample_from_generators([], 3)


# ─────────────────────────────────────────────────────────────────────────────
# Suite 7 — Density Witnesses & Verifiers
# ─────────────────────────────────────────────────────────────────────────────

class TestDensity(unittest.TestCase):

    def assertStrictlyBetween(self, low, mid, high):
        self.assertIs(compare(low, mid), OrderingResult.LT)
        self.assertIs(compare(mid, high), OrderingResult.LT)

    def test_smaller_positive_first_candidate(self):
        beta = w("2 -1")
        report = smaller_positive(SubgroupId.COMMUTATOR, beta)
        self.assertTrue(report.found)
        self.assertEqual(report.witness.letters, (2, 1, -2, -1))
        self.assertEqual(report.candidates_tried, 1)
        self.assertStrictlyBetween(identity(3), report.witness, beta)

    def test_smaller_positive_below_twisted_element(self):
        beta = product([full_twist(3, 3), power(generator(1, 3), -6)])
        self.assertEqual(exponent_sum(beta), 0)
        report = smaller_positive(SubgroupId.COMMUTATOR, beta)
        self.assertTrue(report.found)
        self.assertEqual(exponent_sum(report.witness), 0)
        self.assertStrictlyBetween(identity(3), report.witness, beta)

    def test_smaller_positive_preconditions(self):
        with self.assertRaises(PreconditionError):
            smaller_positive(SubgroupId.COMMUTATOR, w("1", 3))
        with self.assertRaises(PreconditionError):
            smaller_positive(SubgroupId.COMMUTATOR, w("1 -2"))

    def test_least_candidates_are_not_commutators(self):
        for candidate in least_element_candidates(3, 3, 3):
            with self.subTest(candidate=str(candidate)):
                self.assertFalse(decide(SubgroupId.COMMUTATOR, candidate))
                with self.assertRaises(PreconditionError):
                    smaller_positive(SubgroupId.COMMUTATOR, candidate)

    def test_between(self):
        g = w("2 -1")
        report = between(SubgroupId.COMMUTATOR, identity(3), g)
        self.assertTrue(report.found)
        self.assertStrictlyBetween(identity(3), report.witness, g)

        f = inverse(g)
        report = between(SubgroupId.COMMUTATOR, f, g)
        self.assertTrue(report.found)
        self.assertStrictlyBetween(f, report.witness, g)
        self.assertTrue(decide(SubgroupId.COMMUTATOR, report.witness))

    def test_between_is_left_translate(self):
        f, g = w("1 -2"), w("2 -1")
        outer = between(SubgroupId.COMMUTATOR, f, g)
        inner = smaller_positive(SubgroupId.COMMUTATOR, free_reduce(inverse(f) * g))
        self.assertEqual(outer.found, inner.found)
        if outer.found:
            self.assertEqual(outer.witness, free_reduce(f * inner.witness))

    def test_between_preconditions(self):
        g = w("2 -1")
        with self.assertRaises(PreconditionError):
            between(SubgroupId.COMMUTATOR, g, g)
        with self.assertRaises(PreconditionError):
            between(SubgroupId.COMMUTATOR, identity(3), w("2", 3))

    def test_shrink_centralizer_element(self):
        for v in (-1, 1):
            with self.subTest(v=v):
                report = shrink_centralizer_element(3, 1, v, 3)
                self.assertTrue(report.found)
                beta = centralizer_element(CentralizerParams(3, UVForm(1, v)), 3)
                self.assertStrictlyBetween(identity(3), report.witness, beta)
        with self.assertRaises(PreconditionError):
            shrink_centralizer_element(3, 1, 0, 3)

    def test_non_normal_subgroup_is_refused(self):
        # H_4 is not normal: β·σ_1·β^-1·σ_1^-1 is pure but need not lie in H_4
        beta = shepperd_word(4, [4, -1])
        self.assertFalse(SubgroupId.SHEPPERD.is_normal)
        with self.assertRaises(UnsupportedOperationError):
            smaller_positive(SubgroupId.SHEPPERD, beta)
        with self.assertRaises(UnsupportedOperationError):
            between(SubgroupId.SHEPPERD, identity(4), beta)
        for sid in SubgroupId:
            if sid is not SubgroupId.SHEPPERD:
                self.assertTrue(sid.is_normal, sid.value)

    def test_report_lines(self):
        report = smaller_positive(SubgroupId.COMMUTATOR, w("2 -1"), budget=50)
        self.assertEqual(report.to_lines(), ["found=true", "witness=2 1 -2 -1", "candidates_tried=1", "budget=50"])

    def test_verify_dense(self):
        empty = verify_dense(SubgroupId.COMMUTATOR, 3, 0)
        self.assertEqual(empty.trials, 0)
        self.assertEqual(empty.success_rate, 1.0)
        summary = verify_dense(SubgroupId.COMMUTATOR, 3, 5, seed=2)
        self.assertTrue(summary.passed)
        self.assertEqual(summary.successes, 5)
        self.assertIn("success_rate=1.0000", summary.to_lines())

    def test_verify_dense_errors(self):
        with self.assertRaises(UnsupportedOperationError):
            verify_dense(SubgroupId.SHEPPERD, 4, 1)
        with self.assertRaises(UnsupportedOperationError):
            verify_dense(SubgroupId.BRUNNIAN, 3, 1)
        with self.assertRaises(StrandCountError):
            verify_dense(SubgroupId.COMMUTATOR, 2, 1)

    def test_verify_least(self):
        summary = verify_least(SubgroupId.PURE, full_twist(2, 3), 3, 20, seed=4)
        self.assertEqual(summary.violations, 0)
        self.assertTrue(verify_least(SubgroupId.PURE, full_twist(2, 3), 3, 0).passed)
        shepperd = verify_least(SubgroupId.SHEPPERD, full_twist(2, 3), 3, 20, seed=4)
        self.assertEqual(shepperd.violations, 0)
        with self.assertRaises(PreconditionError):
            verify_least(SubgroupId.PURE, generator(1, 3), 3, 5)


# ─────────────────────────────────────────────────────────────────────────────
# Suite 8 — Bench
# ─────────────────────────────────────────────────────────────────────────────

class TestBench(unittest.TestCase):

    def test_metrics_are_reproducible(self):
        a = run_bench(4, 30, 10, seed=1)
        b = run_bench(4, 30, 10, seed=1)
        self.assertEqual(a.metric_lines(), b.metric_lines())
        self.assertTrue(a.to_lines()[-1].startswith("words_per_sec="))

    def test_rejects_empty_run(self):
        with self.assertRaises(ValueError):
            run_bench(4, 10, 0)


# ─────────────────────────────────────────────────────────────────────────────
# Runner
# ─────────────────────────────────────────────────────────────────────────────

def main():
    loader = unittest.TestLoader()
    suite  = unittest.TestSuite()
    for cls in [
        TestConfiguration, TestWords, TestOrdering, TestGarside,
        TestLaurent, TestBurau, TestSubgroups, TestDensity, TestBench,
    ]:
        suite.addTests(loader.loadTestsFromTestCase(cls))
    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)
    sys.exit(0 if result.wasSuccessful() else 1)


if __name__ == "__main__":
    main()
