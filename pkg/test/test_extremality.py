import random
from fractions import Fraction as F
from itertools import combinations
import pytest
from datastructures import Marginal, ZeroCertificate, InvalidInputError
from exactarith import RatMatrix
from symmetry import trivial_orbits
from couplings import (
   validate, graphic_coupling, extend_with_independent, product_coupling, permutation_coupling, mix
)
from extremality import (
   build_regression_system, test_extreme, perturbation_pair, regression_residuals, verify_certificate,
   constraint_rank_oracle, transfer_certificate, rectangle_certificate, decompose
)
from conftest import BATTERY, make_orbits, extended_generators

P = Marginal([F(1, 3), F(2, 3)])
U2 = Marginal.uniform(2)
BASE = [[0, F(1, 3)], [F(1, 3), F(1, 3)]]
QUARTERS = [[F(1, 4), F(1, 4)], [F(1, 4), F(1, 4)]]


def sample_pairs(vertices, rng:random.Random, cap:int = 60)->list:
   pairs = list(combinations(range(len(vertices)), 2))
   if len(pairs) > cap:
      pairs = rng.sample(pairs, cap)
   return pairs


class TestRegressionSystem:

   def test_base_coupling(self, trivial2):
      system = build_regression_system(validate(BASE, P, P, trivial2), trivial2)
      assert system.variables == (1, 2, 3)
      assert system.matrix.shape == (4, 3)
      assert system.matrix.row(0) == (F(1, 3), 0, 0)

   def test_permutation(self):
      orbits = trivial_orbits(3, 3)
      system = build_regression_system(permutation_coupling((1, 2, 0)), orbits)
      assert system.matrix.shape == (6, 3)
      for j in range(3):
         column = system.matrix.col(j)
         assert sorted(column, reverse=True)[:2] == [F(1, 3), F(1, 3)]
         assert sum(1 for x in column if x) == 2

   def test_swap_invariant_quarters(self, swap2):
      system = build_regression_system(validate(QUARTERS, U2, U2, swap2), swap2)
      assert system.matrix == RatMatrix(4, 2, [F(1, 4)] * 8)


class TestExtremalityVerdict:

   def test_base_is_extreme(self, trivial2):
      verdict = test_extreme(validate(BASE, P, P, trivial2), trivial2)
      assert verdict.extreme
      assert verdict.null_dim == 0
      assert verdict.certificate is None
      assert verdict.support_orbit_count == 3

   def test_product_has_checkerboard_certificate(self, trivial2):
      c = validate(QUARTERS, U2, U2, trivial2)
      verdict = test_extreme(c, trivial2)
      assert not verdict.extreme
      assert verdict.null_dim == 1
      certificate = verdict.certificate
      assert certificate.zeta == (1, -1, -1, 1)
      assert certificate.epsilon == F(1, 2)
      assert certificate.omega_plus.to_rows() == [[F(3, 8), F(1, 8)], [F(1, 8), F(3, 8)]]
      assert certificate.omega_minus.to_rows() == [[F(1, 8), F(3, 8)], [F(3, 8), F(1, 8)]]
      assert verify_certificate(c, verdict, trivial2) == []

   def test_permutations_are_extreme(self):
      orbits = trivial_orbits(4, 4)
      for sigma in ((0, 1, 2, 3), (3, 2, 1, 0), (1, 3, 0, 2)):
         assert test_extreme(permutation_coupling(sigma), orbits).extreme

   def test_swap_invariant_quarters_not_extreme(self, swap2):
      c = validate(QUARTERS, U2, U2, swap2)
      verdict = test_extreme(c, swap2)
      assert not verdict.extreme
      assert verdict.certificate.zeta == (1, -1)
      assert verify_certificate(c, verdict, swap2) == []

   def test_identity_under_swap_is_extreme(self, swap2):
      c = validate([[F(1, 2), 0], [0, F(1, 2)]], U2, U2, swap2)
      verdict = test_extreme(c, swap2)
      assert verdict.extreme
      assert verdict.support_orbit_count == 1

   def test_verdict_is_deterministic(self, trivial2):
      c = validate(QUARTERS, U2, U2, trivial2)
      assert test_extreme(c, trivial2) == test_extreme(c, trivial2)


class TestPerturbation:

   def test_scaled_zeta_gives_same_pair(self, trivial2):
      c = validate(QUARTERS, U2, U2, trivial2)
      zeta = [1, -1, -1, 1]
      assert perturbation_pair(c, zeta, trivial2) == perturbation_pair(c, [7 * x for x in zeta], trivial2)

   def test_zero_zeta(self, trivial2):
      c = validate(QUARTERS, U2, U2, trivial2)
      with pytest.raises(ZeroCertificate):
         perturbation_pair(c, [0, 0, 0, 0], trivial2)

   def test_zeta_breaking_regression(self, trivial2):
      c = validate(QUARTERS, U2, U2, trivial2)
      with pytest.raises(InvalidInputError):
         perturbation_pair(c, [1, 0, 0, 0], trivial2)

   def test_midpoint_and_marginals(self, trivial2):
      c = validate(QUARTERS, U2, U2, trivial2)
      plus, minus = perturbation_pair(c, [1, -1, -1, 1], trivial2)
      assert (plus.matrix + minus.matrix).scale(F(1, 2)) == c.matrix
      validate(plus.matrix, U2, U2, trivial2)
      validate(minus.matrix, U2, U2, trivial2)

   def test_residuals(self, trivial2):
      c = validate(QUARTERS, U2, U2, trivial2)
      assert regression_residuals(c, [1, -1, -1, 1], trivial2) == ([0, 0], [0, 0])
      assert regression_residuals(c, [1, 1, 0, 0], trivial2) == ([F(1, 2), 0], [F(1, 4), F(1, 4)])


class TestBattery:

   def test_vertices_agree_with_oracle(self, battery_vertices):
      for inst in BATTERY:
         for vertex in battery_vertices[inst.name]:
            assert test_extreme(vertex, inst.orbits).extreme, inst.name
            assert constraint_rank_oracle(vertex, inst.orbits), inst.name

   def test_midpoints_are_not_extreme(self, battery_vertices):
      rng = random.Random(2024)
      checked = 0
      for inst in BATTERY:
         vertices = battery_vertices[inst.name].vertices
         for i, j in sample_pairs(vertices, rng):
            weight = F(rng.randint(1, 9), 10)
            c = mix(vertices[i], vertices[j], weight)
            validate(c.matrix, inst.mu1, inst.mu2, inst.orbits)
            verdict = test_extreme(c, inst.orbits)
            assert not verdict.extreme, inst.name
            assert not constraint_rank_oracle(c, inst.orbits), inst.name
            assert verify_certificate(c, verdict, inst.orbits) == [], inst.name
            checked += 1
      assert checked >= 100

   def test_extension_preserves_extremality(self, battery_vertices):
      for inst in BATTERY:
         orbits = inst.orbits
         extended_orbits = make_orbits(2 * orbits.n1, 2 * orbits.n2, extended_generators(inst.generators, orbits.n1, orbits.n2, 2))
         for vertex in battery_vertices[inst.name].vertices[:3]:
            extended = extend_with_independent(vertex, U2)
            validate(extended.matrix, extended.mu1, extended.mu2, extended_orbits)
            assert test_extreme(extended, extended_orbits).extreme, inst.name

   def test_extension_keeps_non_extreme(self):
      product = product_coupling(P, U2)
      extended = extend_with_independent(product, Marginal([F(1, 3), F(2, 3)]))
      assert not test_extreme(extended, trivial_orbits(4, 4)).extreme

   def test_graphic_implies_extreme(self):
      rng = random.Random(7)
      mu = Marginal([F(1, 10), F(2, 10), F(3, 10), F(4, 10)])
      for _ in range(30):
         n2 = rng.randint(1, 4)
         mapping = [rng.randrange(n2) for _ in range(len(mu))]
         c = graphic_coupling(mapping, mu, n2)
         assert test_extreme(c, trivial_orbits(len(mu), n2)).extreme


class TestCertificateConstructions:

   def test_transfer_to_larger_support(self, trivial2):
      omega = validate(QUARTERS, U2, U2, trivial2)
      omega2 = product_coupling(P, Marginal([F(1, 5), F(4, 5)]))
      transferred = transfer_certificate(omega, omega2, [1, -1, -1, 1], trivial2)
      assert regression_residuals(omega2, transferred, trivial2) == ([0, 0], [0, 0])
      assert transferred[0] == F(1, 4) / (F(1, 3) * F(1, 5))

   def test_transfer_needs_support_containment(self, trivial2):
      omega = validate(QUARTERS, U2, U2, trivial2)
      with pytest.raises(InvalidInputError):
         transfer_certificate(omega, permutation_coupling((0, 1)), [1, -1, -1, 1], trivial2)

   def test_rectangle_on_product(self, trivial2):
      rectangle = rectangle_certificate(validate(QUARTERS, U2, U2, trivial2))
      assert (rectangle.rows, rectangle.cols, rectangle.step) == ((0, 1), (0, 1), F(1, 4))
      assert rectangle.omega_plus.to_rows() == [[F(1, 2), 0], [0, F(1, 2)]]
      assert rectangle.omega_minus.to_rows() == [[0, F(1, 2)], [F(1, 2), 0]]

   def test_no_rectangle_on_extreme(self, trivial2):
      assert rectangle_certificate(validate(BASE, P, P, trivial2)) is None

   def test_rectangle_gives_valid_pair(self):
      c = product_coupling(Marginal([F(1, 6), F(1, 3), F(1, 2)]), Marginal([F(1, 4), F(3, 4)]))
      rectangle = rectangle_certificate(c)
      orbits = trivial_orbits(3, 2)
      validate(rectangle.omega_plus.matrix, c.mu1, c.mu2, orbits)
      validate(rectangle.omega_minus.matrix, c.mu1, c.mu2, orbits)
      assert (rectangle.omega_plus.matrix + rectangle.omega_minus.matrix).scale(F(1, 2)) == c.matrix


class TestDecompose:

   def check_decomposition(self, c, orbits):
      pieces = decompose(c, orbits)
      assert sum(weight for weight, _ in pieces) == 1
      assert all(weight > 0 for weight, _ in pieces)
      total = RatMatrix.zeros(c.n1, c.n2)
      for weight, vertex in pieces:
         assert test_extreme(vertex, orbits).extreme
         total = total + vertex.matrix.scale(weight)
      assert total == c.matrix
      assert len({vertex.matrix for _, vertex in pieces}) == len(pieces)
      return pieces

   def test_extreme_decomposes_to_itself(self, trivial2):
      c = validate(BASE, P, P, trivial2)
      assert decompose(c, trivial2) == [(1, c)]

   def test_product(self, trivial2):
      pieces = self.check_decomposition(validate(QUARTERS, U2, U2, trivial2), trivial2)
      assert len(pieces) == 2

   def test_uniform3_product(self):
      uniform = Marginal.uniform(3)
      pieces = self.check_decomposition(product_coupling(uniform, uniform), trivial_orbits(3, 3))
      assert len(pieces) <= 9

   def test_invariant_coupling(self, cycle3):
      uniform = Marginal.uniform(3)
      self.check_decomposition(product_coupling(uniform, uniform), cycle3)

   def test_battery_midpoints(self, battery_vertices):
      for inst in BATTERY:
         vertices = battery_vertices[inst.name].vertices
         if len(vertices) >= 2:
            self.check_decomposition(mix(vertices[0], vertices[-1]), inst.orbits)
