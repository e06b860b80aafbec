import random
from fractions import Fraction as F
from itertools import combinations
import pytest
from datastructures import Marginal, BudgetExceeded, InvalidInputError
from exactarith import RatMatrix, solve
from symmetry import trivial_orbits
from couplings import validate, permutation_coupling, coupling_from_orbit_masses
from extremality import test_extreme
from enumeration import (
   enumerate_extreme, build_constraint_system, support_window, required_budget, verify_birkhoff,
   check_support_bounds, check_support_uniqueness
)
from conftest import BATTERY, make_orbits, make_instance, SWAP2

P = Marginal([F(1, 3), F(2, 3)])
U2 = Marginal.uniform(2)
U3 = Marginal.uniform(3)


def basic_vertices(mu1:Marginal, mu2:Marginal, orbits)->set:
   """
   Todas as soluções básicas positivas, resolvendo cada subconjunto de órbitas sem poda nenhuma
   """
   system = build_constraint_system(mu1, mu2, orbits)
   found = set()
   for size in range(1, orbits.m12 + 1):
      for subset in combinations(range(orbits.m12), size):
         solution = solve(system.restricted(subset), system.rhs)
         if not solution.is_unique or not all(x > 0 for x in solution.particular):
            continue
         masses = [F(0)] * orbits.m12
         for j, value in zip(subset, solution.particular):
            masses[j] = value
         c = coupling_from_orbit_masses(masses, orbits, mu1, mu2)
         if test_extreme(c, orbits).extreme:
            found.add(c.matrix)
   return found

def relabel(inst, a:list[int], b:list[int]):
   """
   Mesma instância com os pontos renomeados, x -> a[x] em X1 e y -> b[y] em X2, e geradores conjugados
   """
   mu1 = [F(0)] * len(a)
   mu2 = [F(0)] * len(b)
   for x, m in enumerate(inst.mu1):
      mu1[a[x]] = m
   for y, m in enumerate(inst.mu2):
      mu2[b[y]] = m
   generators = []
   for g1, g2 in inst.generators:
      h1, h2 = [0] * len(a), [0] * len(b)
      for x in range(len(a)):
         h1[a[x]] = a[g1[x]]
      for y in range(len(b)):
         h2[b[y]] = b[g2[y]]
      generators.append((h1, h2))
   return make_instance(inst.name + "_relabeled", mu1, mu2, generators)


class TestEnumerateExtreme:

   def test_uniform3_gives_permutations(self):
      vs = enumerate_extreme(U3, U3, trivial_orbits(3, 3))
      assert len(vs) == 6
      expected = {permutation_coupling(sigma).matrix for sigma in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))}
      assert {v.matrix for v in vs} == expected

   def test_third_two_thirds(self, trivial2):
      vs = enumerate_extreme(P, P, trivial2)
      assert [v.to_rows() for v in vs] == [
         [[F(1, 3), 0], [0, F(2, 3)]],
         [[0, F(1, 3)], [F(1, 3), F(1, 3)]]
      ]
      assert vs.supports == (frozenset({0, 3}), frozenset({1, 2, 3}))
      assert vs.stats == [2, 3]
      assert [vs.support_bitmask(k) for k in range(2)] == [9, 14]

   def test_swap_group(self, swap2):
      vs = enumerate_extreme(U2, U2, swap2)
      assert len(vs) == 2
      assert vs.vertices[0].to_rows() == [[F(1, 2), 0], [0, F(1, 2)]]
      assert vs.vertices[1].to_rows() == [[0, F(1, 2)], [F(1, 2), 0]]
      assert vs.stats == [1, 1]

   def test_every_vertex_validates_and_is_extreme(self, battery_vertices):
      for inst in BATTERY:
         vs = battery_vertices[inst.name]
         assert len(vs) >= 1, inst.name
         for vertex in vs:
            validate(vertex.matrix, inst.mu1, inst.mu2, inst.orbits)
            assert test_extreme(vertex, inst.orbits).extreme, inst.name

   def test_matches_unpruned_basic_solutions(self, battery_vertices):
      for inst in BATTERY:
         if inst.orbits.m12 > 9:
            continue
         expected = basic_vertices(inst.mu1, inst.mu2, inst.orbits)
         assert {v.matrix for v in battery_vertices[inst.name]} == expected, inst.name

   def test_window_does_not_change_result(self, battery_vertices):
      for inst in BATTERY:
         if inst.orbits.m12 > 12:
            continue
         unwindowed = enumerate_extreme(inst.mu1, inst.mu2, inst.orbits, use_support_window=False)
         assert unwindowed.vertices == battery_vertices[inst.name].vertices, inst.name

   @pytest.mark.parametrize("name", ["rect_3x4_trivial", "weighted4_double_swap", "cycle_on_x1_only"])
   def test_relabeling_points_gives_same_vertices(self, name, battery_vertices):
      inst = next(i for i in BATTERY if i.name == name)
      rng = random.Random(name)
      a = rng.sample(range(inst.orbits.n1), inst.orbits.n1)
      b = rng.sample(range(inst.orbits.n2), inst.orbits.n2)
      relabeled = relabel(inst, a, b)
      assert relabeled.trivial == inst.trivial
      assert relabeled.orbits.m12 == inst.orbits.m12
      vs = enumerate_extreme(relabeled.mu1, relabeled.mu2, relabeled.orbits)
      mapped_back = {
         RatMatrix.from_rows([[v.mass(a[x], b[y]) for y in range(inst.orbits.n2)] for x in range(inst.orbits.n1)])
         for v in vs
      }
      assert mapped_back == {v.matrix for v in battery_vertices[inst.name]}
      assert len(vs) == len(battery_vertices[inst.name])

   def test_workers_give_same_result(self):
      inst = next(i for i in BATTERY if i.name == "rect_3x4_trivial")
      serial = enumerate_extreme(inst.mu1, inst.mu2, inst.orbits)
      parallel = enumerate_extreme(inst.mu1, inst.mu2, inst.orbits, workers=2)
      assert parallel.vertices == serial.vertices
      assert parallel.supports == serial.supports
      assert (parallel.subsets_examined, parallel.subsets_solved) == (serial.subsets_examined, serial.subsets_solved)

   def test_budget_exceeded_reports_required(self):
      with pytest.raises(BudgetExceeded) as info:
         enumerate_extreme(U3, U3, trivial_orbits(3, 3), budget=100)
      assert info.value.required == 420
      assert info.value.budget == 100

   def test_thirty_orbits_exceed_default_budget(self):
      with pytest.raises(BudgetExceeded):
         enumerate_extreme(Marginal.uniform(5), Marginal.uniform(6), trivial_orbits(5, 6))

   def test_zero_mass_rejected(self):
      with pytest.raises(InvalidInputError):
         enumerate_extreme(Marginal([1, 0]), U2, trivial_orbits(2, 2))

   def test_non_invariant_marginal_rejected(self):
      skewed = Marginal([F(1, 4), F(3, 4)])
      with pytest.raises(InvalidInputError):
         enumerate_extreme(skewed, U2, make_orbits(2, 2, [SWAP2]))

   def test_window(self, trivial2, swap2):
      assert support_window(trivial2) == (2, 4)
      assert support_window(swap2) == (1, 2)
      assert support_window(trivial2, use_support_window=False) == (1, 4)
      assert support_window(trivial_orbits(4, 4)) == (4, 8)
      assert required_budget(16, (4, 8)) == 38506


class TestBirkhoff:

   def test_single_point(self):
      report = verify_birkhoff(1)
      assert report.count == 1
      assert report.passed

   def test_three(self):
      report = verify_birkhoff(3)
      assert (report.count, report.expected_count) == (6, 6)
      assert report.all_permutation_type
      assert report.passed

   def test_four(self):
      report = verify_birkhoff(4)
      assert report.count == 24
      assert report.missing == ()
      assert report.passed
      assert report.to_dict()["passed"] is True

   def test_invalid_m(self):
      with pytest.raises(InvalidInputError):
         verify_birkhoff(0)

   def test_budget(self):
      with pytest.raises(BudgetExceeded):
         verify_birkhoff(4, budget=1000)


class TestVertexChecks:

   def test_birkhoff3_bounds(self):
      orbits = trivial_orbits(3, 3)
      report = check_support_bounds(enumerate_extreme(U3, U3, orbits), orbits)
      assert (report.lower, report.upper) == (3, 6)
      assert report.orbit_counts == (3,) * 6
      assert report.count_bound == 420
      assert report.passed

   def test_two_by_two_bounds(self, trivial2):
      report = check_support_bounds(enumerate_extreme(P, P, trivial2), trivial2)
      assert (report.lower, report.upper, report.count_bound, report.vertex_count) == (2, 4, 11, 2)
      assert report.passed

   def test_swap_bounds(self, swap2):
      report = check_support_bounds(enumerate_extreme(U2, U2, swap2), swap2)
      assert (report.lower, report.upper, report.count_bound) == (1, 2, 3)
      assert report.orbit_counts == (1, 1)
      assert report.passed

   def test_battery_bounds_and_uniqueness(self, battery_vertices):
      for inst in BATTERY:
         vs = battery_vertices[inst.name]
         assert check_support_bounds(vs, inst.orbits).passed, inst.name
         assert check_support_uniqueness(vs).passed, inst.name

   def test_uniqueness_examples(self, trivial2):
      report = check_support_uniqueness(enumerate_extreme(U3, U3, trivial_orbits(3, 3)))
      assert report.vertex_count == 6
      assert report.containments == ()
      assert check_support_uniqueness(enumerate_extreme(P, P, trivial2)).passed
      single = enumerate_extreme(Marginal([1]), Marginal([1]), trivial_orbits(1, 1))
      assert len(single) == 1
      assert check_support_uniqueness(single).passed
