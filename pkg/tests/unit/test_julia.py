import numpy as np
from unittest import TestCase
from unittest.mock import Mock, patch
from bidisk.julia import *
from bidisk.base import NoLimit, Ambiguous, Unclassifiable, chunks
from bidisk.boundary import DWClass
from bidisk.core import BidiskPoint, BoundaryPoint
from bidisk.maps import Builtin, Blend, SelfMap2

class JuliaReportTests(TestCase):

    def test_can_create_report(self):
        point = BidiskPoint(0, 0)
        report = JuliaReport(100, -0.5, 0.9, point)
        self.assertEqual(report.n_samples, 100)
        self.assertEqual(report.max_violation, -0.5)
        self.assertEqual(report.tightness, 0.9)
        self.assertIs(report.worst_point, point)
        self.assertEqual(
         repr(report), "<JuliaReport (100 samples, max violation -0.5)>"
        )


    def test_noise_counts_as_satisfied(self):
        self.assertTrue(JuliaReport(1, -1, 0, None).satisfied)
        self.assertTrue(JuliaReport(1, 1e-10, 0, None).satisfied)
        self.assertFalse(JuliaReport(1, 1e-6, 0, None).satisfied)



class WolffSetReportTests(TestCase):

    def test_can_create_report(self):
        phi, psi, tau = Mock(), Mock(), BoundaryPoint(1, 1)
        report = WolffSetReport("I_II_face", phi, psi, tau, {"left": -1}, 10)
        self.assertEqual(report.case, "I_II_face")
        self.assertIs(report.phi_class, phi)
        self.assertIs(report.psi_class, psi)
        self.assertIs(report.witness_tau, tau)
        self.assertEqual(report.facial_violations, {"left": -1})
        self.assertEqual(report.corner_K, 10)
        self.assertIsNone(report.corner_violation)
        self.assertIsNone(report.corner_in_wolff_set)
        self.assertEqual(repr(report), "<WolffSetReport I_II_face at (1, 1)>")



class JuliaViolationTests(TestCase):

    def test_can_check_inequality(self):
        m, tau = Builtin("avg_shift_phi"), BoundaryPoint(1, 1)
        report = julia_max_violation(m, tau, 2, 1, n=1000)
        self.assertEqual(report.n_samples, 1000)
        self.assertTrue(report.satisfied)
        self.assertLessEqual(report.tightness, 1 + 1e-9)
        self.assertIsInstance(report.worst_point, BidiskPoint)


    def test_can_find_violation(self):
        m, tau = Builtin("avg_shift_phi"), BoundaryPoint(1, 1)
        report = julia_max_violation(m, tau, 2, 0.5, n=1000)
        self.assertGreater(report.max_violation, 0)
        self.assertFalse(report.satisfied)


    def test_violation_decreases_with_alpha(self):
        m, tau = Builtin("herve_ex1_phi"), BoundaryPoint(1, 1)
        low = julia_max_violation(m, tau, 1, 0.4, n=1000)
        high = julia_max_violation(m, tau, 1, 0.5, n=1000)
        self.assertGreaterEqual(low.max_violation, high.max_violation)


    def test_result_does_not_depend_on_chunks(self):
        m, tau = Builtin("herve_ex1_phi"), BoundaryPoint(1, 1)
        whole = julia_max_violation(m, tau, 1, 0.45, n=500)
        with patch("bidisk.julia.chunks") as mock_chunks:
            mock_chunks.side_effect = lambda n: chunks(n, 7)
            pieces = julia_max_violation(m, tau, 1, 0.45, n=500)
        self.assertAlmostEqual(
         whole.max_violation, pieces.max_violation, delta=1e-15
        )
        self.assertEqual(whole.worst_point, pieces.worst_point)
        self.assertAlmostEqual(whole.tightness, pieces.tightness, delta=1e-15)


    @patch("bidisk.julia.sample_bidisk")
    def test_uses_seed(self, mock_sample):
        mock_sample.return_value = (np.array([0.5j]), np.array([0]))
        m, tau = Builtin("avg_shift_phi"), BoundaryPoint(1, 1)
        julia_max_violation(m, tau, 2, 1, n=1, seed=11)
        mock_sample.assert_called_with(1, 11)


    def test_need_fixed_point(self):
        with self.assertRaises(ValueError):
            julia_max_violation(Blend(1, 0.5, 0.5), BoundaryPoint(1, -1), 1, 1)



class JuliaTightnessTests(TestCase):

    def test_can_get_tightness(self):
        m, tau = Builtin("avg_shift_phi"), BoundaryPoint(1, 1)
        self.assertAlmostEqual(julia_tightness(m, tau, 2), 1, delta=1e-4)
        self.assertAlmostEqual(julia_tightness(m, tau, 0.5), 0.625, delta=1e-4)


    @patch("bidisk.julia._julia_sides")
    @patch("bidisk.julia._fixed_omega")
    def test_can_reject_unsettled_ratio(self, mock_omega, mock_sides):
        mock_sides.side_effect = lambda m, tau, omega, M, z1, z2: (
         np.arange(len(z1), dtype=float), np.ones(len(z1))
        )
        with self.assertRaises(NoLimit):
            julia_tightness(Mock(), BoundaryPoint(1, 1), 1)



class HorosphereInvarianceTests(TestCase):

    def test_can_find_invariance(self):
        F = SelfMap2(Builtin("avg_shift_phi"), Builtin("avg_shift_psi"))
        violation = horosphere_invariance_violation(
         F, BoundaryPoint(1, 1), 1, n=2000
        )
        self.assertLessEqual(violation, 1e-9)


    def test_can_find_broken_invariance(self):
        F = SelfMap2(Builtin("avg_shift_phi"), Builtin("avg_shift_psi"))
        violation = horosphere_invariance_violation(
         F, BoundaryPoint(1, 1), 100, n=2000
        )
        self.assertGreater(violation, 0)


    def test_need_torus_point(self):
        with self.assertRaises(ValueError):
            horosphere_invariance_violation(Mock(), BoundaryPoint(1, 0), 1)



class FacialInvarianceTests(TestCase):

    def test_projection_is_facially_invariant(self):
        self.assertEqual(facial_invariance_violation(Builtin("proj1"), 1, n=500), 0)
        self.assertEqual(facial_invariance_violation(
         Builtin("proj2"), 1j, "right", n=500
        ), 0)


    def test_can_find_facial_violation(self):
        violation = facial_invariance_violation(
         Builtin("avg_shift_phi"), 1, n=500
        )
        self.assertGreater(violation, 0)


    def test_can_reject_bad_centre(self):
        with self.assertRaises(ValueError):
            facial_invariance_violation(Builtin("proj1"), 0.5)


    def test_can_reject_bad_side(self):
        with self.assertRaises(ValueError):
            facial_invariance_violation(Builtin("proj1"), 1, "up")



class WolffSetStructureTests(TestCase):

    def setUp(self):
        self.patch1 = patch("bidisk.julia.classify_dw")
        self.patch2 = patch("bidisk.julia.facial_invariance_violation")
        self.patch3 = patch("bidisk.julia.horosphere_invariance_violation")
        self.mock_classify = self.patch1.start()
        self.mock_facial = self.patch2.start()
        self.mock_corner = self.patch3.start()
        self.mock_facial.return_value = -0.5
        self.mock_corner.return_value = -0.25
        self.F = Mock()
        self.tau = BoundaryPoint(1, 1)


    def tearDown(self):
        self.patch1.stop()
        self.patch2.stop()
        self.patch3.stop()


    def test_two_type_two_components_give_point(self):
        self.mock_classify.side_effect = [
         DWClass("TypeII", 8.0), DWClass("TypeII", 2.0)
        ]
        report = wolff_set_structure(self.F, self.tau, samples=50, seed=3)
        self.assertEqual(report.case, "II_II_point")
        self.assertEqual(report.facial_violations, {})
        self.assertEqual(report.corner_K, 2)
        self.assertEqual(report.corner_violation, -0.25)
        self.assertTrue(report.corner_in_wolff_set)
        self.mock_classify.assert_any_call(self.F.phi, self.tau, "left")
        self.mock_classify.assert_any_call(self.F.psi, self.tau, "right")
        self.mock_corner.assert_called_with(self.F, self.tau, 2, 50, 3)


    def test_type_one_first_component_gives_face(self):
        self.mock_classify.side_effect = [
         DWClass("TypeI_NonC", 1.0), DWClass("TypeII", 0.1)
        ]
        report = wolff_set_structure(self.F, self.tau, samples=50, seed=3)
        self.assertEqual(report.case, "I_II_face")
        self.assertEqual(report.facial_violations, {"left": -0.5})
        self.assertAlmostEqual(report.corner_K, 10, delta=1e-12)
        self.mock_facial.assert_called_with(self.F.phi, 1, "left", 50, 3)


    def test_type_one_second_component_gives_face(self):
        self.mock_classify.side_effect = [
         DWClass("TypeII", 3.0), DWClass("TypeI_CPoint", 1.0)
        ]
        self.mock_corner.return_value = 0.1
        report = wolff_set_structure(self.F, self.tau)
        self.assertEqual(report.case, "II_I_face")
        self.assertEqual(report.facial_violations, {"right": -0.5})
        self.assertEqual(report.corner_K, 3)
        self.assertFalse(report.corner_in_wolff_set)


    def test_two_type_one_components_give_cross(self):
        self.mock_classify.side_effect = [
         DWClass("TypeI_NonC", 1.0), DWClass("TypeI_NonC", 1.0)
        ]
        report = wolff_set_structure(self.F, self.tau)
        self.assertEqual(report.case, "I_I_cross")
        self.assertEqual(set(report.facial_violations), {"left", "right"})
        self.assertIsNone(report.corner_K)
        self.assertIsNone(report.corner_in_wolff_set)
        self.assertFalse(self.mock_corner.called)


    def test_neither_is_unclassifiable(self):
        self.mock_classify.side_effect = [
         DWClass("Neither", 2.0), DWClass("TypeII", 1.0)
        ]
        with self.assertRaises(Unclassifiable):
            wolff_set_structure(self.F, self.tau)


    def test_ambiguous_is_unclassifiable(self):
        self.mock_classify.side_effect = Ambiguous("x")
        with self.assertRaises(Unclassifiable):
            wolff_set_structure(self.F, self.tau)


    def test_need_torus_point(self):
        with self.assertRaises(ValueError):
            wolff_set_structure(self.F, BoundaryPoint(1, 0))
