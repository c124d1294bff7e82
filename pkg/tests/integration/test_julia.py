import bidisk
from unittest import TestCase

TAU = bidisk.BoundaryPoint(1, 1)

class JuliaSoundnessTests(TestCase):

    def check_soundness(self, name, M):
        m = bidisk.Builtin(name)
        K = bidisk.k_value(m, TAU, M)
        report = bidisk.julia_max_violation(m, TAU, M, K + 1e-6, n=10 ** 5)
        self.assertLessEqual(report.max_violation, 1e-9)
        self.assertTrue(report.satisfied)


    def test_herve_inequality_holds(self):
        self.check_soundness("herve_ex1_phi", 1)


    def test_avg_shift_inequality_holds(self):
        self.check_soundness("avg_shift_phi", 2)


    def test_herve_inequality_fails_below_k(self):
        m = bidisk.Builtin("herve_ex1_phi")
        report = bidisk.julia_max_violation(m, TAU, 1, 0.4, n=10 ** 5)
        self.assertGreater(report.max_violation, 0)
        self.assertFalse(report.satisfied)



class JuliaTightnessTests(TestCase):

    def test_tightness_recovers_k(self):
        for name in ("herve_ex1_phi", "sola_ex2_phi", "mcp_ex1_psi",
         "avg_shift_phi", "avg_shift_psi"):
            m = bidisk.Builtin(name)
            for M in (0.5, 1, 2):
                self.assertAlmostEqual(
                 bidisk.julia_tightness(m, TAU, M), bidisk.k_value(m, TAU, M),
                 delta=1e-4, msg="{} at M={}".format(name, M)
                )


    def test_tightness_at_type_two_constant(self):
        m = bidisk.Builtin("mcp_ex1_psi")
        A = bidisk.classify_dw(m, TAU).A
        self.assertAlmostEqual(bidisk.julia_tightness(m, TAU, A), 1, delta=1e-4)



class HorosphereInvarianceTests(TestCase):

    def test_avg_shift_invariance(self):
        F = bidisk.SelfMap2(
         bidisk.Builtin("avg_shift_phi"), bidisk.Builtin("avg_shift_psi")
        )
        self.assertLessEqual(
         bidisk.horosphere_invariance_violation(F, TAU, 1, n=10 ** 4), 1e-9
        )
        self.assertGreater(
         bidisk.horosphere_invariance_violation(F, TAU, 100, n=10 ** 4), 0
        )


    def test_example_invariance(self):
        psi = bidisk.Builtin("mcp_ex1_psi")
        F = bidisk.SelfMap2(bidisk.Builtin("herve_ex1_phi"), psi)
        A = bidisk.classify_dw(psi, TAU, "right").A
        self.assertLessEqual(
         bidisk.horosphere_invariance_violation(F, TAU, 1 / A, n=10 ** 4), 1e-9
        )
