import io
import os
import csv
from unittest import TestCase
from unittest.mock import patch
from bidisk.cli import main
from bidisk.records import record_string_to_dict

FILES = "tests/integration/files/"

class CommandLineTest(TestCase):

    def setUp(self):
        self.files_at_start = os.listdir(FILES)
        self.patch1 = patch("sys.stderr", new_callable=io.StringIO)
        self.mock_stderr = self.patch1.start()


    def tearDown(self):
        self.patch1.stop()
        files_at_end = os.listdir(FILES)
        to_remove = [f for f in files_at_end if f not in self.files_at_start]
        for f in to_remove:
            os.remove(FILES + f)


    def run_to_file(self, argv, filename):
        self.assertEqual(main(argv + ["--out", FILES + filename]), 0)
        with open(FILES + filename) as f:
            return f.read()



class CommandLineExampleTests(CommandLineTest):

    def test_classify(self):
        text = self.run_to_file([
         "classify", "--map", "builtin:mcp_ex1_psi", "--tau", "1,0;1,0",
         "--side", "left"
        ], "classify.txt")
        record = record_string_to_dict(text)
        self.assertEqual(record["kind"], "TypeII")
        self.assertEqual(record["type"], 2)
        self.assertAlmostEqual(record["A"], 0.0967, delta=1e-3)


    def test_kcurve(self):
        text = self.run_to_file([
         "kcurve", "--map", "builtin:herve_ex1_phi", "--tau", "1,0;1,0",
         "--mmin", "0.1", "--mmax", "10", "--n", "25"
        ], "k.csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(len(rows), 25)
        for row in rows:
            M = float(row["M"])
            self.assertAlmostEqual(float(row["K"]), M / (M + 1), delta=1e-6)


    def test_iterate(self):
        text = self.run_to_file([
         "iterate", "--phi", "builtin:avg_shift_phi",
         "--psi", "builtin:avg_shift_psi", "--start", "0,0;0,0", "--n", "60",
         "--tau", "1,0;1,0", "--K", "1"
        ], "orbit.csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(len(rows), 61)
        self.assertAlmostEqual(float(rows[-1]["re1"]), 1, delta=1e-6)
        self.assertAlmostEqual(float(rows[-1]["re2"]), 1, delta=1e-6)


    def test_rational_map_file(self):
        text = self.run_to_file([
         "eval", "--map", FILES + "herve_rational.json", "--point", "0,0;0,0"
        ], "value.txt")
        self.assertAlmostEqual(
         abs(record_string_to_dict(text)["value"] - 0.5), 0, delta=1e-15
        )


    def test_wolff_set(self):
        text = self.run_to_file([
         "wolff-set", "--phi", "builtin:herve_ex1_phi",
         "--psi", "builtin:mcp_ex1_psi", "--tau", "1,0;1,0", "--samples", "2000"
        ], "wolff.txt")
        record = record_string_to_dict(text)
        self.assertEqual(record["case"], "I_II_face")
        self.assertEqual(record["phi_class"]["kind"], "TypeI_NonC")
        self.assertEqual(record["witness_tau"], "1;1")
        self.assertIs(record["corner_in_wolff_set"], True)


    def test_slice_dw(self):
        text = self.run_to_file([
         "slice-dw", "--map", "builtin:avg_shift_phi", "--fixed", "0,0"
        ], "slice.txt")
        record = record_string_to_dict(text)
        self.assertEqual(record["kind"], "InteriorFixed")
        self.assertAlmostEqual(abs(record["p"] - 0.5), 0, delta=1e-12)



class CommandLineDeterminismTests(CommandLineTest):

    def test_julia_check_is_deterministic(self):
        argv = [
         "julia-check", "--map", "builtin:herve_ex1_phi", "--tau", "1,0;1,0",
         "--M", "1", "--alpha", "0.4", "--samples", "5000", "--seed", "17"
        ]
        first = self.run_to_file(argv, "first.txt")
        second = self.run_to_file(argv, "second.txt")
        self.assertEqual(first, second)
        record = record_string_to_dict(first)
        self.assertEqual(record["n_samples"], 5000)
        self.assertIs(record["satisfied"], False)


    def test_environment_seed(self):
        argv = [
         "invariance", "--phi", "builtin:avg_shift_phi",
         "--psi", "builtin:avg_shift_psi", "--tau", "1,0;1,0", "--K", "100",
         "--samples", "3000"
        ]
        with patch.dict(os.environ, {"DW_SEED": "17"}):
            from_environment = self.run_to_file(argv, "env.txt")
        from_flag = self.run_to_file(argv + ["--seed", "17"], "flag.txt")
        self.assertEqual(from_environment, from_flag)
        self.assertIs(record_string_to_dict(from_flag)["invariant"], False)


    def test_csv_is_deterministic(self):
        argv = [
         "find-dw", "--phi", "builtin:avg_shift_phi",
         "--psi", "builtin:avg_shift_psi", "--kmax", "6"
        ]
        first = self.run_to_file(argv, "first.txt")
        self.assertEqual(first, self.run_to_file(argv, "second.txt"))



class CommandLineErrorTests(CommandLineTest):

    def test_usage_errors(self):
        self.assertEqual(main(["classify", "--map", "builtin:proj1"]), 64)
        self.assertEqual(main(["teleport"]), 64)
        self.assertEqual(main([
         "eval", "--map", "builtin:proj1", "--point", "2,0;0,0"
        ]), 64)
        self.assertIn("error", self.mock_stderr.getvalue())


    def test_map_errors(self):
        for name in ("not_a_self_map.json", "bad.json", "missing.json"):
            self.assertEqual(main([
             "eval", "--map", FILES + name, "--point", "0,0;0,0"
            ]), 1)
        self.assertEqual(main([
         "eval", "--map", "builtin:nothing", "--point", "0,0;0,0"
        ]), 1)


    def test_unclassifiable_self_map(self):
        self.assertEqual(main([
         "wolff-set", "--phi", FILES + "square.json",
         "--psi", "builtin:avg_shift_psi", "--tau", "1,0;1,0"
        ]), 2)
        self.assertIn("Unclassifiable", self.mock_stderr.getvalue())


    def test_unfixed_point_is_not_an_error(self):
        text = self.run_to_file([
         "classify", "--map", "builtin:herve_ex1_phi", "--tau", "-1,0;1,0"
        ], "class.txt")
        self.assertEqual(record_string_to_dict(text)["kind"], "NotFixed")
