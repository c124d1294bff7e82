import sys
sys.path.insert(0, ".")
import bidisk
import numpy as np
from random import random, seed
from scipy.signal import convolve2d
from tqdm import tqdm
print()

SUBSET = 200
SAMPLES = 2000
seed(0xD2)

# Two rational maps fixing (1, 1), mixed in random proportions
herve = np.array([[1, 0], [0, -1]]), np.array([[2, -1], [-1, 0]])
sola = np.array([[1, 1], [1, -3]]), np.array([[3, -1], [-1, -1]])

def mixture(t):
    num = t * convolve2d(herve[0], sola[1]) + (
     1 - t
    ) * convolve2d(sola[0], herve[1])
    return bidisk.Rational(num, convolve2d(herve[1], sola[1]))


maps = []
for n in range(SUBSET // 2):
    maps.append(("mixture t={:.3f}".format(n / SUBSET * 2), mixture(
     n / SUBSET * 2
    ), bidisk.BoundaryPoint(1, 1)))
    w, theta = random(), 2 * np.pi * random()
    maps.append(("blend w1={:.3f}".format(w), bidisk.Blend(1, w, 1 - w),
     bidisk.BoundaryPoint(np.exp(1j * theta), np.exp(1j * theta))))

# Go through them
print(f"Classifying {len(maps)} maps...")
results = {}
for name, m, tau in tqdm(maps):
    try:
        dw = bidisk.classify_dw(m, tau)
        results[name] = {"kind": dw.kind, "monotone": dw.curve.monotone}
        report = bidisk.julia_max_violation(
         m, tau, 1.0, dw.curve.k_at(1.0) + 1e-6, n=SAMPLES
        )
        results[name]["julia"] = report.satisfied
    except Exception as e:
        results[name] = {"error": "{}: {}".format(type(e).__name__, e)}

failed = [n for n in results if "error" in results[n]]
print(f"{len(failed)} maps could not be classified:")
for name in failed: print(f"    {name}: {results[name]['error']}")
print()

kinds = {}
for name in results:
    if "kind" in results[name]:
        kinds[results[name]["kind"]] = kinds.get(results[name]["kind"], 0) + 1
print("Kinds found:")
for kind, count in sorted(kinds.items()): print(f"    {kind}: {count}")
print()

not_monotone = [n for n in results if results[n].get("monotone") is False]
print(f"{len(not_monotone)} maps had K-curves that were not monotone:")
print((" ".join(not_monotone) + "\n") if not_monotone else "")

violated = [n for n in results if results[n].get("julia") is False]
print(f"{len(violated)} maps violated the Julia inequality at K(1):")
print((" ".join(violated) + "\n") if violated else "")
