from qhopf.bundles import block_spectrum, commutation_witness
from qhopf.haar import haar
from qhopf.quantum_group import GAMMA, GAMMA_STAR
from qhopf.sphere import convention_report
import time

def time_function(func, name):
    start_time = time.time()
    func()
    end_time = time.time()
    execution_time = end_time - start_time
    print(f"{name} execution time: {execution_time:.2f} seconds")


def calibrate_conventions():
    report = convention_report()
    print(f"conventions valid: {report.is_valid()}")


def haar_moments():
    x = GAMMA * GAMMA_STAR
    for k in range(8):
        print(f"h(x^{k}) = {haar(x ** k).to_text()}")


def assemble_spectra():
    for side in ("left", "right"):
        for n in range(-2, 3):
            pairs = block_spectrum(n, 3, side, use_cache=False)
            matched = sum(1 for p in pairs if p.match)
            print(f"{side} n={n}: {matched}/{len(pairs)} table rows match")


def commutators():
    for n in range(-2, 3):
        print(commutation_witness(n).to_dict())


if __name__ == "__main__":
    time_function(calibrate_conventions, "Conventions")
    time_function(haar_moments, "Haar moments")
    time_function(assemble_spectra, "Spectra")
    time_function(commutators, "Commutators")
