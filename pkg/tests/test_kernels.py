from array import array
from itertools import product

import pytest

from ncause import kernels
from ncause.cause import prime_implicant_oracle, sufficient_sets
from ncause.kernels import _pure
from ncause.values import BOOL, ORDER, Value


def table_fire(table, domain):
    radix = len(domain)

    def fire(vs):
        row = 0
        for v in vs:
            row = row * radix + v.index
        return Value(domain, table[row])

    return fire


def via_kernel(table, actual, domain):
    actuals = [Value(domain, i) for i in actual]
    target = table_fire(table, domain)(actuals).index
    return sufficient_sets(array("i", table), actuals, len(domain), target)


def test_backend_selection():
    assert kernels.backend() in kernels.BACKENDS
    with pytest.raises(ValueError):
        kernels.use_backend("gpu")


def test_oracle_spot_values():
    # frozen from hand analysis: OR at (T,T) has two singleton implicants,
    # XOR at (T,F) needs both positions fixed
    t, f = BOOL.value(1), BOOL.value(0)
    or2 = table_fire([0, 1, 1, 1], BOOL)
    xor2 = table_fire([0, 1, 1, 0], BOOL)
    const = table_fire([1, 1, 1, 1], BOOL)
    assert prime_implicant_oracle(or2, [t, t], BOOL) == [(0,), (1,)]
    assert prime_implicant_oracle(xor2, [t, f], BOOL) == [(0, 1)]
    assert prime_implicant_oracle(const, [t, f], BOOL) == [()]


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_kernel_matches_oracle_on_every_boolean_function(backend, k):
    rows = 2 ** k
    for bits in range(2 ** rows):
        table = [(bits >> r) & 1 for r in range(rows)]
        fire = table_fire(table, BOOL)
        for actual in product(range(2), repeat=k):
            expected = prime_implicant_oracle(fire, [BOOL.value(i) for i in actual], BOOL)
            assert sorted(via_kernel(table, actual, BOOL)) == sorted(expected)


def test_kernel_matches_oracle_on_ternary_functions(backend):
    import random
    rng = random.Random(7)
    for _ in range(300):
        k = rng.randint(0, 4)
        table = [rng.randrange(3) for _ in range(3 ** k)]
        actual = [rng.randrange(3) for _ in range(k)]
        expected = prime_implicant_oracle(table_fire(table, ORDER),
                                          [ORDER.value(i) for i in actual], ORDER)
        assert sorted(via_kernel(table, actual, ORDER)) == sorted(expected)


def test_backends_agree_bit_for_bit():
    if "fast" not in kernels.BACKENDS:
        pytest.skip("compiled kernel not built")
    import random
    rng = random.Random(11)
    fast = kernels.BACKENDS["fast"]
    for _ in range(200):
        radix = rng.choice([2, 3, 4])
        k = rng.randint(0, 6)
        table = array("i", (rng.randrange(radix) for _ in range(radix ** k)))
        actual = [rng.randrange(radix) for _ in range(k)]
        target = rng.randrange(radix)
        assert fast.agreement_masks(table, actual, radix, target) == \
            _pure.agreement_masks(table, actual, radix, target)
        assert fast.minimal_sufficient(table, actual, radix, target) == \
            _pure.minimal_sufficient(table, actual, radix, target)


def test_kernel_output_is_size_ordered(backend):
    # 3-input OR at (T,T,F): implicants {0} and {1}
    table = [0] + [1] * 7
    assert kernels.minimal_sufficient(table, [1, 1, 0], 2, 1) == [0b001, 0b010]


def test_kernel_rejects_bad_input(backend):
    with pytest.raises(ValueError):
        kernels.minimal_sufficient([0, 1], [0, 0], 2, 0)
    with pytest.raises(ValueError):
        kernels.minimal_sufficient([0] * 2, [0] * 17, 2, 0)


def test_benchmark_script_runs(capsys):
    import importlib.util, pathlib
    path = pathlib.Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    mod.main(["--arity", "2", "5", "--repeat", "1"])
    out = capsys.readouterr().out
    assert out.splitlines()[-1].split()[0] == "5"
