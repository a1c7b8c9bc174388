"""Quick randomized cross-checks, run by ``gradedmod selftest``."""

from __future__ import annotations

import itertools
import random

from .field import FieldSpec
from .oracles import ed_exists_by_partition_search, hilbert_function
from .reduction import (
    elementary_divisors_by_minors,
    low_entry_divisors,
    quotient_signature,
    random_graded_matrix,
    reduce,
    verify_signature_uniqueness,
)
from .trivial_grading import (
    TriviallyGradedModule,
    graded_elementary_divisor_decomposition,
    prime_power_decomposition,
)

FIELDS = (FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(5), FieldSpec.rationals())


def check_hilbert(rng, count):
    for field in FIELDS:
        for _ in range(count):
            A = random_graded_matrix(field, rng)
            result = reduce(A)
            sig = quotient_signature(result.reduced)
            if [sig.hilbert_dim(d) for d in range(22)] != hilbert_function(A, 21):
                return False
            if A @ result.transform != result.reduced or not result.reduced.is_reduced():
                return False
            r, s = A.shape
            if result.column_ops > r * s or result.passes != 1:
                return False
    return True


def check_minors(rng, count):
    for i in range(count):
        A = random_graded_matrix(FIELDS[i % len(FIELDS)], rng, max_rows=5, max_cols=5)
        if low_entry_divisors(reduce(A).reduced) != elementary_divisors_by_minors(A):
            return False
    return True


def check_uniqueness(rng, count, trials):
    for i in range(count):
        A = random_graded_matrix(FIELDS[i % len(FIELDS)], rng)
        if not verify_signature_uniqueness(A, trials, rng.randrange(2**32)):
            return False
    return True


def check_trivial_grading():
    kinds = [(n, p, k) for n in range(3) for p in (2, 3, 5) for k in (1, 2)]
    for size in range(4):
        for combo in itertools.combinations_with_replacement(kinds, size):
            M = TriviallyGradedModule.from_cyclic([(n, p**k) for n, p, k in combo])
            pp = prime_power_decomposition(M).torsion
            if graded_elementary_divisor_decomposition(M).exists != ed_exists_by_partition_search(pp):
                return False
    return True


def run(seed=0, count=25, trials=10):
    rng = random.Random(seed)
    return [
        ("hilbert function, transform, termination", check_hilbert(rng, count)),
        ("low entries vs determinantal divisors", check_minors(rng, count)),
        ("signature invariance under basis change", check_uniqueness(rng, count, trials)),
        ("graded ED existence vs partition search", check_trivial_grading()),
    ]
