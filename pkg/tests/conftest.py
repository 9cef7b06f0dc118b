import numpy as np

from mvgate.gate import SelectionPair, SystemPrep


def random_unit2(rng):
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


def random_prep(rng):
    return SystemPrep(theta=rng.uniform(0.0, np.pi), xi=rng.uniform(-np.pi, np.pi))


def random_operator2(rng, scale=1.0):
    return scale * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))


def random_selection(rng, min_overlap=1e-4):
    # resample nearly-orthogonal pairs so 1e-10 tolerances stay meaningful
    while True:
        sel = SelectionPair(random_unit2(rng), random_unit2(rng))
        if abs(sel.overlap) >= min_overlap:
            return sel


def random_instance(rng):
    return random_prep(rng), random_selection(rng), random_operator2(rng)


def brute_force_outcome(prep, sel, n):
    """Independent joint-state oracle: explicit 4x4 kron products, full-state
    projection, then ancilla contraction."""
    n = np.asarray(n, dtype=np.complex128)
    p0 = np.diag([1.0, 0.0]).astype(np.complex128)
    p1 = np.diag([0.0, 1.0]).astype(np.complex128)
    gate = np.kron(p0, np.eye(2)) + np.kron(p1, n)
    joint = gate @ np.kron(prep.state(), sel.pre)
    f = np.asarray(sel.post)
    projected = np.kron(np.eye(2), np.outer(f, f.conj())) @ joint
    p = float(np.real(np.vdot(projected, projected)))
    unnormalized = np.array([f.conj() @ joint[:2], f.conj() @ joint[2:]])
    return unnormalized, p
