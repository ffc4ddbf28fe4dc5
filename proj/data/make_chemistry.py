#!/usr/bin/env python3
# Copyright 2026 The PulseForge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the shipped molecular Hamiltonians (needs pyscf + numpy).

Pipeline: RHF/STO-3G integrals -> active space -> Jordan-Wigner on the
spin-orbital Fock space -> parity basis -> two-qubit symmetry reduction ->
Pauli decomposition. Label character i acts on qubit i (least-significant
bit of the basis index). Nuclear repulsion is excluded; frozen-core energy
is folded into the identity coefficient.
"""
import itertools
import sys

import numpy as np
from pyscf import ao2mo, gto, scf

PAULI = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.diag([1.0, -1.0]).astype(complex),
}


def op_on(label):
    # qubit 0 is the least-significant bit -> rightmost Kronecker factor
    m = np.array([[1.0]], dtype=complex)
    for ch in reversed(label):
        m = np.kron(m, PAULI[ch])
    return m


def annihilator(j, n):
    # Jordan-Wigner: a_j = Z_0 ... Z_{j-1} (X_j + i Y_j)/2
    lbl_x = "Z" * j + "X" + "I" * (n - j - 1)
    lbl_y = "Z" * j + "Y" + "I" * (n - j - 1)
    return 0.5 * (op_on(lbl_x) + 1j * op_on(lbl_y))


def active_space(mol, frozen, active):
    mf = scf.RHF(mol).run(verbose=0)
    c = mf.mo_coeff
    hcore = mf.get_hcore()
    core_energy = 0.0
    h1 = c.T @ hcore @ c
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), c.shape[1])
    # frozen-core mean field
    for i in frozen:
        core_energy += 2 * h1[i, i]
        for j in frozen:
            core_energy += 2 * eri[i, i, j, j] - eri[i, j, j, i]
    h_eff = h1.copy()
    for i in frozen:
        h_eff += 2 * eri[:, :, i, i] - eri[:, i, i, :]
    a = np.array(active)
    return core_energy, h_eff[np.ix_(a, a)], eri[np.ix_(a, a, a, a)]


def fermion_matrix(core_energy, h1, eri):
    norb = h1.shape[0]
    n = 2 * norb  # alpha block then beta block
    ops = [annihilator(j, n) for j in range(n)]
    dim = 2**n
    ham = core_energy * np.eye(dim, dtype=complex)

    def so(p, s):
        return p + s * norb

    for p, q in itertools.product(range(norb), repeat=2):
        for s in (0, 1):
            ham += h1[p, q] * ops[so(p, s)].conj().T @ ops[so(q, s)]
    for p, q, r, t in itertools.product(range(norb), repeat=4):
        v = eri[p, q, r, t]  # chemists' notation (pq|rt)
        if abs(v) < 1e-14:
            continue
        for s1 in (0, 1):
            for s2 in (0, 1):
                ham += 0.5 * v * (
                    ops[so(p, s1)].conj().T
                    @ ops[so(r, s2)].conj().T
                    @ ops[so(t, s2)]
                    @ ops[so(q, s1)]
                )
    return ham, n


def parity_reduce(ham, n, n_alpha, n_beta):
    dim = 2**n
    half = n // 2
    # occupation index -> parity index permutation
    perm = np.zeros((dim, dim))
    for occ in range(dim):
        bits = [(occ >> i) & 1 for i in range(n)]
        par = 0
        acc = 0
        for i in range(n):
            acc ^= bits[i]
            par |= acc << i
        perm[par, occ] = 1
    hp = perm @ ham @ perm.T
    keep = []
    for idx in range(dim):
        if ((idx >> (half - 1)) & 1) == n_alpha % 2 and ((idx >> (n - 1)) & 1) == (
            n_alpha + n_beta
        ) % 2:
            keep.append(idx)
    hr = hp[np.ix_(keep, keep)]
    return hr, n - 2


def pauli_terms(mat, nq):
    terms = []
    for lbl in itertools.product("IXYZ", repeat=nq):
        lbl = "".join(lbl)
        c = np.trace(op_on(lbl) @ mat) / 2**nq
        if abs(c) > 1e-8:
            assert abs(c.imag) < 1e-10
            terms.append((c.real, lbl))
    return terms


def license_header():
    with open(__file__) as f:
        lines = f.readlines()[1:]
    return "".join(l for l in lines[: next(i for i, l in enumerate(lines) if not l.startswith("#"))])


def write(path, header, terms, exact):
    with open(path, "w") as f:
        f.write(license_header() + "\n")
        for line in header:
            f.write(f"# {line}\n")
        f.write(f"# terms: {len(terms)}; exact ground energy: {exact:.10f}\n")
        for c, lbl in terms:
            f.write(f"{c:+.12f} {lbl}\n")


def build(atom, frozen, active, nelec, path, title):
    mol = gto.M(atom=atom, basis="sto-3g", verbose=0)
    core, h1, eri = active_space(mol, frozen, active)
    ham, n = fermion_matrix(core, h1, eri)
    hr, nq = parity_reduce(ham, n, nelec // 2, nelec // 2)
    terms = pauli_terms(hr, nq)
    exact = np.linalg.eigvalsh(hr)[0]
    write(path, [title, "electronic energy (Hartree), nuclear repulsion excluded"], terms, exact)
    print(path, len(terms), exact)


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "."
    build("H 0 0 0; H 0 0 0.735", [], [0, 1], 2, f"{out}/h2_sto3g_2q.txt",
          "H2 / STO-3G at 0.735 A, parity mapping with two-qubit reduction")
    build("Li 0 0 0; H 0 0 1.5", [0], [1, 2, 5], 2, f"{out}/lih_4q.txt",
          "LiH / STO-3G at 1.5 A, frozen core, orbitals {1,2,5} active, parity mapping with two-qubit reduction")
