"""Writes kac_paljutkin.json: the 8-dimensional Kac-Paljutkin bialgebra
C ⊕ C ⊕ C ⊕ C ⊕ M_2 in the basis e1..e4, E11, E12, E21, E22."""
import json
import itertools
import numpy as np

labels = ["e1", "e2", "e3", "e4", "E11", "E12", "E21", "E22"]
n = 8
idx = {l: i for i, l in enumerate(labels)}

rep = np.zeros((n, 6, 6), dtype=complex)
for k in range(4):
    rep[k, k, k] = 1
for (a, b) in itertools.product(range(2), range(2)):
    rep[idx[f"E{a+1}{b+1}"], 4 + a, 4 + b] = 1

flat = rep.reshape(n, -1).T
pinv = np.linalg.pinv(flat)
product = np.zeros((n, n, n), dtype=complex)
for i in range(n):
    for j in range(n):
        product[i, j] = pinv @ (rep[i] @ rep[j]).reshape(-1)

involution = np.zeros((n, n), dtype=complex)
for i in range(n):
    involution[:, i] = pinv @ rep[i].conj().T.reshape(-1)

h = 0.5
cop = np.zeros((n, n, n), dtype=complex)


def add(target, terms):
    for coeff, a, b in terms:
        cop[idx[target], idx[a], idx[b]] += coeff


add("e1", [(1, f"e{k}", f"e{k}") for k in range(1, 5)]
    + [(h, f"E{a}{b}", f"E{a}{b}") for a in (1, 2) for b in (1, 2)])
add("e2", [(1, "e1", "e2"), (1, "e2", "e1"), (1, "e3", "e4"), (1, "e4", "e3"),
           (h, "E11", "E22"), (h, "E22", "E11"), (1j * h, "E21", "E12"), (-1j * h, "E12", "E21")])
add("e3", [(1, "e1", "e3"), (1, "e3", "e1"), (1, "e2", "e4"), (1, "e4", "e2"),
           (h, "E11", "E22"), (h, "E22", "E11"), (-1j * h, "E21", "E12"), (1j * h, "E12", "E21")])
add("e4", [(1, "e1", "e4"), (1, "e4", "e1"), (1, "e2", "e3"), (1, "e3", "e2"),
           (h, "E11", "E11"), (h, "E22", "E22"), (-h, "E12", "E12"), (-h, "E21", "E21")])
add("E11", [(1, "e1", "E11"), (1, "E11", "e1"), (1, "e2", "E22"), (1, "E22", "e2"),
            (1, "e3", "E22"), (1, "E22", "e3"), (1, "e4", "E11"), (1, "E11", "e4")])
add("E12", [(1, "e1", "E12"), (1, "E12", "e1"), (1j, "e2", "E21"), (-1j, "E21", "e2"),
            (-1j, "e3", "E21"), (1j, "E21", "e3"), (-1, "e4", "E12"), (-1, "E12", "e4")])
add("E21", [(1, "e1", "E21"), (1, "E21", "e1"), (-1j, "e2", "E12"), (1j, "E12", "e2"),
            (1j, "e3", "E12"), (-1j, "E12", "e3"), (-1, "e4", "E21"), (-1, "E21", "e4")])
add("E22", [(1, "e1", "E22"), (1, "E22", "e1"), (1, "e2", "E11"), (1, "E11", "e2"),
            (1, "e3", "E11"), (1, "E11", "e3"), (1, "e4", "E22"), (1, "E22", "e4")])

counit = np.zeros(n)
counit[0] = 1
characters = [np.eye(n)[k].tolist() for k in range(4)]


def cplx(z):
    z = complex(z)
    return [z.real, z.imag]


def mat(m):
    return [[cplx(z) for z in row] for row in m]


doc = {
    "name": "Kac-Paljutkin",
    "dim": n,
    "labels": labels,
    "structure_constants": [mat(product[i]) for i in range(n)],
    "involution": mat(involution),
    "unit": [cplx(z) for z in pinv @ np.eye(6).reshape(-1)],
    "coproduct": [mat(cop[i]) for i in range(n)],
    "counit": [cplx(z) for z in counit],
    "characters": [[cplx(z) for z in c] for c in characters],
    "faithful_rep": [mat(rep[i]) for i in range(n)],
}

if __name__ == "__main__":
    with open("kac_paljutkin.json", "w") as fh:
        json.dump(doc, fh, indent=1)
