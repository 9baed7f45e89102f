"""Generate the .wfx fixtures and their manifest with pyscf.

Every contracted Cartesian AO is expanded into primitives x^i y^j z^k exp(-a r^2);
MO coefficients are written over unit-normalized primitives. The expansion is
checked against pyscf's own AO values before anything is written.

usage: python3 tools/gen_fixtures.py [outdir]
"""

import json
import math
import sys
from pathlib import Path

import numpy as np
from pyscf import dft, gto, scf

ANG = 1.8897261254578281

POWERS = [
    (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1),
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1), (0, 2, 1),
    (1, 2, 0), (1, 0, 2), (0, 1, 2), (1, 1, 1),
]
TYPE_CODE = {p: i + 1 for i, p in enumerate(POWERS)}


def cart_components(l):
    """pyscf's Cartesian component order."""
    return [(lx, l - lx - lz, lz) for lx in range(l, -1, -1) for lz in range(0, l - lx + 1)]


def dfact(n):
    return 1.0 if n <= 0 else n * dfact(n - 2)


def prim_norm(pw, a):
    l = sum(pw)
    num = (2 * a / math.pi) ** 1.5 * (4 * a) ** l
    den = dfact(2 * pw[0] - 1) * dfact(2 * pw[1] - 1) * dfact(2 * pw[2] - 1)
    return math.sqrt(num / den)


def bare_values(prims, pts):
    """Values of bare primitives at points: (npts, nprim)."""
    out = np.empty((len(pts), len(prims)))
    for j, (c, pw, a) in enumerate(prims):
        d = pts - c
        out[:, j] = d[:, 0] ** pw[0] * d[:, 1] ** pw[1] * d[:, 2] ** pw[2] * np.exp(-a * (d**2).sum(1))
    return out


def decontract(mol):
    """Primitive list and the (nao, nprim) matrix of bare-primitive coefficients."""
    assert mol.cart
    prims, rows = [], []
    for ib in range(mol.nbas):
        l = mol.bas_angular(ib)
        exps = mol.bas_exp(ib)
        # relative to radially normalized primitives
        coefs = mol.bas_ctr_coeff(ib) * np.array([gto.gto_norm(l, a) for a in exps])[:, None]
        center = mol.atom_coord(mol.bas_atom(ib))
        for ic in range(coefs.shape[1]):
            for pw in cart_components(l):
                row = {}
                for k, a in enumerate(exps):
                    key = (mol.bas_atom(ib), pw, float(a))
                    row[key] = coefs[k, ic]
                rows.append(row)
    index = {}
    for row in rows:
        for key in row:
            if key not in index:
                index[key] = len(prims)
                prims.append((mol.atom_coord(key[0]), key[1], key[2], key[0]))
    m = np.zeros((len(rows), len(prims)))
    for i, row in enumerate(rows):
        for key, v in row.items():
            m[i, index[key]] = v
    # Component-dependent factors pyscf folds in: fit per AO at probe points.
    rng = np.random.default_rng(7)
    probe = mol.atom_coords().mean(0) + rng.normal(scale=1.2, size=(400, 3))
    ao = mol.eval_gto("GTOval_cart", probe)
    bare = bare_values([(c, pw, a) for c, pw, a, _ in prims], probe)
    mine = bare @ m.T
    for i in range(m.shape[0]):
        scale = np.dot(ao[:, i], mine[:, i]) / np.dot(mine[:, i], mine[:, i])
        m[i] *= scale
    check = rng.normal(scale=2.0, size=(500, 3)) + mol.atom_coords().mean(0)
    err = np.abs(mol.eval_gto("GTOval_cart", check) - bare_values([(c, pw, a) for c, pw, a, _ in prims], check) @ m.T)
    assert err.max() < 1e-10, err.max()
    return prims, m


def fmt(v):
    return f"{v: .15E}"


def section(name, lines):
    return [f"<{name}>"] + list(lines) + [f"</{name}>"]


def rows5(vals):
    return [" ".join(vals[i:i + 5]) for i in range(0, len(vals), 5)]


def wfx_text(title, atoms, prims, orbitals, n_electrons):
    """atoms: (symbol, Z, coord); prims: (center_index, powers, exponent);
    orbitals: (occupation, spin label, energy, coefficients over normalized primitives)."""
    na = sum(o[0] if o[1] == "Alpha" else o[0] / 2 if o[1] == "Alpha and Beta" else 0 for o in orbitals)
    nb = sum(o[0] if o[1] == "Beta" else o[0] / 2 if o[1] == "Alpha and Beta" else 0 for o in orbitals)
    out = []
    out += section("Title", [title])
    out += section("Keywords", ["GTO"])
    out += section("Number of Nuclei", [str(len(atoms))])
    out += section("Number of Occupied Molecular Orbitals", [str(len(orbitals))])
    out += section("Number of Perturbations", ["0"])
    out += section("Net Charge", ["0"])
    out += section("Number of Electrons", [str(n_electrons)])
    out += section("Number of Alpha Electrons", [str(int(round(na)))])
    out += section("Number of Beta Electrons", [str(int(round(nb)))])
    out += section("Nuclear Names", [f"{s}{i + 1}" for i, (s, _, _) in enumerate(atoms)])
    out += section("Atomic Numbers", [str(z) for _, z, _ in atoms])
    out += section("Nuclear Charges", [fmt(float(z)) for _, z, _ in atoms])
    out += section("Nuclear Cartesian Coordinates", [" ".join(fmt(x) for x in c) for _, _, c in atoms])
    out += section("Number of Primitives", [str(len(prims))])
    out += section("Primitive Centers", rows5([str(c + 1) for c, _, _ in prims]))
    out += section("Primitive Types", rows5([str(TYPE_CODE[tuple(pw)]) for _, pw, _ in prims]))
    out += section("Primitive Exponents", rows5([fmt(a) for _, _, a in prims]))
    out += section("Molecular Orbital Occupation Numbers", [fmt(o[0]) for o in orbitals])
    out += section("Molecular Orbital Energies", [fmt(o[2]) for o in orbitals])
    out += section("Molecular Orbital Spin Types", [o[1] for o in orbitals])
    mo = []
    for i, o in enumerate(orbitals):
        mo += section("MO Number", [str(i + 1)])
        mo += rows5([fmt(c) for c in o[3]])
    out += section("Molecular Orbital Primitive Coefficients", mo)
    return "\n".join(out) + "\n"


def exchange_energies(mol, dms):
    """Exact exchange energy per spin, -1/2 Tr(D_s K_s)."""
    out = []
    for d in dms:
        k = scf.hf.get_jk(mol, d, with_j=False)[1]
        out.append(-0.5 * float(np.einsum("ij,ji", d, k)))
    return out


def build(mol, mf, title):
    prims, m = decontract(mol)
    norms = np.array([prim_norm(pw, a) for _, pw, a, _ in prims])
    wprims = [(ia, pw, a) for _, pw, a, ia in prims]
    atoms = [(mol.atom_pure_symbol(i), int(mol.atom_charge(i)), mol.atom_coord(i)) for i in range(mol.natm)]
    orbitals = []
    if isinstance(mf.mo_coeff, np.ndarray) and mf.mo_coeff.ndim == 2:
        occ = mf.mo_occ
        for i in np.nonzero(occ > 0)[0]:
            c = (mf.mo_coeff[:, i] @ m) / norms
            orbitals.append((float(occ[i]), "Alpha and Beta", float(mf.mo_energy[i]), c))
        dm = mf.make_rdm1()
        dms = [dm / 2, dm / 2]
    else:
        for s, label in enumerate(["Alpha", "Beta"]):
            occ = mf.mo_occ[s]
            for i in np.nonzero(occ > 0)[0]:
                c = (mf.mo_coeff[s][:, i] @ m) / norms
                orbitals.append((float(occ[i]), label, float(mf.mo_energy[s][i]), c))
        dms = list(mf.make_rdm1())
    text = wfx_text(title, atoms, wprims, orbitals, mol.nelectron)
    meta = {
        "title": title,
        "method": type(mf).__name__ + (f"/{mf.xc}" if hasattr(mf, "xc") else ""),
        "basis": mol.basis if isinstance(mol.basis, str) else "custom",
        "n_electrons": mol.nelectron,
        "total_energy": float(mf.e_tot),
        "exchange_energy": exchange_energies(mol, dms),
    }
    return text, meta, (atoms, wprims, orbitals)


def duplicate(parts, shift, title):
    atoms, prims, orbitals = parts
    n_atoms, n_prims = len(atoms), len(prims)
    atoms2 = atoms + [(s, z, c + np.array(shift)) for s, z, c in atoms]
    prims2 = prims + [(ia + n_atoms, pw, a) for ia, pw, a in prims]
    orbs2 = [(o[0], o[1], o[2], np.concatenate([o[3], np.zeros(n_prims)])) for o in orbitals]
    orbs2 += [(o[0], o[1], o[2], np.concatenate([np.zeros(n_prims), o[3]])) for o in orbitals]
    n_el = int(round(sum(o[0] for o in orbs2)))
    return wfx_text(title, atoms2, prims2, orbs2, n_el)


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = {}

    def emit(name, text, meta):
        (outdir / f"{name}.wfx").write_text(text)
        manifest[name] = meta
        print(name, meta["total_energy"], meta["exchange_energy"])

    # Hydrogen atom in an even-tempered s basis; essentially the exact 1s.
    h_basis = {"H": [[0, [0.01 * 2.2**k, 1.0]] for k in range(18)]}
    mol = gto.M(atom="H 0 0 0", basis=h_basis, spin=1, cart=True, verbose=0)
    mf = scf.UHF(mol).run(conv_tol=1e-12)
    text, meta, _ = build(mol, mf, "hydrogen atom, even-tempered s basis, UHF")
    emit("h_atom", text, meta)

    h2_parts = None
    for d in [0.74, 1.5, 2.5, 3.5, 5.0]:
        mol = gto.M(atom=f"H 0 0 0; H 0 0 {d}", basis="6-31g**", cart=True, verbose=0)
        mf = scf.RHF(mol).run(conv_tol=1e-12)
        tag = f"{d:.2f}".rstrip("0").rstrip(".").replace(".", "p")
        text, meta, parts = build(mol, mf, f"H2 R = {d} A, RHF/6-31G**")
        emit(f"h2_{tag}A", text, meta)
        if d == 5.0:
            h2_parts = (parts, meta)

    parts, meta = h2_parts
    text = duplicate(parts, [50.0 * ANG, 0.0, 0.0], "two H2 (R = 5 A) 50 A apart, RHF/6-31G**")
    dup_meta = dict(meta, title="two H2 (R = 5 A) 50 A apart", n_electrons=4,
                    total_energy=2 * meta["total_energy"],
                    exchange_energy=[2 * e for e in meta["exchange_energy"]])
    emit("h2_5A_pair", text, dup_meta)

    mol = gto.M(atom="O 0 0 0.1173; H 0 0.7572 -0.4692; H 0 -0.7572 -0.4692",
                basis="6-31g*", cart=True, verbose=0)
    mf = scf.RHF(mol).run(conv_tol=1e-12)
    text, meta, _ = build(mol, mf, "water, RHF/6-31G* (Cartesian d)")
    emit("h2o", text, meta)

    # Staggered ethane with a 1.5 A central bond.
    cc, ch, ang = 1.5, 1.094, math.radians(111.2)
    z = cc / 2
    lines = [f"C 0 0 {z}", f"C 0 0 {-z}"]
    for k in range(3):
        phi = 2 * math.pi * k / 3
        r = ch * math.sin(ang)
        dz = -ch * math.cos(ang)
        lines.append(f"H {r * math.cos(phi)} {r * math.sin(phi)} {z + dz}")
    for k in range(3):
        phi = 2 * math.pi * k / 3 + math.pi / 3
        r = ch * math.sin(ang)
        dz = -ch * math.cos(ang)
        lines.append(f"H {r * math.cos(phi)} {r * math.sin(phi)} {-z - dz}")
    mol = gto.M(atom="; ".join(lines), basis="sto-3g", cart=True, verbose=0)
    mf = dft.RKS(mol, xc="b3lyp").run(conv_tol=1e-11)
    text, meta, _ = build(mol, mf, "ethane C-C 1.5 A, B3LYP/STO-3G")
    emit("ethane", text, meta)

    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
