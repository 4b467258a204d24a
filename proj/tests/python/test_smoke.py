"""End-to-end smoke of the python bindings.

Deterministic spot values repeat frozen numbers from the C++ unit suite, so
a mismatch here means the binding layer, not the model.
"""

import math
import os

import pytest

import sympcool as sc

SPECIES = os.environ.get(
    "SYMPCOOL_SPECIES",
    os.path.join(os.path.dirname(__file__), "..", "..", "data", "species.ini"),
)


def load_registry():
    reg = sc.species.Registry()
    reg.load_file(SPECIES)
    return reg


def pair(reg, mol, at):
    return sc.species.make_pair(reg.get(mol), reg.get(at))


def test_package_layout():
    assert sc.__version__
    for name in ("units", "species", "kinematics", "ensemble", "cascade",
                 "rotation", "montecarlo", "validation"):
        assert hasattr(sc, name)


def test_units():
    assert sc.units.hartree_to_ev(sc.units.ev_to_hartree(3.7)) == pytest.approx(3.7, rel=1e-15)
    assert sc.units.convert(1.0, "hartree", "eV") == pytest.approx(27.211386, rel=1e-15)
    assert sc.units.trap_omega_au(1.0) == pytest.approx(1.5198298293527379e-10, rel=1e-12)
    with pytest.raises(ValueError):
        sc.units.convert(1.0, "eV", "bohr")


def test_registry_and_pair():
    reg = load_registry()
    names = set(reg.names())
    assert {"Mg+", "Ca+", "Be+", "MgH+", "HD+", "N2+", "H2+", "I2+"} <= names
    pr = pair(reg, "MgH+", "Mg+")
    assert pr.xi == pytest.approx(25.0 / 24.0, rel=1e-14)
    assert pr.mol.polarity == sc.species.Polarity.polar
    with pytest.raises(sc.ParseError):
        reg.load_text("[species.X+]\nmass_amu = not_a_number\n")


def test_kinematics():
    q = 1.0
    e = sc.units.ev_to_hartree(2.0)
    assert sc.kinematics.scattering_angle(e, 0.0, q) == pytest.approx(math.pi, rel=1e-15)
    assert sc.kinematics.closest_approach(e, 0.0, q) == pytest.approx(13.605693, rel=1e-12)
    with pytest.raises(ValueError):
        sc.kinematics.scattering_angle(-1.0, 0.0, q)


def test_ensemble_averages():
    reg = load_registry()
    pr = pair(reg, "MgH+", "Mg+")
    e2 = sc.units.ev_to_hartree(2.0)
    sig = sc.ensemble.sigma(e2, pr.mu, sc.units.trap_omega_au(1.0))
    assert sc.units.bohr_to_um(sig) == pytest.approx(631.81231103625578, rel=1e-12)
    de = sc.ensemble.mean_energy_loss_cc(e2, pr, sc.units.um_to_bohr(5.29))
    assert sc.units.hartree_to_ev(de) == pytest.approx(6.5933112810606793e-07, rel=1e-12)
    f3 = sc.ensemble.mean_peak_field_cubed_cc(e2, sc.units.um_to_bohr(5.29), 1.0, 1.0)
    assert f3.approx_valid and f3.rel_dev < 1e-6


def test_cascade_totals():
    reg = load_registry()
    pr = pair(reg, "MgH+", "Mg+")
    cc = sc.ensemble.CoolingScenario.crystal(sc.units.um_to_bohr(5.29))
    e_max = sc.units.ev_to_hartree(2.0)
    e_min = sc.units.ev_to_hartree(0.5)
    res = sc.cascade.total_cooling_time(e_max, e_min, pr, cc)
    assert not res.lower_bound
    dissipated = sum(iv.n * iv.de_mean for iv in res.intervals)
    assert dissipated == pytest.approx(e_max - e_min, rel=1e-12)
    row = sc.cascade.table1_row(sc.units.ev_to_hartree(0.4), sc.units.um_to_bohr(17.5), pr)
    assert row.t == pytest.approx(row.n_coll * row.tau, rel=1e-15)


def test_rotation_cycle():
    reg = load_registry()
    pr = pair(reg, "N2+", "Ca+")
    res = sc.rotation.cycle_excitation(
        sc.units.ev_to_hartree(1.5), sc.units.ev_to_hartree(0.1), pr,
        sc.units.um_to_bohr(5.3))
    assert res.phi_mean == pytest.approx(0.041463795476929771, rel=1e-9)
    assert res.phi_lo < res.phi_mean < res.phi_hi
    assert res.eps_small_ok and res.low_field_ok
    polar = pair(reg, "MgH+", "Mg+")
    with pytest.raises(ValueError):
        sc.rotation.apolar_single_collision(sc.units.ev_to_hartree(1.0), 10.0, polar)


def test_montecarlo_determinism():
    reg = load_registry()
    cfg = sc.montecarlo.McConfig()
    cfg.pair = pair(reg, "N2+", "Ca+")
    cfg.scenario = sc.ensemble.CoolingScenario.crystal(sc.units.um_to_bohr(5.29))
    cfg.e_init = sc.units.ev_to_hartree(0.3)
    cfg.e_final = sc.units.ev_to_hartree(0.15)
    cfg.seed = 20240601
    cfg.n_runs = 3
    cfg.accumulate_excitation = True
    cfg.record_trace = True
    a = sc.montecarlo.run(cfg)
    b = sc.montecarlo.run(cfg)
    assert a.n_coll.mean == b.n_coll.mean
    assert [r.n_coll for r in a.runs] == [r.n_coll for r in b.runs]
    assert a.phi.mean > 0
    assert len(a.trace) == a.runs[0].n_coll
    assert not a.any_capped


def test_validation_invariants():
    reg = load_registry()
    checks = sc.validation.invariant_checks(reg)
    assert checks
    failed = [c.id for c in checks if not c.passed]
    assert failed == []
