#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympcool/cascade.hpp"
#include "sympcool/config.hpp"
#include "sympcool/ensemble.hpp"
#include "sympcool/kinematics.hpp"
#include "sympcool/montecarlo.hpp"
#include "sympcool/numerics.hpp"
#include "sympcool/rotation.hpp"
#include "sympcool/species.hpp"
#include "sympcool/units.hpp"
#include "sympcool/validation.hpp"

namespace py = pybind11;
using namespace sympcool;

// Python face of the library. Same layout as the C++ namespaces: one
// submodule per module, atomic units everywhere, CM frame unless a name says
// lab. Frame and convention mappings stay in the CLI; none live here.
PYBIND11_MODULE(_core, m) {
  m.doc() = "sympathetic cooling of trapped molecular ions: collision "
            "kinematics, cooling cascades, rotational excitation";

  py::register_exception<config::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<numerics::BracketError>(m, "BracketError",
                                                 PyExc_RuntimeError);

  // --- units
  auto u = m.def_submodule("units", "unit conversions; core values are atomic");
  u.attr("HARTREE_EV") = units::kHartreeEv;
  u.attr("BOHR_METER") = units::kBohrMeter;
  u.attr("AMU_ME") = units::kAmuMe;
  u.attr("ATOMIC_TIME_SECOND") = units::kAtomicTimeSecond;
  u.attr("HARTREE_INVCM") = units::kHartreeInvCm;
  u.def("convert",
        [](double value, const std::string& from, const std::string& to) {
          return units::convert(value, units::parse_unit(from),
                                units::parse_unit(to));
        },
        py::arg("value"), py::arg("from_unit"), py::arg("to_unit"),
        "convert between named units of one dimension");
  u.def("ev_to_hartree", &units::ev_to_hartree, py::arg("e"));
  u.def("hartree_to_ev", &units::hartree_to_ev, py::arg("e"));
  u.def("invcm_to_hartree", &units::invcm_to_hartree, py::arg("w"));
  u.def("amu_to_me", &units::amu_to_me, py::arg("m"));
  u.def("um_to_bohr", &units::um_to_bohr, py::arg("x"));
  u.def("bohr_to_um", &units::bohr_to_um, py::arg("x"));
  u.def("s_to_atomic", &units::s_to_atomic, py::arg("t"));
  u.def("atomic_to_s", &units::atomic_to_s, py::arg("t"));
  u.def("atomic_to_ms", &units::atomic_to_ms, py::arg("t"));
  u.def("trap_omega_au", &units::trap_omega_au, py::arg("nu_mhz"),
        "angular trap frequency in atomic units for a linear drive in MHz");

  // --- species
  auto sp = m.def_submodule("species", "species data and pair bookkeeping");
  py::enum_<species::Polarity>(sp, "Polarity")
      .value("atom", species::Polarity::atom)
      .value("apolar", species::Polarity::apolar)
      .value("polar", species::Polarity::polar);
  py::class_<species::Species>(sp, "Species")
      .def(py::init<>())
      .def_readwrite("name", &species::Species::name)
      .def_readwrite("mass", &species::Species::mass)
      .def_readwrite("charge", &species::Species::charge)
      .def_readwrite("polarity", &species::Species::polarity)
      .def_readwrite("rot_const", &species::Species::rot_const)
      .def_readwrite("quadrupole", &species::Species::quadrupole)
      .def_readwrite("dipole", &species::Species::dipole)
      .def("is_molecule", &species::Species::is_molecule)
      .def("validate", &species::Species::validate)
      .def("__repr__", [](const species::Species& s) {
        return "<Species " + s.name + " (" +
               std::string(species::polarity_name(s.polarity)) + ")>";
      });
  py::class_<species::SpeciesPair>(sp, "SpeciesPair")
      .def_readonly("mol", &species::SpeciesPair::mol)
      .def_readonly("at", &species::SpeciesPair::at)
      .def_readonly("xi", &species::SpeciesPair::xi)
      .def_readonly("mu", &species::SpeciesPair::mu)
      .def_readonly("q_prod", &species::SpeciesPair::q_prod)
      .def("lab_from_cm", &species::SpeciesPair::lab_from_cm, py::arg("e"))
      .def("cm_from_lab", &species::SpeciesPair::cm_from_lab, py::arg("e"));
  sp.def("make_pair", &species::make_pair, py::arg("mol"), py::arg("at"));
  py::class_<species::Registry>(sp, "Registry")
      .def(py::init<>())
      .def("load_file", &species::Registry::load_file, py::arg("path"))
      .def("load_text", &species::Registry::load_text, py::arg("text"))
      .def("save_file", &species::Registry::save_file, py::arg("path"))
      .def("save_text", &species::Registry::save_text)
      .def("get", &species::Registry::get, py::arg("name"),
           py::return_value_policy::copy)
      .def("contains", &species::Registry::contains, py::arg("name"))
      .def("names", &species::Registry::names)
      .def("insert", &species::Registry::insert, py::arg("s"))
      .def("apply_override", &species::Registry::apply_override,
           py::arg("dotted_key"), py::arg("value"));

  // --- kinematics
  auto k = m.def_submodule("kinematics", "two-body Coulomb scattering");
  k.def("reduced_impact", &kinematics::reduced_impact, py::arg("e_cm"),
        py::arg("b"), py::arg("q_prod"));
  k.def("scattering_angle", &kinematics::scattering_angle, py::arg("e_cm"),
        py::arg("b"), py::arg("q_prod"));
  k.def("transfer_fraction", &kinematics::transfer_fraction, py::arg("theta"),
        py::arg("xi"));
  k.def("transfer_fraction_from_impact",
        &kinematics::transfer_fraction_from_impact, py::arg("e_cm"),
        py::arg("b"), py::arg("xi"), py::arg("q_prod"));
  k.def("energy_transfer", &kinematics::energy_transfer, py::arg("e"),
        py::arg("e_cm"), py::arg("b"), py::arg("xi"), py::arg("q_prod"));
  k.def("energy_transfer_lab", &kinematics::energy_transfer_lab,
        py::arg("e_lab"), py::arg("theta"), py::arg("xi"));
  k.def("cm_to_lab", &kinematics::cm_to_lab, py::arg("e_cm"), py::arg("xi"));
  k.def("lab_to_cm", &kinematics::lab_to_cm, py::arg("e_lab"), py::arg("xi"));
  k.def("closest_approach", &kinematics::closest_approach, py::arg("e_cm"),
        py::arg("b"), py::arg("q_prod"));
  k.def("peak_field_cubed", &kinematics::peak_field_cubed, py::arg("e_cm"),
        py::arg("b"), py::arg("q_at"), py::arg("q_prod"));

  // --- ensemble
  auto en = m.def_submodule("ensemble",
                            "impact parameter ensembles and their averages");
  en.def("sigma", &ensemble::sigma, py::arg("e_cm"), py::arg("mu"),
         py::arg("omega"), "thermal spread of the cold ion");
  en.def("pdf_single_atom", &ensemble::pdf_single_atom, py::arg("b"),
         py::arg("sigma"));
  en.def("pdf_crystal", &ensemble::pdf_crystal, py::arg("b"), py::arg("d"));
  en.def("mean_energy_loss_cc", &ensemble::mean_energy_loss_cc,
         py::arg("e_cm"), py::arg("pair"), py::arg("d"));
  en.def("mean_energy_loss_cc_lab", &ensemble::mean_energy_loss_cc_lab,
         py::arg("e_cm"), py::arg("pair"), py::arg("d"));
  en.def("mean_energy_loss_sa_bound", &ensemble::mean_energy_loss_sa_bound,
         py::arg("e_cm"), py::arg("pair"), py::arg("sigma"));
  en.def("mean_energy_loss_sa_quadrature",
         &ensemble::mean_energy_loss_sa_quadrature, py::arg("e_cm"),
         py::arg("pair"), py::arg("sigma"));
  py::class_<ensemble::FieldCubedAverage>(en, "FieldCubedAverage")
      .def_readonly("exact", &ensemble::FieldCubedAverage::exact)
      .def_readonly("approx", &ensemble::FieldCubedAverage::approx)
      .def_readonly("rel_dev", &ensemble::FieldCubedAverage::rel_dev)
      .def_readonly("approx_valid", &ensemble::FieldCubedAverage::approx_valid);
  en.def("mean_peak_field_cubed_cc", &ensemble::mean_peak_field_cubed_cc,
         py::arg("e_cm"), py::arg("d"), py::arg("q_at"), py::arg("q_prod"));
  en.def("sigma_tilde", &ensemble::sigma_tilde, py::arg("mu"), py::arg("omega"),
         py::arg("q_prod"), py::arg("e_min"), py::arg("e_max"));
  py::class_<ensemble::CoolingScenario>(en, "CoolingScenario")
      .def_static("single_atom", &ensemble::CoolingScenario::single_atom,
                  py::arg("omega"))
      .def_static("crystal", &ensemble::CoolingScenario::crystal, py::arg("d"))
      .def_readonly("omega", &ensemble::CoolingScenario::omega)
      .def_readonly("d", &ensemble::CoolingScenario::d)
      .def("is_single_atom", &ensemble::CoolingScenario::is_single_atom)
      .def("sigma_of", &ensemble::CoolingScenario::sigma_of, py::arg("e_cm"),
           py::arg("mu"))
      .def("tau", &ensemble::CoolingScenario::tau, py::arg("e_cm"),
           py::arg("mu"))
      .def("mean_loss", &ensemble::CoolingScenario::mean_loss, py::arg("e_cm"),
           py::arg("pair"))
      .def("effective_d", &ensemble::CoolingScenario::effective_d,
           py::arg("e_cm"), py::arg("mu"));

  // --- cascade
  auto ca = m.def_submodule("cascade", "discretized cooling cycle");
  py::enum_<cascade::GridRule>(ca, "GridRule")
      .value("uniform", cascade::GridRule::uniform)
      .value("geometric", cascade::GridRule::geometric);
  py::class_<cascade::GridSpec>(ca, "GridSpec")
      .def(py::init<>())
      .def_readwrite("n", &cascade::GridSpec::n)
      .def_readwrite("rule", &cascade::GridSpec::rule);
  ca.def("build_grid", &cascade::build_grid, py::arg("e_max"), py::arg("e_min"),
         py::arg("n"), py::arg("rule"));
  ca.def("collisions_per_interval", &cascade::collisions_per_interval,
         py::arg("e_hi"), py::arg("e_lo"), py::arg("pair"),
         py::arg("scenario"));
  ca.def("intercollision_time", &cascade::intercollision_time, py::arg("e_cm"),
         py::arg("pair"), py::arg("scenario"));
  py::class_<cascade::IntervalRecord>(ca, "IntervalRecord")
      .def_readonly("e_hi", &cascade::IntervalRecord::e_hi)
      .def_readonly("e_lo", &cascade::IntervalRecord::e_lo)
      .def_readonly("de_mean", &cascade::IntervalRecord::de_mean)
      .def_readonly("n", &cascade::IntervalRecord::n)
      .def_readonly("tau", &cascade::IntervalRecord::tau)
      .def_readonly("t", &cascade::IntervalRecord::t);
  py::enum_<cascade::TimeMode>(ca, "TimeMode")
      .value("grid_sum", cascade::TimeMode::grid_sum)
      .value("integral", cascade::TimeMode::integral);
  py::class_<cascade::CascadeResult>(ca, "CascadeResult")
      .def_readonly("intervals", &cascade::CascadeResult::intervals)
      .def_readonly("n_total", &cascade::CascadeResult::n_total)
      .def_readonly("time_total", &cascade::CascadeResult::time_total)
      .def_readonly("lower_bound", &cascade::CascadeResult::lower_bound)
      .def_readonly("mode", &cascade::CascadeResult::mode);
  ca.def("total_cooling_time", &cascade::total_cooling_time, py::arg("e_max"),
         py::arg("e_min"), py::arg("pair"), py::arg("scenario"),
         py::arg("grid") = cascade::GridSpec{},
         py::arg("mode") = cascade::TimeMode::grid_sum);
  py::class_<cascade::ScenarioTimeRatio>(ca, "ScenarioTimeRatio")
      .def_readonly("crude", &cascade::ScenarioTimeRatio::crude)
      .def_readonly("full", &cascade::ScenarioTimeRatio::full)
      .def_readonly("t_sa", &cascade::ScenarioTimeRatio::t_sa)
      .def_readonly("t_cc", &cascade::ScenarioTimeRatio::t_cc);
  ca.def("scenario_time_ratio", &cascade::scenario_time_ratio, py::arg("pair"),
         py::arg("e_max"), py::arg("e_min"), py::arg("omega"), py::arg("d"),
         py::arg("grid") = cascade::GridSpec{});
  py::class_<cascade::Table1Row>(ca, "Table1Row")
      .def_readonly("de_lab", &cascade::Table1Row::de_lab)
      .def_readonly("n_coll", &cascade::Table1Row::n_coll)
      .def_readonly("tau", &cascade::Table1Row::tau)
      .def_readonly("t", &cascade::Table1Row::t);
  ca.def("table1_row", &cascade::table1_row, py::arg("e_quoted"),
         py::arg("b_max"), py::arg("pair"),
         "published-table reading: quoted energy into CM formulas, d = 2 b_max");

  // --- rotation
  auto ro = m.def_submodule("rotation",
                            "rotational excitation over collisions and cycles");
  ro.attr("ADIABATICITY") = rotation::kAdiabaticity;
  ro.def("adiabatic_exponent", &rotation::adiabatic_exponent, py::arg("e_cm"),
         py::arg("mu"), py::arg("b_rot"));
  ro.def("apolar_single_collision", &rotation::apolar_single_collision,
         py::arg("e_cm"), py::arg("b"), py::arg("pair"));
  py::enum_<rotation::FieldAverage>(ro, "FieldAverage")
      .value("exact", rotation::FieldAverage::exact)
      .value("approximate", rotation::FieldAverage::approximate);
  ro.def("apolar_mean_excitation", &rotation::apolar_mean_excitation,
         py::arg("e_cm"), py::arg("pair"), py::arg("d"),
         py::arg("avg") = rotation::FieldAverage::exact);
  ro.def("apolar_cycle_integral", &rotation::apolar_cycle_integral,
         py::arg("e_init"), py::arg("e_final"), py::arg("pair"), py::arg("d"));
  py::class_<rotation::PolarMean>(ro, "PolarMean")
      .def_readonly("value", &rotation::PolarMean::value)
      .def_readonly("high_field_fraction",
                    &rotation::PolarMean::high_field_fraction)
      .def_readonly("low_field_ok", &rotation::PolarMean::low_field_ok);
  ro.def("polar_mean_excitation", &rotation::polar_mean_excitation,
         py::arg("e_cm"), py::arg("pair"), py::arg("b_max"));
  py::class_<rotation::ExcitationInterval>(ro, "ExcitationInterval")
      .def_readonly("e_hi", &rotation::ExcitationInterval::e_hi)
      .def_readonly("e_lo", &rotation::ExcitationInterval::e_lo)
      .def_readonly("eps_hi", &rotation::ExcitationInterval::eps_hi)
      .def_readonly("eps_lo", &rotation::ExcitationInterval::eps_lo)
      .def_readonly("n", &rotation::ExcitationInterval::n)
      .def_readonly("low_field_ok", &rotation::ExcitationInterval::low_field_ok);
  py::class_<rotation::ExcitationResult>(ro, "ExcitationResult")
      .def_readonly("intervals", &rotation::ExcitationResult::intervals)
      .def_readonly("phi_lo", &rotation::ExcitationResult::phi_lo)
      .def_readonly("phi_mean", &rotation::ExcitationResult::phi_mean)
      .def_readonly("phi_hi", &rotation::ExcitationResult::phi_hi)
      .def_readonly("max_eps", &rotation::ExcitationResult::max_eps)
      .def_readonly("eps_small_ok", &rotation::ExcitationResult::eps_small_ok)
      .def_readonly("low_field_ok", &rotation::ExcitationResult::low_field_ok);
  ro.def("default_delta_e", &rotation::default_delta_e);
  ro.def("cycle_excitation", &rotation::cycle_excitation, py::arg("e_init"),
         py::arg("e_final"), py::arg("pair"), py::arg("d"),
         py::arg("delta_e") = rotation::default_delta_e());
  py::class_<rotation::BudgetCrossing>(ro, "BudgetCrossing")
      .def_readonly("e_cm", &rotation::BudgetCrossing::e_cm)
      .def_readonly("e_lab", &rotation::BudgetCrossing::e_lab)
      .def_readonly("reliable", &rotation::BudgetCrossing::reliable);
  ro.def("excitation_budget_inverse", &rotation::excitation_budget_inverse,
         py::arg("pair"), py::arg("scenario"), py::arg("e_final"),
         py::arg("budget"), py::arg("delta_e") = rotation::default_delta_e());

  // --- montecarlo
  auto mc = m.def_submodule("montecarlo", "stochastic collision cascade");
  py::class_<montecarlo::McConfig>(mc, "McConfig")
      .def(py::init<>())
      .def_readwrite("pair", &montecarlo::McConfig::pair)
      .def_readwrite("scenario", &montecarlo::McConfig::scenario)
      .def_readwrite("e_init", &montecarlo::McConfig::e_init)
      .def_readwrite("e_final", &montecarlo::McConfig::e_final)
      .def_readwrite("seed", &montecarlo::McConfig::seed)
      .def_readwrite("n_runs", &montecarlo::McConfig::n_runs)
      .def_readwrite("accumulate_excitation",
                     &montecarlo::McConfig::accumulate_excitation)
      .def_readwrite("record_trace", &montecarlo::McConfig::record_trace)
      .def_readwrite("collision_cap", &montecarlo::McConfig::collision_cap);
  py::class_<montecarlo::TraceStep>(mc, "TraceStep")
      .def_readonly("k", &montecarlo::TraceStep::k)
      .def_readonly("e_cm", &montecarlo::TraceStep::e_cm)
      .def_readonly("b", &montecarlo::TraceStep::b)
      .def_readonly("theta", &montecarlo::TraceStep::theta)
      .def_readonly("de", &montecarlo::TraceStep::de)
      .def_readonly("eps", &montecarlo::TraceStep::eps)
      .def_readonly("t", &montecarlo::TraceStep::t);
  py::class_<montecarlo::RunResult>(mc, "RunResult")
      .def_readonly("n_coll", &montecarlo::RunResult::n_coll)
      .def_readonly("time", &montecarlo::RunResult::time)
      .def_readonly("phi", &montecarlo::RunResult::phi)
      .def_readonly("capped", &montecarlo::RunResult::capped);
  py::class_<montecarlo::Moments>(mc, "Moments")
      .def_readonly("mean", &montecarlo::Moments::mean)
      .def_readonly("se", &montecarlo::Moments::se)
      .def_readonly("se_defined", &montecarlo::Moments::se_defined);
  py::class_<montecarlo::McSummary>(mc, "McSummary")
      .def_readonly("n_coll", &montecarlo::McSummary::n_coll)
      .def_readonly("time", &montecarlo::McSummary::time)
      .def_readonly("phi", &montecarlo::McSummary::phi)
      .def_readonly("n_runs", &montecarlo::McSummary::n_runs)
      .def_readonly("any_capped", &montecarlo::McSummary::any_capped)
      .def_readonly("runs", &montecarlo::McSummary::runs)
      .def_readonly("trace", &montecarlo::McSummary::trace);
  mc.def("run", &montecarlo::run, py::arg("config"),
         py::call_guard<py::gil_scoped_release>());
  py::class_<montecarlo::ConvergenceRow>(mc, "ConvergenceRow")
      .def_readonly("n_runs", &montecarlo::ConvergenceRow::n_runs)
      .def_readonly("n_coll", &montecarlo::ConvergenceRow::n_coll)
      .def_readonly("time", &montecarlo::ConvergenceRow::time)
      .def_readonly("phi", &montecarlo::ConvergenceRow::phi);
  mc.def("convergence_report", &montecarlo::convergence_report,
         py::arg("config"), py::arg("schedule"),
         py::call_guard<py::gil_scoped_release>());

  // --- validation
  auto va = m.def_submodule("validation", "built-in reference checks");
  py::class_<validation::Check>(va, "Check")
      .def_readonly("id", &validation::Check::id)
      .def_readonly("criterion", &validation::Check::criterion)
      .def_readonly("name", &validation::Check::name)
      .def_readonly("target", &validation::Check::target)
      .def_readonly("computed", &validation::Check::computed)
      .def_readonly("tolerance", &validation::Check::tolerance)
      .def_readonly("passed", &validation::Check::pass)
      .def_readonly("note", &validation::Check::note);
  va.def("reference_checks", &validation::reference_checks, py::arg("registry"),
         py::call_guard<py::gil_scoped_release>());
  va.def("invariant_checks", &validation::invariant_checks, py::arg("registry"),
         py::call_guard<py::gil_scoped_release>());
  va.def("all_checks", &validation::all_checks, py::arg("registry"),
         py::call_guard<py::gil_scoped_release>());
}
