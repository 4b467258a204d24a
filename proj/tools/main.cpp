// sympcool command line front end.
//
// Subcommands: cool, excite, mc, sweep, validate, species list. Energies are
// taken in eV with an explicit frame tag, geometry in micrometers, trap
// drive frequency in MHz; the core library runs in atomic units and the CM
// frame, so all mapping happens here. Exit codes: 0 success, 1 validation
// failure, 2 configuration error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sympcool/cascade.hpp"
#include "sympcool/config.hpp"
#include "sympcool/ensemble.hpp"
#include "sympcool/montecarlo.hpp"
#include "sympcool/rotation.hpp"
#include "sympcool/species.hpp"
#include "sympcool/units.hpp"
#include "sympcool/validation.hpp"

namespace fs = std::filesystem;
using namespace sympcool;

namespace {

// Everything a run can configure. Defaults are overlaid by the config file
// ([run] section) and then by command line flags; a flag given on the
// command line always wins over the file.
struct RunCfg {
  std::string config_path;
  std::string species_path;
  std::vector<std::string> sets;
  std::string out;
  std::string trace;
  std::uint64_t seed = 1;
  std::string frame = "cm";
  std::string convention = "strict";
  bool quiet = false;

  std::string mol = "MgH+";
  std::string atom = "Mg+";
  std::string scenario = "cc";
  double d_um = 5.29;
  double omega_mhz = 1.0;
  double b_max_um = 0;  // 0: use the scenario geometry (d for table1 rows)
  double e_init_ev = 2.0;
  double e_final_ev = std::numeric_limits<double>::quiet_NaN();
  int grid_n = 512;
  std::string grid_rule = "geometric";
  std::string mode = "sum";
  double budget = 0;  // 0: no budget inversion requested
  double delta_e_ev = 0.05;
  int n_runs = 100;
  long long cap = 1'000'000'000;
  double from_ev = 0.5;
  double to_ev = 3.0;
  int points = 26;
};

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Output files appear atomically: the content lands in a sibling temp file
// that is renamed over the target.
void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Species file lookup order: flag, SYMPCOOL_SPECIES, ./data/species.ini,
// then relative to the executable.
std::string find_species_file(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SYMPCOOL_SPECIES"); env && *env) return env;
  if (fs::exists("data/species.ini")) return "data/species.ini";
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const fs::path dir = exe.parent_path();
    for (const fs::path& cand :
         {dir / "data/species.ini", dir.parent_path() / "data/species.ini"}) {
      if (fs::exists(cand)) return cand.string();
    }
  }
  throw std::runtime_error(
      "no species file found; pass --species, set SYMPCOOL_SPECIES, or run "
      "from a directory containing data/species.ini");
}

species::Registry load_registry(const RunCfg& cfg) {
  species::Registry reg;
  reg.load_file(find_species_file(cfg.species_path));
  for (const auto& s : cfg.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects species.<name>.<key>=<value>, got '" + s + "'");
    reg.apply_override(trimmed(s.substr(0, eq)), trimmed(s.substr(eq + 1)));
  }
  return reg;
}

// Registration record tying a config file key to its CLI options (so the file
// only fills in what the command line left unset) and to a setter. Shared keys
// register one option per subcommand; the flag wins if any of them was given.
struct KeyBinding {
  std::vector<CLI::Option*> opts;
  std::function<void(const config::Entry&)> apply;

  bool flag_given() const {
    for (const auto* o : opts)
      if (o && o->count() > 0) return true;
    return false;
  }
};

using Bindings = std::map<std::string, KeyBinding>;

template <typename Setter>
void bind_key(Bindings& b, const std::string& key, CLI::Option* opt, Setter&& set) {
  auto& kb = b[key];
  kb.opts.push_back(opt);
  if (!kb.apply) kb.apply = std::forward<Setter>(set);
}

void bind_double(Bindings& b, const std::string& key, CLI::Option* opt, double& ref) {
  bind_key(b, key, opt, [&ref](const config::Entry& e) { ref = config::to_double(e); });
}
void bind_int(Bindings& b, const std::string& key, CLI::Option* opt, int& ref) {
  bind_key(b, key, opt,
           [&ref](const config::Entry& e) { ref = static_cast<int>(config::to_long(e)); });
}
void bind_ll(Bindings& b, const std::string& key, CLI::Option* opt, long long& ref) {
  bind_key(b, key, opt, [&ref](const config::Entry& e) { ref = config::to_long(e); });
}
void bind_string(Bindings& b, const std::string& key, CLI::Option* opt, std::string& ref) {
  bind_key(b, key, opt, [&ref](const config::Entry& e) { ref = e.value; });
}

void overlay_config(const RunCfg& cfg, Bindings& bindings, std::vector<std::string>& sets,
                    CLI::Option* set_opt) {
  if (cfg.config_path.empty()) return;
  const auto entries = config::parse_file(cfg.config_path);
  for (const auto& e : entries) {
    if (e.section != "run")
      throw config::ParseError("run config entries belong in a [run] section", e.line);
    if (e.key == "set") {
      // file overrides accumulate with command line ones
      (void)set_opt;
      sets.push_back(e.value);
      continue;
    }
    const auto it = bindings.find(e.key);
    if (it == bindings.end())
      throw config::ParseError("unknown run key '" + e.key + "'", e.line);
    if (it->second.flag_given()) continue;  // flag wins
    it->second.apply(e);
  }
}

void require_choice(const std::string& what, const std::string& value,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (value == a) return;
  std::string msg = what + " must be one of {";
  bool first = true;
  for (const char* a : allowed) {
    if (!first) msg += ", ";
    msg += a;
    first = false;
  }
  msg += "}, got '" + value + "'";
  throw std::invalid_argument(msg);
}

void validate_choices(const RunCfg& cfg) {
  require_choice("--frame", cfg.frame, {"cm", "lab"});
  require_choice("--convention", cfg.convention, {"strict", "table1", "lab-as-paper"});
  require_choice("--scenario", cfg.scenario, {"cc", "sa"});
  require_choice("--grid-rule", cfg.grid_rule, {"uniform", "geometric"});
  require_choice("--mode", cfg.mode, {"sum", "integral"});
}

// User energy in eV to the value handed to the CM frame core. strict honors
// the frame tag; the quoted-value conventions insert the number directly,
// reproducing how the reference results were stated.
double core_energy(double e_ev, const RunCfg& cfg, const species::SpeciesPair& pr) {
  const double h = units::ev_to_hartree(e_ev);
  if (cfg.convention == "strict" && cfg.frame == "lab") return pr.cm_from_lab(h);
  return h;
}

double resolve_e_final_ev(RunCfg& cfg, double fallback_ev) {
  double v = std::isnan(cfg.e_final_ev) ? fallback_ev : cfg.e_final_ev;
  if (v <= 0) {
    std::cerr << "notice: final energy " << v << " eV raised to 1e-4 eV\n";
    v = 1e-4;
  }
  return v;
}

ensemble::CoolingScenario make_scenario(const RunCfg& cfg) {
  if (cfg.scenario == "sa")
    return ensemble::CoolingScenario::single_atom(units::trap_omega_au(cfg.omega_mhz));
  return ensemble::CoolingScenario::crystal(units::um_to_bohr(cfg.d_um));
}

cascade::GridSpec make_grid(const RunCfg& cfg) {
  return {cfg.grid_n, cfg.grid_rule == "uniform" ? cascade::GridRule::uniform
                                                 : cascade::GridRule::geometric};
}

void emit(const RunCfg& cfg, const std::string& csv) {
  if (cfg.out.empty()) {
    std::cout << csv;
    return;
  }
  write_file_atomic(cfg.out, csv);
  if (!cfg.quiet) std::cout << "wrote " << cfg.out << "\n";
}

void info(const RunCfg& cfg, const std::string& line) {
  if (!cfg.quiet) std::cout << line << "\n";
}

std::string describe_pair(const species::SpeciesPair& pr) {
  std::ostringstream os;
  os << pr.mol.name << " cooled by " << pr.at.name << " (mass ratio "
     << fmt9(pr.xi) << ")";
  return os.str();
}

int cmd_cool(RunCfg& cfg, const species::Registry& reg) {
  const auto pr = species::make_pair(reg.get(cfg.mol), reg.get(cfg.atom));
  const double e_final_ev = resolve_e_final_ev(cfg, 0.01);

  if (cfg.convention == "table1") {
    // single interval estimate in that table's own reading: the geometry
    // value acts as the impact cutoff and the quoted energy goes into the
    // formulas unconverted
    const double b_max = units::um_to_bohr(cfg.b_max_um > 0 ? cfg.b_max_um : cfg.d_um);
    const auto row = cascade::table1_row(units::ev_to_hartree(cfg.e_init_ev), b_max, pr);
    info(cfg, describe_pair(pr));
    info(cfg, "convention table1: quoted energy inserted directly, cutoff " +
                  fmt9(units::bohr_to_um(b_max)) + " um");
    info(cfg, "mean_lab_loss_eV  " + fmt9(units::hartree_to_ev(row.de_lab)));
    info(cfg, "n_coll            " + fmt9(row.n_coll));
    info(cfg, "tau_ms            " + fmt9(units::atomic_to_ms(row.tau)));
    info(cfg, "t_ms              " + fmt9(units::atomic_to_ms(row.t)));
    if (!cfg.out.empty()) {
      std::string csv = "E_quoted_eV,dE_lab_eV,n_coll,tau_ms,t_ms\n";
      csv += fmt9(cfg.e_init_ev) + "," + fmt9(units::hartree_to_ev(row.de_lab)) + "," +
             fmt9(row.n_coll) + "," + fmt9(units::atomic_to_ms(row.tau)) + "," +
             fmt9(units::atomic_to_ms(row.t)) + "\n";
      write_file_atomic(cfg.out, csv);
      if (!cfg.quiet) std::cout << "wrote " << cfg.out << "\n";
    }
    return 0;
  }

  const auto scen = make_scenario(cfg);
  const double e0 = core_energy(cfg.e_init_ev, cfg, pr);
  const double e1 = core_energy(e_final_ev, cfg, pr);
  const auto mode = cfg.mode == "integral" ? cascade::TimeMode::integral
                                           : cascade::TimeMode::grid_sum;
  const auto res = cascade::total_cooling_time(e0, e1, pr, scen, make_grid(cfg), mode);

  info(cfg, describe_pair(pr));
  info(cfg, cfg.scenario == "sa"
                ? "scenario single atom, drive " + fmt9(cfg.omega_mhz) + " MHz"
                : "scenario crystal, spacing " + fmt9(cfg.d_um) + " um");
  info(cfg, "energies " + fmt9(cfg.e_init_ev) + " -> " + fmt9(e_final_ev) + " eV (" +
                cfg.frame + ", " + cfg.convention + ")");
  info(cfg, "n_coll " + fmt9(res.n_total) + (res.lower_bound ? "  (lower bound)" : ""));
  info(cfg, "t_ms   " + fmt9(units::atomic_to_ms(res.time_total)) +
                (res.lower_bound ? "  (lower bound)" : ""));

  if (!cfg.out.empty()) {
    std::string csv = "E_hi_cm_eV,E_lo_cm_eV,dE_mean_eV,n_coll,tau_ms,t_ms\n";
    for (const auto& iv : res.intervals) {
      csv += fmt9(units::hartree_to_ev(iv.e_hi)) + "," +
             fmt9(units::hartree_to_ev(iv.e_lo)) + "," +
             fmt9(units::hartree_to_ev(iv.de_mean)) + "," + fmt9(iv.n) + "," +
             fmt9(units::atomic_to_ms(iv.tau)) + "," +
             fmt9(units::atomic_to_ms(iv.t)) + "\n";
    }
    write_file_atomic(cfg.out, csv);
    if (!cfg.quiet) std::cout << "wrote " << cfg.out << "\n";
  }
  return 0;
}

int cmd_excite(RunCfg& cfg, const species::Registry& reg) {
  if (cfg.convention == "table1")
    throw std::invalid_argument("convention table1 applies to 'cool' only");
  const auto pr = species::make_pair(reg.get(cfg.mol), reg.get(cfg.atom));
  if (!pr.mol.is_molecule())
    throw std::invalid_argument("excitation needs a molecular ion, got atom '" +
                                pr.mol.name + "'");
  if (cfg.scenario != "cc")
    throw std::invalid_argument("excitation sweeps run in the crystal scenario");
  const double e_final_ev = resolve_e_final_ev(cfg, 0.1);
  const double e_final = core_energy(e_final_ev, cfg, pr);
  const double d = units::um_to_bohr(cfg.d_um);
  const double delta_e = units::ev_to_hartree(cfg.delta_e_ev);
  if (cfg.points < 1) throw std::invalid_argument("--points must be >= 1");

  std::string csv = "E_cm_eV,E_lab_eV,phi_mean,phi_lo,phi_hi,reliability_flag\n";
  bool any_unreliable = false;
  for (int i = 0; i < cfg.points; ++i) {
    const double e_ev =
        cfg.points == 1
            ? cfg.from_ev
            : cfg.from_ev + i * (cfg.to_ev - cfg.from_ev) / (cfg.points - 1);
    const double e0 = core_energy(e_ev, cfg, pr);
    if (e0 <= e_final) continue;
    const auto res = rotation::cycle_excitation(e0, e_final, pr, d, delta_e);
    const bool ok = res.eps_small_ok && res.low_field_ok;
    any_unreliable = any_unreliable || !ok;
    csv += fmt9(units::hartree_to_ev(e0)) + "," +
           fmt9(units::hartree_to_ev(pr.lab_from_cm(e0))) + "," + fmt9(res.phi_mean) +
           "," + fmt9(res.phi_lo) + "," + fmt9(res.phi_hi) + "," +
           (ok ? "ok" : "unreliable") + "\n";
  }
  emit(cfg, csv);
  if (any_unreliable)
    std::cerr << "warning: some rows fall outside the model's trusted regime "
                 "(marked unreliable)\n";

  if (cfg.budget > 0) {
    const auto scen = ensemble::CoolingScenario::crystal(d);
    try {
      const auto cross =
          rotation::excitation_budget_inverse(pr, scen, e_final, cfg.budget, delta_e);
      info(cfg, "budget " + fmt9(cfg.budget) + " crossing: E_cm " +
                    fmt9(units::hartree_to_ev(cross.e_cm)) + " eV, E_lab " +
                    fmt9(units::hartree_to_ev(cross.e_lab)) + " eV" +
                    (cross.reliable ? "" : "  (unreliable)"));
    } catch (const numerics::BracketError&) {
      std::cerr << "warning: excitation stays below the budget for every "
                   "bracketable start energy\n";
    }
  }
  return 0;
}

int cmd_mc(RunCfg& cfg, const species::Registry& reg) {
  if (cfg.convention != "strict")
    throw std::invalid_argument("mc supports only the strict convention");
  const auto pr = species::make_pair(reg.get(cfg.mol), reg.get(cfg.atom));
  const double e_final_ev = resolve_e_final_ev(cfg, 0.01);

  montecarlo::McConfig mc;
  mc.pair = pr;
  mc.scenario = make_scenario(cfg);
  mc.e_init = core_energy(cfg.e_init_ev, cfg, pr);
  mc.e_final = core_energy(e_final_ev, cfg, pr);
  mc.seed = cfg.seed;
  mc.n_runs = cfg.n_runs;
  mc.accumulate_excitation = pr.mol.polarity == species::Polarity::apolar;
  mc.record_trace = !cfg.trace.empty();
  mc.collision_cap = cfg.cap;

  const auto sum = montecarlo::run(mc);

  info(cfg, describe_pair(pr));
  info(cfg, "runs    " + std::to_string(sum.n_runs) + "  seed " + std::to_string(cfg.seed));
  auto stat = [&](const char* label, const montecarlo::Moments& m, double scale) {
    std::string line = std::string(label) + " " + fmt9(m.mean * scale);
    if (m.se_defined) line += "  se " + fmt9(m.se * scale);
    info(cfg, line);
  };
  stat("n_coll ", sum.n_coll, 1.0);
  stat("t_ms   ", sum.time, units::kAtomicTimeSecond * 1e3);
  if (mc.accumulate_excitation) stat("phi    ", sum.phi, 1.0);
  if (sum.any_capped)
    std::cerr << "warning: some runs hit the collision cap; results are partial\n";

  if (!cfg.out.empty()) {
    std::string csv = "run,n_coll,t_ms,phi,capped\n";
    for (std::size_t i = 0; i < sum.runs.size(); ++i) {
      const auto& r = sum.runs[i];
      csv += std::to_string(i) + "," + std::to_string(r.n_coll) + "," +
             fmt9(units::atomic_to_ms(r.time)) + "," + fmt9(r.phi) + "," +
             (r.capped ? "1" : "0") + "\n";
    }
    write_file_atomic(cfg.out, csv);
    if (!cfg.quiet) std::cout << "wrote " << cfg.out << "\n";
  }
  if (!cfg.trace.empty()) {
    std::string csv = "k,E_cm_eV,b_um,theta_rad,dE_eV,eps,t_ms\n";
    for (const auto& s : sum.trace) {
      csv += std::to_string(s.k) + "," + fmt9(units::hartree_to_ev(s.e_cm)) + "," +
             fmt9(units::bohr_to_um(s.b)) + "," + fmt9(s.theta) + "," +
             fmt9(units::hartree_to_ev(s.de)) + "," + fmt9(s.eps) + "," +
             fmt9(units::atomic_to_ms(s.t)) + "\n";
    }
    write_file_atomic(cfg.trace, csv);
    if (!cfg.quiet) std::cout << "wrote " << cfg.trace << "\n";
  }
  return 0;
}

int cmd_sweep(RunCfg& cfg, const species::Registry& reg) {
  if (cfg.convention == "table1")
    throw std::invalid_argument("convention table1 applies to 'cool' only");
  const auto pr = species::make_pair(reg.get(cfg.mol), reg.get(cfg.atom));
  const auto scen = make_scenario(cfg);
  const double e_final_ev = resolve_e_final_ev(cfg, 0.01);
  const double e_final = core_energy(e_final_ev, cfg, pr);
  const auto mode = cfg.mode == "integral" ? cascade::TimeMode::integral
                                           : cascade::TimeMode::grid_sum;
  if (cfg.points < 1) throw std::invalid_argument("--points must be >= 1");

  std::string csv = "E_cm_eV,E_lab_eV,n_coll,t_ms\n";
  for (int i = 0; i < cfg.points; ++i) {
    const double e_ev =
        cfg.points == 1
            ? cfg.from_ev
            : cfg.from_ev + i * (cfg.to_ev - cfg.from_ev) / (cfg.points - 1);
    const double e0 = core_energy(e_ev, cfg, pr);
    if (e0 <= e_final) continue;
    const auto res = cascade::total_cooling_time(e0, e_final, pr, scen, make_grid(cfg), mode);
    csv += fmt9(units::hartree_to_ev(e0)) + "," +
           fmt9(units::hartree_to_ev(pr.lab_from_cm(e0))) + "," + fmt9(res.n_total) +
           "," + fmt9(units::atomic_to_ms(res.time_total)) + "\n";
  }
  emit(cfg, csv);
  if (cfg.scenario == "sa")
    std::cerr << "note: single atom counts and times are lower bounds\n";
  return 0;
}

int cmd_validate(RunCfg& cfg, const species::Registry& reg) {
  const auto checks = validation::all_checks(reg);
  int failed = 0;
  std::printf("%-22s %-14s %-14s %-34s %-7s %s\n", "check", "target", "computed",
              "tolerance", "verdict", "name");
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    std::string name = c.name;
    if (!c.note.empty()) name += "  [" + c.note + "]";
    std::printf("%-22s %-14.6g %-14.6g %-34s %-7s %s\n", c.id.c_str(), c.target,
                c.computed, c.tolerance.c_str(), c.pass ? "PASS" : "FAIL",
                name.c_str());
  }
  std::printf("%zu checks, %d failed\n", checks.size(), failed);

  if (!cfg.out.empty()) {
    std::string csv = "id,criterion,name,target,computed,tolerance,verdict,note\n";
    for (const auto& c : checks) {
      csv += csv_quote(c.id) + "," + std::to_string(c.criterion) + "," +
             csv_quote(c.name) + "," + fmt9(c.target) + "," + fmt9(c.computed) + "," +
             csv_quote(c.tolerance) + "," + (c.pass ? "PASS" : "FAIL") + "," +
             csv_quote(c.note) + "\n";
    }
    write_file_atomic(cfg.out, csv);
    if (!cfg.quiet) std::cout << "wrote " << cfg.out << "\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_species_list(const species::Registry& reg) {
  std::printf("%-8s %-10s %-7s %-8s %-12s %-10s %s\n", "name", "mass_amu", "charge",
              "polarity", "B_invcm", "QZ_au", "D_au");
  for (const auto& name : reg.names()) {
    const auto& s = reg.get(name);
    std::string b = s.is_molecule()
                        ? fmt9(s.rot_const * units::kHartreeInvCm)
                        : std::string("-");
    std::string qz = s.polarity == species::Polarity::apolar ? fmt9(s.quadrupole)
                                                             : std::string("-");
    std::string dm = s.polarity == species::Polarity::polar ? fmt9(s.dipole)
                                                            : std::string("-");
    std::printf("%-8s %-10.6g %-7d %-8s %-12s %-10s %s\n", s.name.c_str(),
                s.mass / units::kAmuMe, s.charge,
                std::string(species::polarity_name(s.polarity)).c_str(), b.c_str(),
                qz.c_str(), dm.c_str());
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  RunCfg cfg;
  Bindings bindings;

  CLI::App app{"Sympathetic cooling of trapped molecular ions: cooling times, "
               "collision counts, and accumulated rotational excitation"};
  app.require_subcommand(1);

  auto* o_config = app.add_option("--config", cfg.config_path,
                                  "run configuration file ([run] section, key = value)");
  auto* o_species = app.add_option("--species", cfg.species_path, "species registry file");
  auto* o_set = app.add_option("--set", cfg.sets,
                               "registry override, species.<name>.<key>=<value>");
  auto* o_out = app.add_option("--out", cfg.out, "CSV output path (atomic write)");
  auto* o_seed = app.add_option("--seed", cfg.seed, "random seed");
  auto* o_frame = app.add_option("--frame", cfg.frame, "energy frame tag: cm or lab");
  auto* o_conv = app.add_option("--convention", cfg.convention,
                                "strict, table1, or lab-as-paper");
  app.add_flag("--quiet", cfg.quiet, "suppress informational stdout");

  bind_string(bindings, "config", o_config, cfg.config_path);
  bind_string(bindings, "species_file", o_species, cfg.species_path);
  bind_string(bindings, "out", o_out, cfg.out);
  bind_key(bindings, "seed", o_seed, [&cfg](const config::Entry& e) {
    cfg.seed = static_cast<std::uint64_t>(config::to_long(e));
  });
  bind_string(bindings, "frame", o_frame, cfg.frame);
  bind_string(bindings, "convention", o_conv, cfg.convention);

  auto add_pair = [&](CLI::App* cmd) {
    bind_string(bindings, "mol",
                cmd->add_option("--mol", cfg.mol, "molecular ion name"), cfg.mol);
    bind_string(bindings, "atom",
                cmd->add_option("--atom", cfg.atom, "coolant ion name"), cfg.atom);
  };
  auto add_scenario = [&](CLI::App* cmd) {
    bind_string(bindings, "scenario",
                cmd->add_option("--scenario", cfg.scenario,
                                "cc (crystal) or sa (single atom)"),
                cfg.scenario);
    bind_double(bindings, "d_um",
                cmd->add_option("--d-um", cfg.d_um, "crystal ion spacing, um"),
                cfg.d_um);
    bind_double(bindings, "omega_mhz",
                cmd->add_option("--omega-mhz", cfg.omega_mhz,
                                "trap drive frequency, MHz (single atom)"),
                cfg.omega_mhz);
  };
  auto add_energies = [&](CLI::App* cmd) {
    bind_double(bindings, "e_init_ev",
                cmd->add_option("--e-init-ev", cfg.e_init_ev, "start energy, eV"),
                cfg.e_init_ev);
    bind_double(bindings, "e_final_ev",
                cmd->add_option("--e-final-ev", cfg.e_final_ev,
                                "end energy, eV (default 0.01; excite 0.1)"),
                cfg.e_final_ev);
  };
  auto add_grid = [&](CLI::App* cmd) {
    bind_int(bindings, "grid_n",
             cmd->add_option("--grid-n", cfg.grid_n, "energy grid intervals"),
             cfg.grid_n);
    bind_string(bindings, "grid_rule",
                cmd->add_option("--grid-rule", cfg.grid_rule, "uniform or geometric"),
                cfg.grid_rule);
    bind_string(bindings, "mode",
                cmd->add_option("--mode", cfg.mode,
                                "time accumulation: sum or integral"),
                cfg.mode);
  };
  auto add_sweep_range = [&](CLI::App* cmd) {
    bind_double(bindings, "sweep_from_ev",
                cmd->add_option("--from-ev", cfg.from_ev, "sweep start, eV"),
                cfg.from_ev);
    bind_double(bindings, "sweep_to_ev",
                cmd->add_option("--to-ev", cfg.to_ev, "sweep end, eV"), cfg.to_ev);
    bind_int(bindings, "sweep_points",
             cmd->add_option("--points", cfg.points, "sweep point count"),
             cfg.points);
  };

  auto* cool = app.add_subcommand("cool", "cooling cascade: collision count and time");
  cool->fallthrough();
  add_pair(cool);
  add_scenario(cool);
  add_energies(cool);
  add_grid(cool);
  bind_double(bindings, "b_max_um",
              cool->add_option("--b-max-um", cfg.b_max_um,
                               "impact cutoff for convention table1, um"),
              cfg.b_max_um);

  auto* excite = app.add_subcommand(
      "excite", "rotational excitation accumulated over a cooling cycle");
  excite->fallthrough();
  add_pair(excite);
  add_scenario(excite);
  add_energies(excite);
  add_sweep_range(excite);
  bind_double(bindings, "delta_e_ev",
              excite->add_option("--delta-e-ev", cfg.delta_e_ev,
                                 "cycle sum interval width, eV"),
              cfg.delta_e_ev);
  bind_double(bindings, "budget",
              excite->add_option("--budget", cfg.budget,
                                 "report the start energy whose cycle meets this "
                                 "excitation budget"),
              cfg.budget);

  auto* mc = app.add_subcommand("mc", "Monte Carlo collision cascade");
  mc->fallthrough();
  add_pair(mc);
  add_scenario(mc);
  add_energies(mc);
  bind_int(bindings, "n_runs",
           mc->add_option("--n-runs", cfg.n_runs, "ensemble size"), cfg.n_runs);
  bind_ll(bindings, "cap",
          mc->add_option("--cap", cfg.cap, "per-run collision cap"), cfg.cap);
  bind_string(bindings, "trace",
              mc->add_option("--trace", cfg.trace, "per-collision trace CSV path"),
              cfg.trace);

  auto* sweep = app.add_subcommand("sweep", "cooling results over a start energy range");
  sweep->fallthrough();
  add_pair(sweep);
  add_scenario(sweep);
  add_energies(sweep);
  add_grid(sweep);
  add_sweep_range(sweep);

  auto* validate = app.add_subcommand(
      "validate", "check computed values against published reference numbers");
  validate->fallthrough();

  auto* species_cmd = app.add_subcommand("species", "species registry inspection");
  species_cmd->fallthrough();
  species_cmd->require_subcommand(1);
  auto* species_list = species_cmd->add_subcommand("list", "print the registry");
  species_list->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    overlay_config(cfg, bindings, cfg.sets, o_set);
    validate_choices(cfg);
    const auto reg = load_registry(cfg);
    if (cool->parsed()) return cmd_cool(cfg, reg);
    if (excite->parsed()) return cmd_excite(cfg, reg);
    if (mc->parsed()) return cmd_mc(cfg, reg);
    if (sweep->parsed()) return cmd_sweep(cfg, reg);
    if (validate->parsed()) return cmd_validate(cfg, reg);
    if (species_cmd->parsed() && species_list->parsed()) return cmd_species_list(reg);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
