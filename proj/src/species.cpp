#include "sympcool/species.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sympcool/config.hpp"
#include "sympcool/units.hpp"

namespace sympcool::species {
namespace {

constexpr std::string_view kSectionPrefix = "species.";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One registry section -> Species. Tracks which keys appeared so that
// polarity cross checks can name the offending line.
Species from_entries(const std::string& name,
                     const std::vector<config::Entry>& entries) {
  Species s;
  s.name = name;
  bool has_mass = false, has_b = false, has_q = false, has_d = false;
  int section_line = 0;
  for (const auto& e : entries) {
    section_line = section_line ? section_line : e.line;
    if (e.key == "mass_amu") {
      s.mass = units::amu_to_me(config::to_double(e));
      has_mass = true;
    } else if (e.key == "mass_me") {
      s.mass = config::to_double(e);
      has_mass = true;
    } else if (e.key == "charge") {
      s.charge = static_cast<int>(config::to_long(e));
    } else if (e.key == "polarity") {
      try {
        s.polarity = parse_polarity(e.value);
      } catch (const std::invalid_argument& ex) {
        throw config::ParseError(ex.what(), e.line);
      }
    } else if (e.key == "B_invcm") {
      if (has_b) throw config::ParseError("duplicate rotational constant", e.line);
      s.rot_const = units::invcm_to_hartree(config::to_double(e));
      has_b = true;
    } else if (e.key == "B_hartree") {
      if (has_b) throw config::ParseError("duplicate rotational constant", e.line);
      s.rot_const = config::to_double(e);
      has_b = true;
    } else if (e.key == "QZ_au") {
      s.quadrupole = config::to_double(e);
      has_q = true;
    } else if (e.key == "D_au") {
      s.dipole = config::to_double(e);
      has_d = true;
    } else {
      throw config::ParseError("unknown species key '" + e.key + "'", e.line);
    }
  }
  if (!has_mass)
    throw config::ParseError("species '" + name + "': missing mass_amu", section_line);
  try {
    s.validate();
  } catch (const std::invalid_argument& ex) {
    throw config::ParseError(ex.what(), section_line);
  }
  if (s.polarity == Polarity::apolar && !has_q)
    throw config::ParseError("apolar species '" + name + "': missing QZ_au", section_line);
  if (s.polarity == Polarity::polar && !has_d)
    throw config::ParseError("polar species '" + name + "': missing D_au", section_line);
  if (s.polarity != Polarity::apolar && has_q)
    throw config::ParseError("species '" + name + "': QZ_au only applies to apolar molecules", section_line);
  if (s.polarity != Polarity::polar && has_d)
    throw config::ParseError("species '" + name + "': D_au only applies to polar molecules", section_line);
  if (s.polarity == Polarity::atom && has_b)
    throw config::ParseError("species '" + name + "': atoms take no rotational constant", section_line);
  return s;
}

} // namespace

std::string_view polarity_name(Polarity p) {
  switch (p) {
    case Polarity::atom: return "atom";
    case Polarity::apolar: return "apolar";
    case Polarity::polar: return "polar";
  }
  return "?";
}

Polarity parse_polarity(std::string_view name) {
  if (name == "atom") return Polarity::atom;
  if (name == "apolar") return Polarity::apolar;
  if (name == "polar") return Polarity::polar;
  throw std::invalid_argument("unknown polarity '" + std::string(name) +
                              "' (expected atom, apolar or polar)");
}

void Species::validate() const {
  if (name.empty()) throw std::invalid_argument("species without a name");
  if (!(mass > 0))
    throw std::invalid_argument("species '" + name + "': mass must be positive");
  if (charge < 1)
    throw std::invalid_argument("species '" + name + "': charge must be a positive integer");
  if (is_molecule() && !(rot_const > 0))
    throw std::invalid_argument("species '" + name + "': molecule needs a rotational constant");
  if (polarity == Polarity::apolar && quadrupole == 0)
    throw std::invalid_argument("species '" + name + "': apolar molecule needs QZ_au");
  if (polarity == Polarity::polar && !(dipole > 0))
    throw std::invalid_argument("species '" + name + "': polar molecule needs D_au > 0");
  if (polarity != Polarity::apolar && quadrupole != 0)
    throw std::invalid_argument("species '" + name + "': quadrupole set on a non-apolar species");
  if (polarity != Polarity::polar && dipole != 0)
    throw std::invalid_argument("species '" + name + "': dipole set on a non-polar species");
}

SpeciesPair make_pair(const Species& mol, const Species& at) {
  mol.validate();
  at.validate();
  SpeciesPair p;
  p.mol = mol;
  p.at = at;
  p.xi = mol.mass / at.mass;
  p.mu = mol.mass * at.mass / (mol.mass + at.mass);
  p.q_prod = static_cast<double>(mol.charge) * static_cast<double>(at.charge);
  return p;
}

void Registry::load_file(const std::string& path) {
  const auto entries = config::parse_file(path);
  std::map<std::string, std::vector<config::Entry>> by_section;
  std::vector<std::string> order;
  for (const auto& e : entries) {
    if (e.section.rfind(kSectionPrefix, 0) != 0)
      throw config::ParseError("entry outside a [species.*] section", e.line);
    if (!by_section.count(e.section)) order.push_back(e.section);
    by_section[e.section].push_back(e);
  }
  for (const auto& sec : order) {
    const std::string name = sec.substr(kSectionPrefix.size());
    if (name.empty())
      throw config::ParseError("species section without a name", by_section[sec].front().line);
    if (species_.count(name))
      throw config::ParseError("duplicate species '" + name + "'", by_section[sec].front().line);
    species_.emplace(name, from_entries(name, by_section[sec]));
  }
}

void Registry::load_text(const std::string& text) {
  std::istringstream in(text);
  const auto entries = config::parse(in);
  std::map<std::string, std::vector<config::Entry>> by_section;
  for (const auto& e : entries) {
    if (e.section.rfind(kSectionPrefix, 0) != 0)
      throw config::ParseError("entry outside a [species.*] section", e.line);
    by_section[e.section].push_back(e);
  }
  for (const auto& [sec, es] : by_section) {
    const std::string name = sec.substr(kSectionPrefix.size());
    if (species_.count(name))
      throw config::ParseError("duplicate species '" + name + "'", es.front().line);
    species_.emplace(name, from_entries(name, es));
  }
}

std::string Registry::save_text() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, s] : species_) {
    if (!first) out << "\n";
    first = false;
    out << "[species." << name << "]\n";
    out << "mass_me = " << fmt_double(s.mass) << "\n";
    out << "charge = " << s.charge << "\n";
    out << "polarity = " << polarity_name(s.polarity) << "\n";
    if (s.is_molecule()) out << "B_hartree = " << fmt_double(s.rot_const) << "\n";
    if (s.polarity == Polarity::apolar) out << "QZ_au = " << fmt_double(s.quadrupole) << "\n";
    if (s.polarity == Polarity::polar) out << "D_au = " << fmt_double(s.dipole) << "\n";
  }
  return out.str();
}

void Registry::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << save_text();
}

const Species& Registry::get(const std::string& name) const {
  const auto it = species_.find(name);
  if (it == species_.end()) {
    std::string msg = "unknown species '" + name + "'; known:";
    for (const auto& [n, s] : species_) msg += " " + n;
    throw std::invalid_argument(msg);
  }
  return it->second;
}

bool Registry::contains(const std::string& name) const {
  return species_.count(name) != 0;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  out.reserve(species_.size());
  for (const auto& [n, s] : species_) out.push_back(n);
  return out;
}

void Registry::insert(const Species& s) {
  s.validate();
  species_[s.name] = s;
}

void Registry::apply_override(const std::string& dotted_key, const std::string& value) {
  // species.<name>.<key>
  if (dotted_key.rfind(kSectionPrefix, 0) != 0)
    throw std::invalid_argument("override must start with 'species.': " + dotted_key);
  const auto rest = dotted_key.substr(kSectionPrefix.size());
  const auto dot = rest.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == rest.size())
    throw std::invalid_argument("override must look like species.<name>.<key>: " + dotted_key);
  const std::string name = rest.substr(0, dot);
  const std::string key = rest.substr(dot + 1);
  Species s = get(name);

  config::Entry e{"", key, value, 0};
  if (key == "mass_amu") s.mass = units::amu_to_me(config::to_double(e));
  else if (key == "charge") s.charge = static_cast<int>(config::to_long(e));
  else if (key == "B_invcm") s.rot_const = units::invcm_to_hartree(config::to_double(e));
  else if (key == "B_hartree") s.rot_const = config::to_double(e);
  else if (key == "QZ_au") s.quadrupole = config::to_double(e);
  else if (key == "D_au") s.dipole = config::to_double(e);
  else if (key == "polarity") s.polarity = parse_polarity(value);
  else throw std::invalid_argument("unknown species key '" + key + "' in override");
  s.validate();
  species_[name] = s;
}

} // namespace sympcool::species
