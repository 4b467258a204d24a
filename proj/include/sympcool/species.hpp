#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Species data and pair bookkeeping. Molecular constants (rotational
// constant, quadrupole or dipole moment) come from a registry file, not from
// code; they are inputs to the model, editable per run.
namespace sympcool::species {

enum class Polarity { atom, apolar, polar };

std::string_view polarity_name(Polarity p);
Polarity parse_polarity(std::string_view name);

struct Species {
  std::string name;
  double mass = 0;       // m_e
  int charge = 0;        // units of e, >= 1 (everything here is an ion)
  Polarity polarity = Polarity::atom;
  double rot_const = 0;  // hartree; > 0 for molecules
  double quadrupole = 0; // e*a0^2, along the molecular axis; apolar only
  double dipole = 0;     // e*a0; polar only

  bool is_molecule() const { return polarity != Polarity::atom; }

  // Throws std::invalid_argument when a constraint is violated (mass or
  // charge missing, molecule without rotational constant, moment that does
  // not match the declared polarity).
  void validate() const;
};

struct SpeciesPair {
  Species mol; // the sympathetically cooled ion
  Species at;  // the laser-cooled ion
  double xi = 0;     // mass ratio mol/at
  double mu = 0;     // reduced mass, m_e
  double q_prod = 0; // charge product q_mol * q_at

  double lab_from_cm(double e) const { return e * (1.0 + xi); }
  double cm_from_lab(double e) const { return e / (1.0 + xi); }
};

// Builds the pair and derived quantities. Both species must have validated;
// either slot accepts atoms or molecules (rotation entry points enforce
// polarity where it matters).
SpeciesPair make_pair(const Species& mol, const Species& at);

// Registry file format:
//   [species.<name>]
//   mass_amu = 25
//   charge = 1
//   polarity = polar | apolar | atom
//   B_invcm = 6.387        (or B_hartree; molecules only, exactly one)
//   QZ_au = 2.4            (apolar only)
//   D_au = 1.42            (polar only)
class Registry {
 public:
  void load_file(const std::string& path);
  void load_text(const std::string& text);
  void save_file(const std::string& path) const;
  std::string save_text() const;

  const Species& get(const std::string& name) const; // throws with known names listed
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;
  void insert(const Species& s); // validates; replaces an existing entry

  // Applies "species.<name>.<key> = value" style overrides, e.g.
  // ("species.N2+.B_invcm", "1.9224"). Throws on unknown species or key.
  void apply_override(const std::string& dotted_key, const std::string& value);

 private:
  std::map<std::string, Species> species_;
};

} // namespace sympcool::species
