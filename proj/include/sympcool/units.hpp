#pragma once

#include <string>
#include <string_view>

// Unit handling. Everything in the core library is expressed in Hartree
// atomic units (energy: hartree, length: bohr, mass: electron mass, time:
// atomic time unit, charge: elementary charge). Conversions to and from
// laboratory units happen only at the boundaries (file input, CLI, output).
namespace sympcool::units {

// Pinned conversion scales.
inline constexpr double kHartreeEv = 27.211386;            // eV per hartree
inline constexpr double kBohrMeter = 5.29177e-11;          // m per bohr
inline constexpr double kAmuMe = 1822.888;                 // m_e per amu
inline constexpr double kAtomicTimeSecond = 2.4188843e-17; // s per a.t.u.
inline constexpr double kHartreeInvCm = 219474.6313632;    // cm^-1 per hartree

enum class Unit {
  // energy
  hartree,
  ev,
  mev,
  invcm,
  // length
  bohr,
  meter,
  micrometer,
  nanometer,
  // mass
  me,
  amu,
  // time
  atomic_time,
  second,
  millisecond,
  microsecond,
  nanosecond,
  // linear frequency
  atomic_frequency, // cycles per atomic time unit
  hz,
  mhz,
};

// Converts between two units of the same dimension. Throws
// std::invalid_argument naming both units if the dimensions differ.
double convert(double value, Unit from, Unit to);

// Name <-> unit mapping for the CLI and config files. parse_unit throws
// std::invalid_argument for unknown names.
Unit parse_unit(std::string_view name);
std::string_view unit_name(Unit u);

inline double ev_to_hartree(double e) { return e / kHartreeEv; }
inline double hartree_to_ev(double e) { return e * kHartreeEv; }
inline double invcm_to_hartree(double w) { return w / kHartreeInvCm; }
inline double amu_to_me(double m) { return m * kAmuMe; }
inline double um_to_bohr(double x) { return x * 1e-6 / kBohrMeter; }
inline double bohr_to_um(double x) { return x * kBohrMeter * 1e6; }
inline double s_to_atomic(double t) { return t / kAtomicTimeSecond; }
inline double atomic_to_s(double t) { return t * kAtomicTimeSecond; }
inline double atomic_to_ms(double t) { return t * kAtomicTimeSecond * 1e3; }

// Angular trap frequency in atomic units for a linear drive frequency nu
// given in MHz (omega = 2*pi*nu).
double trap_omega_au(double nu_mhz);

} // namespace sympcool::units
