#include "sympcool/units.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sympcool::units {
namespace {

enum class Dim { energy, length, mass, time, frequency };

struct UnitInfo {
  Unit unit;
  std::string_view name;
  Dim dim;
  double to_base; // multiply to get the atomic base unit of the dimension
};

// Base units: hartree, bohr, m_e, atomic time, cycles per atomic time.
constexpr std::array<UnitInfo, 18> kTable{{
    {Unit::hartree, "hartree", Dim::energy, 1.0},
    {Unit::ev, "eV", Dim::energy, 1.0 / kHartreeEv},
    {Unit::mev, "meV", Dim::energy, 1e-3 / kHartreeEv},
    {Unit::invcm, "invcm", Dim::energy, 1.0 / kHartreeInvCm},
    {Unit::bohr, "bohr", Dim::length, 1.0},
    {Unit::meter, "m", Dim::length, 1.0 / kBohrMeter},
    {Unit::micrometer, "um", Dim::length, 1e-6 / kBohrMeter},
    {Unit::nanometer, "nm", Dim::length, 1e-9 / kBohrMeter},
    {Unit::me, "me", Dim::mass, 1.0},
    {Unit::amu, "amu", Dim::mass, kAmuMe},
    {Unit::atomic_time, "aut", Dim::time, 1.0},
    {Unit::second, "s", Dim::time, 1.0 / kAtomicTimeSecond},
    {Unit::millisecond, "ms", Dim::time, 1e-3 / kAtomicTimeSecond},
    {Unit::microsecond, "us", Dim::time, 1e-6 / kAtomicTimeSecond},
    {Unit::nanosecond, "ns", Dim::time, 1e-9 / kAtomicTimeSecond},
    {Unit::atomic_frequency, "auf", Dim::frequency, 1.0},
    {Unit::hz, "Hz", Dim::frequency, kAtomicTimeSecond},
    {Unit::mhz, "MHz", Dim::frequency, 1e6 * kAtomicTimeSecond},
}};

const UnitInfo& info(Unit u) {
  for (const auto& e : kTable)
    if (e.unit == u) return e;
  throw std::invalid_argument("unknown unit");
}

} // namespace

double convert(double value, Unit from, Unit to) {
  const UnitInfo& f = info(from);
  const UnitInfo& t = info(to);
  if (f.dim != t.dim)
    throw std::invalid_argument(std::string("cannot convert ") +
                                std::string(f.name) + " to " +
                                std::string(t.name) +
                                ": incompatible dimensions");
  return value * (f.to_base / t.to_base);
}

Unit parse_unit(std::string_view name) {
  for (const auto& e : kTable)
    if (e.name == name) return e.unit;
  throw std::invalid_argument("unknown unit name: " + std::string(name));
}

std::string_view unit_name(Unit u) { return info(u).name; }

double trap_omega_au(double nu_mhz) {
  return 2.0 * std::numbers::pi * convert(nu_mhz, Unit::mhz, Unit::atomic_frequency);
}

} // namespace sympcool::units
