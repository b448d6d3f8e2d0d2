#pragma once

// Unit conversions. Everything inside the solvers is SI; configs and reports
// speak micrometres, microlitres per minute, millimetres and mol/L.

namespace micromix {

constexpr double metres_from_um(double um) { return um * 1.0e-6; }
constexpr double um_from_metres(double m) { return m * 1.0e6; }
constexpr double mm_from_metres(double m) { return m * 1.0e3; }
constexpr double metres_from_mm(double mm) { return mm * 1.0e-3; }

// 1 uL/min = 1e-9 m^3 / 60 s
constexpr double m3s_from_ul_min(double ul_min) { return ul_min * (1.0e-9 / 60.0); }

// 1 mol/L = 1000 mol/m^3
constexpr double mol_m3_from_molar(double molar) { return molar * 1000.0; }
constexpr double molar_from_mol_m3(double c) { return c / 1000.0; }

// Bimolecular rate constant: 1 1/(M s) = 1e-3 m^3/(mol s)
constexpr double rate_si_from_per_molar_s(double k) { return k * 1.0e-3; }

}  // namespace micromix
