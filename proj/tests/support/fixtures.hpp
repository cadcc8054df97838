#pragma once

#include "poncelet/family.hpp"
#include "poncelet/inversive.hpp"

namespace fixture {

using poncelet::Complex;

// The family and inversion circle most examples are written against.
inline poncelet::PonceletFamily reference_family() {
  return poncelet::PonceletFamily::from_foci({0.3, 0.0}, {0.2, 0.1}, 2.0, 1.0);
}

inline poncelet::Circle reference_circle() { return poncelet::make_circle({1.6, 0.9}, 0.7); }

// Inversion center inside the swept region (O=(1.6,0.9)) and two outside it.
inline const Complex kInterior{1.6, 0.9};
inline const Complex kExterior{3.0, 0.0};
inline const Complex kHole{0.0, 0.0};

}  // namespace fixture
