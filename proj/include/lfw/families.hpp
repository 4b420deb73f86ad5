#pragma once

#include "lfw/family.hpp"

namespace lfw {

/// The Haar multiresolution pair: scaling function = indicator of the ring
/// of integers, and the q-1 wavelets built from the additive character
/// table of GF(q).
struct HaarPair {
  TestFunction scaling;    // point side
  WaveletFamily wavelets;  // frequency side
};

HaarPair haar_family(const FieldRef& f);

// Control fixture: the single function whose transform is the indicator of
// the shell |xi| = q^2.  Its Calderon sum is identically 1 but the shift
// correlation t_1 is 1 on that shell, so it is not a tight frame.
WaveletFamily annulus_control(const FieldRef& f);

}  // namespace lfw
