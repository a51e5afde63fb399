#ifndef GEVREY_FIGURES_HPP
#define GEVREY_FIGURES_HPP

#include <string>
#include <vector>

#include "gevrey/filter.hpp"
#include "gevrey/output.hpp"

namespace gevrey {

struct Figure {
  std::string file_name;  // fig1_m0.svg ... fig5_psi.svg
  PlotSpec plot;
  double max_imag_residue = 0.0;  // only nonzero for the synthesized psi
};

/// Data for the five illustrations: m0, phi_hat, a detail of phi_hat near its
/// first bump, |psi_hat| and psi.
std::vector<Figure> build_figures(const LowPassFilter& m0, unsigned jobs = 1);

}  // namespace gevrey

#endif  // GEVREY_FIGURES_HPP
