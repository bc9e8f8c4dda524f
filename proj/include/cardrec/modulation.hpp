#ifndef CARDREC_MODULATION_HPP
#define CARDREC_MODULATION_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cardrec/grid.hpp"
#include "cardrec/lattice.hpp"

namespace cardrec {

// Finite-block model of a function in FW: finitely many frequency cells
// f_hat_k = f_hat(. + 2 pi k) chi_{[-pi,pi]^n}, each sampled on the grid.
struct BlockSpectrum {
  FrequencyGrid grid;
  std::map<Index, GridFunction> blocks;  // lexicographic key order

  explicit BlockSpectrum(const FrequencyGrid& g) : grid(g) {}
  int support_radius() const;
};

BlockSpectrum operator-(const BlockSpectrum& a, const BlockSpectrum& b);

enum class ProfileKind { constant, cosine, hat, gauss };

struct BlockProfile {
  ProfileKind kind = ProfileKind::constant;
  double value = 1.0;                    // constant a
  std::vector<double> coefficients;      // cosine c_0..c_d
  double beta = 1.0;                     // gauss e^{-beta ||xi||^2}

  double evaluate(std::span<const double> xi) const;
  int degree() const;  // trig-poly degree, 0 for smooth profiles
};

struct TestFunctionSpec {
  std::vector<std::pair<Index, BlockProfile>> parts;
};

// Samples the profiles at the grid nodes; parts sharing a block index add.
BlockSpectrum make_test_function(const TestFunctionSpec& spec,
                                 const FrequencyGrid& grid);

// sum_k || f_hat_k ||_{L_p([-pi,pi]^n)} — the FW_p norm of the model.
double fw_norm(const BlockSpectrum& f, double p);
double fw_norm_interior(const BlockSpectrum& f, double p);

// || f_hat_0 ||_{L_2}; requires support on block 0 only (PW membership).
double pw_norm(const BlockSpectrum& f);

// f_k(j) = synthesize(f_hat_k, j) on the window {-Js..Js}^n; exact for
// trig-poly profiles of degree < N/2.  Unknown k yields zeros.
SampleArray sample_block(const BlockSpectrum& f, const Index& k, int window);

// f(x) = sum_k e^{2 pi i <k,x>} synthesize(f_hat_k, x): the modulated block
// decomposition of the inversion integral.
Complex evaluate(const BlockSpectrum& f, std::span<const double> x);

}  // namespace cardrec

#endif
