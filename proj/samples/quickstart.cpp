// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// A short tour: Fourier analysis, a Gowers norm, a biaffine variety, an
// affine extension and a polynomial phase.

#include <iostream>

#include "hofa/hofa.hpp"

int main() {
  using namespace hofa;

  // A random bounded function on F_2^5 and its U^2 norm two ways.
  const ProductSpace g = single_group_space(2, 5);
  const FunctionTable f = lab::random_table(g, /*seed=*/42);
  const Spectrum fh = fourier(f);
  double fourth = 0;
  for (const auto& c : fh.coeffs) fourth += std::norm(c) * std::norm(c);
  std::cout << "||f||_U2^4 = " << uk_norm_power(f, 2) << ", sum |f^|^4 = " << fourth << "\n";

  // The variety {x.y = 0} in F_2^3 x F_2^3.
  const ProductSpace s(2, {3, 3});
  const MultilinearForm dot(s, {0, 1}, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  const Variety v(MultiAffineMap::from_forms(s, {dot}), {0});
  const auto qr = check_quasirandom(v.map(), v.target(), Coset::whole(s.factor(0)),
                                    Coset::whole(s.factor(1)));
  std::cout << "|{x.y=0}| = " << v.size() << ", delta = " << qr.delta << ", eta_min = " << qr.eta_min
            << "\n";

  // Recover an affine map on F_3^2 from all but one point.
  const ProductSpace h = single_group_space(3, 2);
  const auto alpha = lab::random_multiaffine(h, 1, /*seed=*/7);
  std::vector<std::uint64_t> dom;
  for (std::uint64_t x = 1; x < h.total_size(); ++x) dom.push_back(x);
  const auto ext = affine_extension(PartialMap::restrict(alpha, dom), Coset::whole(h.factor(0)));
  std::cout << "extension at 0: " << ext.at(0)[0] << " (true value " << alpha.eval(0)[0] << ")\n";

  // The phase of x^2 over F_5 has unit U^3 norm.
  const MonomialPoly sq(5, 1, {{{2}, 1}});
  std::cout << "||omega^{x^2}||_U3 = " << uk_norm(phase_table(sq), 3) << "\n";
  return 0;
}
