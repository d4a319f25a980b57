// Library tour: exact and float moment evaluation, plus live cross-checks
// against the independent oracles.
//
// Build (from the repository root):
//   cmake -S . -B build && cmake --build build --target moments_demo
//   ./build/samples/moments_demo

#include <iostream>
#include <vector>

#include "multimom/multimom.hpp"

int main() {
  using namespace multimom;
  using RT = scalar_traits<Rational>;

  // Six trials over two tracked categories (a third, implicit category
  // carries the leftover probability 1 - 1/3 - 1/5 = 7/15).
  const Params<Rational> p = validate_params<Rational>(6, {Rational(1, 3), Rational(1, 5)});

  const std::vector<int> idx{1, 1, 2};  // third-order mixed moment
  std::cout << "exact mode, m = 6, x = (1/3, 1/5), indices (1,1,2)\n";
  std::cout << "  raw      E[N1*N1*N2]          = " << RT::str(raw_moment(p, idx)) << "\n";
  std::cout << "  central  E[(N1-mu1)^2(N2-mu2)] = " << RT::str(central_moment(p, idx))
            << "\n";
  std::cout << "  factorial E[N1^(2) N2^(1)]     = "
            << RT::str(factorial_moment(p, std::vector<int>{2, 1})) << "\n\n";

  // Every value above can be re-derived by slower, independent methods.
  std::cout << "oracle cross-checks (all must agree exactly):\n";
  std::cout << "  support enumeration : "
            << RT::str(moment_via_enumeration(p, idx, MomentKind::Raw)) << "\n";
  std::cout << "  generating function : " << RT::str(raw_moment_via_mgf(p, idx)) << "\n";
  std::cout << "  raw-expansion       : " << RT::str(central_from_raw(p, idx)) << "\n\n";

  // Float mode trades exactness for speed; same formulas, double arithmetic.
  const Params<double> pf = validate_params<double>(6, {1.0 / 3.0, 0.2});
  std::cout << "float mode central (1,1,2) = " << central_moment(pf, idx) << "\n";

  // Monte Carlo headline: estimate +/- standard error, deterministic seed.
  const McEstimate est = moment_via_mc(pf, idx, MomentKind::Central, 200000, 42);
  std::cout << "monte carlo (200000 draws) = " << est.estimate << " +/- " << est.std_error
            << "\n";
  return 0;
}
