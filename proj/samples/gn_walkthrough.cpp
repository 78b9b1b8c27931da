// Walks through the Guthrie-Nymann Cantorval E(3,2;1/4): iterations, the
// Kakeya pattern, a classification and the measure bounds.

#include <iostream>

#include "cantorval/cantorval.hpp"

int main() {
  using namespace cantorval;
  const MultigeometricSpec spec{{3, 2}, Rational(1, 4)};
  const TermStream s = mg_stream(spec);

  std::cout << spec.label() << "  r0 = " << spec.r0() << '\n';
  for (const auto& it : iterations(s, 8))
    std::cout << "  I_" << it.n << ": " << it.iteration.size() << " parts, measure " << it.measure << '\n';

  auto pat = kakeya_pattern(s);
  std::cout << "K among 1..8:";
  for (std::size_t n = 1; n <= 8; ++n)
    if (pat.in_K(n)) std::cout << ' ' << n;
  std::cout << '\n';

  auto c = classify(FamilySpec{spec}, 10);
  std::cout << "verdict: " << to_string(c.verdict) << " (" << to_string(c.tier) << ", " << c.rule << ")\n";
  if (c.witnesses.tight_run && c.witnesses.tight_run->found)
    std::cout << "interval inside E of length >= " << c.witnesses.tight_run->interval_length << '\n';

  auto mb = measure_bounds(spec, 8, 10);
  std::cout << "lambda(E) in [" << mb.lower_interior << ", " << mb.upper_lambda_E << "]\n";
}
