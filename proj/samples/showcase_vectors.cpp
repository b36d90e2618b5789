// Classifies the speed vectors quoted as new instances of the two polyhedral
// families and confirms each with the exact oracle.

#include <lonely/lonely.hpp>

#include <iostream>

int main() {
  using lonely::SpeedVector;
  const SpeedVector vectors[] = {
      SpeedVector::from_values({17, 16, 7, 6, 5, 4, 2}),      SpeedVector::from_values({18, 16, 7, 6, 5, 4, 3, 2}),
      SpeedVector::from_values({20, 18, 8, 7, 6, 5, 4, 3, 2}), SpeedVector::from_values({20, 14, 8, 6, 5, 4, 2}),
      SpeedVector::from_values({24, 14, 10, 9, 8, 6, 5, 2}),  SpeedVector::from_values({23, 18, 15, 10, 8, 7, 6, 4, 2}),
  };
  for (const auto& n : vectors) {
    const auto r = lonely::classify(n, true);
    std::cout << n.str() << "  thm1=" << r.thm1 << " thm2=" << r.thm2 << " slow_fast=" << r.slow_fast
              << "  earliest=" << r.witness_time->str() << "  instance=" << *r.oracle_verdict << '\n';
  }
}
