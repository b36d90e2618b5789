// Prints, for every coprime speed set with fastest speed at most N (default 8),
// the earliest suitable time next to the first dyadic grid time.

#include <lonely/lonely.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const int max_speed = argc > 1 ? std::atoi(argv[1]) : 8;
  if (max_speed < 1 || max_speed > 16) {
    std::cerr << "usage: sample_earliest_times [N in 1..16]\n";
    return 1;
  }
  for (lonely::Mask mask = 1; mask < (lonely::Mask{1} << max_speed); ++mask) {
    const auto n = lonely::decode_mask(mask);
    if (lonely::gcd_of(n) != 1) continue;
    const auto earliest = lonely::earliest_suitable_time(n);
    const auto dyadic = lonely::find_dyadic_time(n);
    std::cout << n.str() << "  earliest=" << (earliest ? earliest->str() : "none")
              << "  dyadic=" << (dyadic ? dyadic->time.str() : "none") << '\n';
  }
}
