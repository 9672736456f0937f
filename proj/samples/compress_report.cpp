// Compression walkthrough: build the dense coefficient tensor of a random
// cubic instance, factor its unfolding, and show how the storage/accuracy
// trade-off moves with the kept rank.

#include <iostream>

#include "hobo/hobo.hpp"

int main() {
  const hobo::Polynomial p =
      hobo::random_instance(6, 3, 15, -5.0, 5.0, /*seed=*/3);
  const hobo::HoboTensor t = hobo::build_hobo_tensor(p);
  const hobo::SvdFactors factors = hobo::factorize(t);

  std::cout << "tensor: n=" << t.n() << " order=" << t.order()
            << " dense entries=" << t.size() << "\n";
  for (int r = 1; r <= factors.rank(); ++r) {
    const hobo::CompressionReport rep = hobo::compression_report(t, r);
    std::cout << "rank " << r << ": stored " << rep.stored_values_factored
              << " values, relative error " << rep.relative_error << "\n";
  }

  // A full-rank compressed tensor still evaluates costs exactly.
  const hobo::Assignment x = hobo::Assignment::from_string("101010");
  std::cout << "cost(sparse)     " << hobo::evaluate(p, x) << "\n";
  std::cout << "cost(compressed) " << hobo::compressed_cost(factors, x)
            << "\n";
  return 0;
}
