/// @file classify_zoo.cpp
/// @brief Classifies a small zoo of diagrams and, for the infinite ones,
/// verifies the catalogued witness module.

#include <iostream>
#include <vector>

#include "nilcox/classifier.hpp"
#include "nilcox/matrix_io.hpp"
#include "nilcox/witness.hpp"

using namespace nilcox;

int main() {
  std::vector<CoxeterMatrix> zoo;

  zoo.push_back(CoxeterMatrix::nc_a(3, 3));
  {
    CoxeterMatrix plain(3);
    plain.set_bond(1, 2, 3);
    plain.set_bond(2, 3, 4);
    zoo.push_back(plain);
  }
  {
    CoxeterMatrix pair(2);
    pair.set_bond(1, 2, 3);
    pair.set_order(1, 3);
    pair.set_order(2, 3);
    zoo.push_back(pair);
  }
  {
    CoxeterMatrix heavy(2);
    heavy.set_bond(1, 2, kInfiniteBond);
    zoo.push_back(heavy);
  }
  {
    CoxeterMatrix triangle(3);
    triangle.set_bond(1, 2, 3);
    triangle.set_bond(2, 3, 3);
    triangle.set_bond(1, 3, 3);
    zoo.push_back(triangle);
  }

  for (const auto& M : zoo) {
    const auto result = classify(M);
    std::cout << matrix_to_json(M).dump() << "\n  -> "
              << classification_to_json(result).dump() << "\n";
    if (!result.finite && result.witness_recipe) {
      const WitnessModule module(*result.witness_recipe, 8);
      const auto report = verify_witness(M, module);
      std::cout << "     witness at depth 8: "
                << (report.ok() ? "verified" : "failed") << ", checked "
                << report.checked_pairs << " relation pairs\n";
    }
  }
  return 0;
}
