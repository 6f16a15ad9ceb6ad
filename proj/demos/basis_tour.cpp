/// @file basis_tour.cpp
/// @brief Walks through the algebra attached to the smallest raised-order
/// diagram: basis, products, reversal, and primitives.

#include <iostream>

#include "nilcox/nca_algebra.hpp"

using namespace nilcox;

int main() {
  const int n = 2, d = 3;
  const NcaContext ctx(n, d);

  std::cout << "dimension " << dimension(n, d).get_str() << "\n";
  std::cout << "hilbert " << hilbert(n, d).to_string() << "\n\n";

  std::cout << "basis words by length:\n";
  for (const auto& b : basis(n, d))
    std::cout << "  " << b.to_string() << "  (length " << b.word_length()
              << ")\n";

  std::cout << "\nsome normal forms:\n";
  for (const auto& word : std::vector<std::vector<int>>{
           {1, 1}, {2, 2}, {2, 2, 2}, {1, 2, 1}, {2, 1, 2, 1}}) {
    std::cout << "  nf(";
    for (std::size_t i = 0; i < word.size(); ++i)
      std::cout << (i ? "," : "") << word[i];
    std::cout << ") = " << normal_form(ctx, word).to_string() << "\n";
  }

  const auto x = normal_form(ctx, {1, 2});
  std::cout << "\ntheta(" << x.to_string() << ") = " << theta(x).to_string()
            << "\n";

  std::cout << "\nleft primitives:";
  for (const auto& b : left_primitives(n, d)) std::cout << " " << b.to_string();
  std::cout << "\ntwo-sided primitives:";
  for (const auto& b : two_sided_primitives(n, d))
    std::cout << " " << b.to_string();
  std::cout << "\nfrobenius: " << (is_frobenius(n, d) ? "yes" : "no") << "\n";
  return 0;
}
