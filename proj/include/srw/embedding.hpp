#pragma once

// Embeddings whose existence is a theorem; a failed verification throws
// ConstructionFailure.

#include <utility>
#include <vector>

#include "srw/algebra.hpp"
#include "srw/satisfaction.hpp"

namespace srw {

  // S(k(n,i)) -> S(ell(m)) from the letter matching: x_j for j < i and y_i
  // fixed, the letters right of the central block shifted by m-n,
  // y_{i+1} -> x_{i+1} x_i x_{i+2} and z_i -> the rest of the central block
  // x_{i+1} x_i ... x_{i+m-n+1} x_{i+m-n}. Requires 1 < i < n-1 and
  // m >= n+2.
  Morphism verify_kni_embedding(int n, int i, int m);

  // The generator images used by verify_kni_embedding, as words of ell(m)
  // keyed by the letters of k(n,i).
  std::vector<std::pair<Symbol, Word>> kni_letter_images(int n, int i, int m);

  struct ScabEmbedding {
    unsigned                               m = 0;
    element                                omega = 0;
    std::vector<std::pair<element, element>> pairs;  // x, its partner
    std::size_t                            generated_order = 0;  // |T|
    FiniteSemiring                         quotient;             // T / I
    Morphism                               embedding;            // S -> T / I
  };

  // For a flat SI semiring satisfying xy = yx, x x y = x x and
  // x1 x2 x3 = y1 y2 y3: the least m with |S| <= 2^m + 2, codewords in
  // {a,b}^m for each pair x, x' with x x' = omega (the nonzero element of the
  // 0-minimal ideal), and the resulting injective homomorphism into T / I,
  // where T is generated by {a,b}^m inside S_c(ab)^m and I holds the tuples
  // with a 0 coordinate. Throws PreconditionError naming the first failed
  // hypothesis.
  ScabEmbedding scab_power_embedding(FiniteSemiring const& s, EngineOptions const& options = {});

}  // namespace srw
