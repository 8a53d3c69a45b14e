// Walks through both computations on small inputs and prints every
// intermediate word and sequence.

#include <iostream>

#include "snakecone/snakecone.hpp"

int main() {
  using namespace snakecone;

  const auto d = parse_descriptor("free:2");
  const SigmaWord w = parse_word("C1[a] C2[b] C3[a^-1 b]", d);
  const std::int64_t M = 6, k = 7;
  Pi1Report r = verify_theorem1(w, k, M);

  std::cout << "W    = " << to_string(w) << "\n"
            << "W*   = " << to_string(r.w_star) << "\n"
            << "W0   = " << to_string(r.w0) << "\n"
            << "W0*  = " << to_string(r.w0_star) << "\n";
  for (const auto& c : r.checks)
    std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name << "  [" << to_string(c.computed)
              << "]\n";

  const auto z = parse_descriptor("abelian:1");
  const auto v = parse_sequence("(1);(2);(3)", z), u_w = parse_sequence("(4);(5);(6)", z);
  const auto u = mv_preimage(v, u_w);
  std::cout << "\nv = " << to_string(v) << ", w = " << to_string(u_w) << "\n"
            << "u = " << to_string(u) << "\n"
            << "i0(u) = " << to_string(i0_seq(u)) << ", i1(u) = " << to_string(i1_seq(u)) << "\n";

  auto snf = smith_normal_form(combined_map_matrix(3));
  std::cout << "\nSmith form of the combined map, N = 3:\n" << to_string(snf.D);
  return r.verdict ? 0 : 1;
}
