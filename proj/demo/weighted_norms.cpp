// Walk-through of the library: norms of a polynomial, the escaping maximizer
// of a truncated Q, and one correction run.
//
//   ./wnl_demo [path/to/polynomial.json]

#include <cstdio>
#include <string>

#include "wnl/wnl.hpp"

int main(int argc, char** argv) {
  using namespace wnl;
  try {
    const std::string path = argc > 1 ? argv[1] : "demo/data/mixed.json";
    const Polynomial P = io::polynomial_from_json(io::read_json_file(path));
    std::printf("polynomial of degree %d on l_%g^%zu\n", P.degree(), P.space().p(), P.dim());

    const auto sup = sup_norm(P);
    const auto half = s_norm(P, 0.5);
    const auto v = v_norm(P);
    std::printf("  ||P||_inf = %.10f\n  ||P||_0.5 = %.10f\n  ||P||_v   = %.10f at radius %.6f (direct ascent %.10f)\n",
                sup.value, half.value, v.value, v.s_star, v.diagnostics.direct_value);

    // s-norms of the truncated Q sit just below s^2 + s^3 and peak on the last coordinate
    const auto Q = make_Q(2.0, 2, 32);
    for (double s : {0.25, 0.5, 0.75}) {
      const auto r = s_norm(Q, s);
      std::printf("  Q, s = %.2f: %.10f (limit %.10f), dominant coordinate %d of 32\n", s, r.value,
                  exact_sup_Q(s, 2).value, dominant_index(r.witness));
    }

    const LpSpace X(4, 2.0);
    const auto np = normalize_v(random_diagonal(X, 2, 7));
    const auto run = bollobas_correct(np.P, v_norm(np.P).witness, 0.1, ScheduleMode::Practical);
    std::printf("  correction: %zu step(s), ||P - Q||_inf = %.3e, d(y, span x) = %.3e, margin %.3e\n",
                run.steps.size(), run.sup_distance, run.span_distance, run.attainment_margin);
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 0;
}
