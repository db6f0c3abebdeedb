// Minimal downstream consumer used by the packaging smoke test.

#include <cstdio>

#include "schwarzian/calculus.hpp"
#include "schwarzian/periods.hpp"

int main() {
  using namespace schwarzian;
  const ScalarODE ode = eliminate_to_scalar(dedekind_gauss_manin());
  if (ode != dedekind_expected_ode_g()) {
    std::puts("installed package produced a wrong elimination");
    return 1;
  }
  if (!scalar_schwarzian(RatFunc(Poly{1, 2}, Poly{3, 1})).is_zero()) {
    std::puts("Mobius input must have vanishing Schwarzian");
    return 1;
  }
  std::puts("package consumer ok");
  return 0;
}
