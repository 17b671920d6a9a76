#include <stdexcept>
#include <string>

#include "mahonian/jacobi_rogers.hpp"

namespace mahonian {

namespace {

Poly v(const char* name) { return Poly::variable(name); }

JRParams euler() {
  return {"euler", [](int k) { return Poly(2L * k + 1); },
          [](int k) { return Poly(static_cast<long>(k) * k); }};
}

JRParams beta_q() {
  return {"beta_q",
          [](int k) {
            return Poly::variable("q", static_cast<std::uint32_t>(k)) * (q_int(k) + bq_int(k + 1));
          },
          [](int k) {
            return Poly::variable("q", static_cast<std::uint32_t>(2 * k - 1)) * q_int(k) *
                   bq_int(k);
          }};
}

// gamma_k = k(u3+u4) + ab, beta_k = k(b-1+k) u1 u2
JRParams digraph(const char* name) {
  return {name, [](int k) { return Poly(static_cast<long>(k)) * (v("u3") + v("u4")) + v("a") * v("b"); },
          [](int k) {
            return Poly(static_cast<long>(k)) * (v("b") + Poly(static_cast<long>(k) - 1)) * v("u1") *
                   v("u2");
          }};
}

JRParams alternating() {
  return {"alternating", [](int) { return Poly(); },
          [](int k) { return Poly(static_cast<long>(k)) * (v("b") + Poly(static_cast<long>(k) - 1)); }};
}

JRParams zhu() {
  return {"zhu",
          [](int k) {
            const Poly shifted = v("la") + v("d") * v("x");
            return (Poly(static_cast<long>(k)) * v("a1") + v("a2")) * shifted +
                   (Poly(static_cast<long>(k)) * v("b1") + v("b2")) * v("x");
          },
          [](int k) {
            const Poly shifted = v("la") + v("d") * v("x");
            const Poly inner =
                (Poly(static_cast<long>(k) - 1) * v("a1") + v("a2")) * v("b1") + v("a1") * v("b2");
            return Poly(static_cast<long>(k)) * inner * v("x") * shifted;
          }};
}

}  // namespace

JRParams preset(std::string_view name) {
  if (name == "euler") {
    return euler();
  }
  if (name == "beta_q") {
    return beta_q();
  }
  if (name == "digraph") {
    return digraph("digraph");
  }
  if (name == "cyc") {
    return digraph("cyc");
  }
  if (name == "alternating") {
    return alternating();
  }
  if (name == "zhu") {
    return zhu();
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"euler", "beta_q", "digraph", "cyc", "alternating", "zhu"};
}

JRParams generic_params() {
  return {"generic", [](int k) { return Poly::variable("g" + std::to_string(k)); },
          [](int k) { return Poly::variable("B" + std::to_string(k)); }};
}

}  // namespace mahonian
