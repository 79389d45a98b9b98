#pragma once

// Growth diagnostics and the sl2 Casimir element.

#include <zfam/ncalg/filtration.hpp>

#include <cmath>

namespace zfam::nc {

/// GK-dimension estimate from dim B_j, j in [jmax/2, jmax]. For dim B_j
/// ~ (j + s)^e / e! the plain log-log slope is biased at small j, so the fit
/// uses log(j + s) with the shift s = (e + 1) / 2 iterated to a fixed point
/// (exact shift for binomial growth C(j + e, e)).
inline double growth_exponent(const FamilyInstance& inst, int jmax) {
  if (jmax < 4) throw std::invalid_argument("growth_exponent needs jmax >= 4");
  std::vector<double> ys;
  std::vector<int> js;
  for (int j = jmax / 2; j <= jmax; ++j) {
    js.push_back(j);
    ys.push_back(std::log(piece_dimension(inst, j).get_d()));
  }
  auto slope = [&](double shift) {
    const std::size_t n = js.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double x = std::log(js[i] + shift);
      sx += x;
      sy += ys[i];
      sxx += x * x;
      sxy += x * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  double e = slope(0.0);
  for (int it = 0; it < 100; ++it) {
    double next = slope((e + 1) / 2);
    if (std::abs(next - e) < 1e-12) return next;
    e = next;
  }
  return e;
}

class CasimirError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// c = ef + fe + h^2/2 in U(sl2), normal form 2ef - h + h^2/2.
inline AlgebraElement casimir(const FamilyInstance& inst) {
  const Family& fam = *inst.family;
  if (fam.kind() != Family::Kind::Enveloping || fam.root_system()->label() != "A1")
    throw CasimirError("the Casimir element is provided for enveloping(A1) only");
  if (!inst.domain.is_field() || inst.domain.characteristic() == 2)
    throw CasimirError("the Casimir element needs 1/2 in the coefficient domain (got " + inst.domain.name() + ")");
  auto e = AlgebraElement::generator(inst, 0), h = AlgebraElement::generator(inst, 1), f = AlgebraElement::generator(inst, 2);
  AlgebraElement c = e * f + f * e + (h * h).scaled(Coefficient::from_integer(2L, inst.domain).inverse());
  for (const auto& g : {e, h, f})
    if (!commutator(c, g).is_zero()) throw std::logic_error("Casimir element failed the centrality check");
  return c;
}

}  // namespace zfam::nc
