#pragma once

// Nonemptiness of locally closed sets over the algebraic closure of the prime
// field, via the Nullstellensatz.

#include <zfam/polycore/groebner.hpp>

namespace zfam {

/// {f = 0 for all equations} minus {g = 0 for all inequations}.
struct LocallyClosedSystem {
  std::uint32_t arity = 0;
  std::vector<Poly> equations;
  std::vector<Poly> inequations;
  std::uint64_t characteristic = 0;

  Domain domain() const { return characteristic == 0 ? Domain::rationals() : Domain::modular(characteristic); }

  /// Throws if any polynomial disagrees with the declared arity or characteristic.
  void validate() const {
    const Domain d = domain();
    auto check = [&](const Poly& p, const char* what) {
      if (p.arity() != arity) throw std::invalid_argument(std::string(what) + " has arity " + std::to_string(p.arity()) + ", expected " + std::to_string(arity));
      if (p.domain() != d) throw DomainError(std::string(what) + " has coefficients in " + p.domain().name() + ", expected " + d.name());
    };
    for (const auto& p : equations) check(p, "equation");
    for (const auto& p : inequations) check(p, "inequation");
  }
};

/// True iff f vanishes on every zero of the ideal over the algebraic closure.
/// Decided by testing 1 in ideal + <1 - t f> with one extra variable t.
inline bool in_radical(const Poly& f, const std::vector<Poly>& ideal, const GroebnerLimits& limits = {}) {
  if (!f.domain().is_field()) throw DomainError("in_radical requires field coefficients");
  for (const auto& g : ideal) f.check_compatible(g);
  if (f.is_zero()) return true;
  const std::uint32_t n = f.arity();
  std::vector<Poly> gens;
  for (const auto& g : ideal)
    if (!g.is_zero()) gens.push_back(g.with_arity(n + 1));
  Poly t = Poly::variable(n + 1, f.domain(), n);
  gens.push_back(Poly::constant(n + 1, Coefficient::one(f.domain())) - t * f.with_arity(n + 1));
  auto gb = groebner_basis(gens, MonomialOrder::grevlex(), limits);
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

/// Nonempty iff some inequation is not in the radical of the equations; with
/// no inequations, iff the equations do not generate the unit ideal.
inline bool decide_locally_closed_nonempty(const LocallyClosedSystem& sys, const GroebnerLimits& limits = {}) {
  sys.validate();
  std::vector<Poly> eqs;
  for (const auto& e : sys.equations)
    if (!e.is_zero()) eqs.push_back(e);
  if (sys.inequations.empty()) {
    if (eqs.empty()) return true;
    auto gb = groebner_basis(eqs, MonomialOrder::grevlex(), limits);
    return !(gb.size() == 1 && gb.front().is_constant());
  }
  for (const auto& g : sys.inequations)
    if (!in_radical(g, eqs, limits)) return true;
  return false;
}

}  // namespace zfam
