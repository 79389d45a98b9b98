#pragma once

// Recovery polynomials: noncommutative polynomials in the witnesses w_1..w_2m
// with central coefficients z_1..z_l. They are stored normal ordered,
// w_1..w_m before w_{m+1}..w_{2m}, using [w_{m+i}, w_i] = 1 and all other
// witness commutators zero (the relations being certified).

#include <zfam/orefrac.hpp>

namespace zfam::cert {

using nc::AlgebraElement;
using nc::NcMono;
using ore::Fraction;

struct RecoveryTerm {
  Coefficient coeff;
  NcMono zexp;  // exponents of z_1..z_l
  NcMono wexp;  // exponents of w_1..w_2m in normal order
};

class RecoveryPoly {
 public:
  RecoveryPoly() = default;

  /// Parses text such as "z1 + 2*w1*w2 - 2*w1*w2*w1*w2".
  static RecoveryPoly parse(const std::string& text, int m, int l, const Domain& d) {
    RecoveryPoly out;
    out.m_ = m;
    out.l_ = l;
    out.domain_ = d;
    const nc::FamilyInstance weyl{nc::make_weyl(m), d};
    std::map<std::pair<NcMono, NcMono>, Coefficient> acc;
    for (const auto& term : nc::parse_words(text)) {
      NcMono z(static_cast<std::size_t>(l), 0);
      AlgebraElement w = AlgebraElement::scalar(weyl, Coefficient::from_rational(term.coeff, d));
      for (const auto& f : term.factors) {
        auto index = [&](char prefix, int limit) {
          if (f.symbol.size() < 2 || f.symbol[0] != prefix) return -1;
          try {
            std::size_t used = 0;
            int k = std::stoi(f.symbol.substr(1), &used);
            if (used + 1 != f.symbol.size() || k < 1 || k > limit) return -1;
            return k - 1;
          } catch (const std::exception&) {
            return -1;
          }
        };
        if (int k = index('z', l); k >= 0) z[k] = static_cast<std::uint16_t>(z[k] + f.power);
        else if (int k2 = index('w', 2 * m); k2 >= 0)
          w = w * AlgebraElement::generator(weyl, static_cast<std::size_t>(k2)).pow(f.power);
        else
          throw ParseError("unknown symbol '" + f.symbol + "' in recovery polynomial \"" + text + "\" (m = " +
                           std::to_string(m) + ", l = " + std::to_string(l) + ")");
      }
      for (const auto& [wm, c] : w.terms()) {
        auto key = std::make_pair(z, wm);
        auto [it, fresh] = acc.emplace(key, c);
        if (!fresh) it->second = it->second + c;
      }
    }
    for (auto& [key, c] : acc)
      if (!c.is_zero()) out.terms_.push_back({c, key.first, key.second});
    return out;
  }

  const std::vector<RecoveryTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int m() const { return m_; }
  int l() const { return l_; }

  /// Degree in the witnesses.
  int w_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(nc::mono_degree(t.wexp)));
    return d;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    // descending by total degree, then by exponents (z before w)
    std::vector<const RecoveryTerm*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto key = [](const RecoveryTerm* t) {
      NcMono all = t->zexp;
      all.insert(all.end(), t->wexp.begin(), t->wexp.end());
      return all;
    };
    std::sort(order.begin(), order.end(), [&](const RecoveryTerm* a, const RecoveryTerm* b) { return nc::MonoLess{}(key(b), key(a)); });
    std::string out;
    for (const RecoveryTerm* tp : order) {
      const RecoveryTerm& t = *tp;
      std::string mono;
      auto put = [&](char prefix, const NcMono& e) {
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (!e[i]) continue;
          if (!mono.empty()) mono += '*';
          mono += prefix + std::to_string(i + 1);
          if (e[i] > 1) mono += '^' + std::to_string(e[i]);
        }
      };
      put('z', t.zexp);
      put('w', t.wexp);
      zfam::detail::append_term(out, t.coeff, mono);
    }
    return out;
  }

  /// Value in the fraction field after substituting witnesses and centers.
  Fraction evaluate(const std::vector<Fraction>& w, const std::vector<AlgebraElement>& centers,
                    const ore::OreBounds& bounds) const {
    if (w.empty() && centers.empty()) throw std::invalid_argument("evaluation needs an algebra instance");
    const auto& inst = w.empty() ? centers.front().instance() : w.front().instance();
    Fraction total = Fraction::embed(AlgebraElement(inst));
    std::map<std::pair<std::size_t, unsigned>, Fraction> powers;
    auto wpow = [&](std::size_t i, unsigned e) -> const Fraction& {
      auto key = std::make_pair(i, e);
      if (auto it = powers.find(key); it != powers.end()) return it->second;
      return powers.emplace(key, ore::frac_pow(w[i], e, bounds)).first->second;
    };
    for (const auto& t : terms_) {
      AlgebraElement central = AlgebraElement::scalar(inst, convert(t.coeff, inst.domain));
      for (std::size_t k = 0; k < t.zexp.size(); ++k) central = central * centers.at(k).pow(t.zexp[k]);
      Fraction value = Fraction::embed(central);
      for (std::size_t i = 0; i < t.wexp.size(); ++i)
        if (t.wexp[i]) value = ore::frac_mul(value, wpow(i, t.wexp[i]), bounds);
      total = ore::frac_add(total, value, bounds);
    }
    return total;
  }

 private:
  int m_ = 0, l_ = 0;
  Domain domain_ = Domain::rationals();
  std::vector<RecoveryTerm> terms_;
};

}  // namespace zfam::cert
