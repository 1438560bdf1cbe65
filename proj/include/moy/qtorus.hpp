#pragma once

// Quantum-torus algebras: variables u_i with u_i u_j = v^{c(i,j)} u_j u_i for an
// antisymmetric integer matrix c, v = q^{1/4}. Elements are kept as linear
// combinations of normal-ordered monomials (variables in signature order).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "moy/cycles.hpp"
#include "moy/diagram.hpp"
#include "moy/qexact.hpp"

namespace moy {

using Exponents = std::vector<std::uint32_t>;

class TorusSignature {
 public:
  explicit TorusSignature(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int pairing(std::size_t i, std::size_t j) const { return matrix_[i * size() + j]; }
  /// Sets c(i,j) = c and c(j,i) = -c.
  void set_pairing(std::size_t i, std::size_t j, int c);
  int max_abs_pairing() const;

  /// Exponent of v picked up by normal-ordering u^a u^b:
  /// sum over i > j of a_i b_j c(i,j).
  long long commutation(const Exponents& a, const Exponents& b) const;

  Exponents unit() const { return Exponents(size(), 0); }
  std::string format(const Exponents& e) const;

 private:
  struct Skew {
    std::size_t hi;
    std::size_t lo;
    int c;  // c(hi, lo)
  };
  std::vector<std::string> names_;
  std::vector<int> matrix_;
  std::vector<Skew> skew_;
};

using SignaturePtr = std::shared_ptr<const TorusSignature>;

/// Linear combination of normal-ordered monomials. Coef must provide
/// is_zero(), +=, -=, unary -, shifted(k) and mul_shift(other, k) = this * other * v^k.
template <class Coef>
class TorusElement {
 public:
  using Terms = std::map<Exponents, Coef>;

  explicit TorusElement(SignaturePtr sig) : sig_(std::move(sig)) {}

  static TorusElement one(SignaturePtr sig) { return monomial(sig, sig->unit(), Coef(1)); }
  static TorusElement monomial(SignaturePtr sig, Exponents e, Coef c) {
    if (e.size() != sig->size()) throw std::invalid_argument("exponent vector does not match signature");
    TorusElement t(std::move(sig));
    t.add_term(e, c);
    return t;
  }

  const SignaturePtr& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coef coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef() : it->second;
  }

  void add_term(const Exponents& e, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TorusElement& operator+=(const TorusElement& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TorusElement& operator-=(const TorusElement& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) { return torus_mul(a, b); }
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.sig_.get() == b.sig_.get() && a.terms_ == b.terms_;
  }

  friend TorusElement torus_mul(const TorusElement& a, const TorusElement& b) {
    a.check(b);
    TorusElement r(a.sig_);
    Exponents sum(a.sig_->size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
        r.add_term(sum, ca.mul_shift(cb, static_cast<int>(a.sig_->commutation(ea, eb))));
      }
    }
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Exponents&>(), std::declval<const Coef&>()))>;
    TorusElement<Out> r(sig_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(e, c));
    return r;
  }

 private:
  void check(const TorusElement& o) const {
    if (sig_.get() != o.sig_.get())
      throw std::invalid_argument("torus elements over different signatures");
  }

  SignaturePtr sig_;
  Terms terms_;
};

/// Flag variables z_{v,s}, Z_{v,s} in the order
/// z_{v,l} < z_{v,m} < z_{v,r} < Z_{v,r} < Z_{v,m} < Z_{v,l}, vertex by vertex,
/// then one commuting pair (z_c, Z_c) per circle.
struct FlagAlgebra {
  SignaturePtr sig;
  std::vector<int> vertex_ids;
  std::vector<int> circle_ids;

  std::size_t z(std::size_t vertex_index, FlagPos p) const;
  std::size_t Z(std::size_t vertex_index, FlagPos p) const;
  std::size_t circle_z(std::size_t circle_index) const;
  std::size_t circle_Z(std::size_t circle_index) const;
};

FlagAlgebra flag_algebra(const PlanarDiagram& d);

/// One variable x_C per nonempty cycle, in canonical order (variable i is
/// cycle i+1), with c(C,C') = 4<C,C'> in v-units.
struct CycleAlgebra {
  SignaturePtr sig;
  /// Pairing in half-units, indexed by cycle index (including the empty cycle).
  std::vector<std::vector<int>> pairing_halves;

  /// Exponent vector of the single variable x_C (all zeros for the empty cycle).
  Exponents variable(std::size_t cycle_index) const;
};

CycleAlgebra cycle_algebra(const CycleSet& cycles);
/// Same, with a caller-supplied pairing (half-units, indexed by cycle index).
CycleAlgebra cycle_algebra(const CycleSet& cycles, std::vector<std::vector<int>> pairing_halves);

/// Image of one cycle variable: z^C Z^C as an exponent vector.
Exponents mu_exponents(const PlanarDiagram& d, const FlagAlgebra& fa, const Cycle& c);

/// The monomial map x_C -> z^C Z^C, extended multiplicatively. For every
/// normal-ordered x-monomial returns the normal-ordered flag monomial and the
/// v-exponent picked up while ordering it.
class MuMap {
 public:
  MuMap(const PlanarDiagram& d, const CycleSet& cycles, const FlagAlgebra& fa, const CycleAlgebra& ca);

  struct Image {
    Exponents flags;
    long long shift;
  };
  Image image(const Exponents& x) const;
  const FlagAlgebra& flags() const { return fa_; }
  /// Flag exponents of each cycle variable.
  const std::vector<Exponents>& images() const { return images_; }

  template <class Coef>
  TorusElement<Coef> operator()(const TorusElement<Coef>& m) const {
    TorusElement<Coef> r(fa_.sig);
    for (const auto& [e, c] : m.terms()) {
      const Image im = image(e);
      r.add_term(im.flags, c.shifted(static_cast<int>(im.shift)));
    }
    return r;
  }

 private:
  FlagAlgebra fa_;
  std::vector<Exponents> images_;  // per cycle variable
};

/// Reads a flag monomial as a coloring: every edge's two z-exponents and two
/// Z-exponents must agree (and z = Z for circles). Returns nullopt otherwise.
std::optional<Coloring> flow_of_monomial(const PlanarDiagram& d, const FlagAlgebra& fa, const Exponents& e);

/// z^gamma Z^gamma as an exponent vector.
Exponents monomial_of_flow(const PlanarDiagram& d, const FlagAlgebra& fa, const Coloring& c);

}  // namespace moy
