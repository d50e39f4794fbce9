#ifndef PILAB_ENVELOPE_HPP
#define PILAB_ENVELOPE_HPP

#include <map>
#include <vector>

#include "pilab/algebras.hpp"
#include "pilab/freealg.hpp"

namespace pilab::envelope {

using algebras::AlgebraSpec;
using algebras::Element;
using algebras::Rational;

/// sign * e_{g_1} ... e_{g_r} with g strictly increasing, or zero.
class GrassmannMonomial {
 public:
  static GrassmannMonomial zero();
  static GrassmannMonomial one() { return GrassmannMonomial({}, 1); }
  /// The product of the given generators in the given order; normalizes to
  /// increasing order and becomes zero on a repeated generator.
  static GrassmannMonomial product(const std::vector<int>& generators);

  /// `generators` must be strictly increasing.
  GrassmannMonomial(std::vector<int> generators, int sign);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  const std::vector<int>& generators() const { return gens_; }
  int parity() const { return static_cast<int>(gens_.size()) % 2; }

  friend bool operator==(const GrassmannMonomial&, const GrassmannMonomial&) = default;

 private:
  GrassmannMonomial() = default;
  std::vector<int> gens_;
  int sign_ = 0;
};

GrassmannMonomial grassmann_multiply(const GrassmannMonomial& u, const GrassmannMonomial& v);

/// For each variable slot: a basis index of L, its parity, and a block of
/// Grassmann generators (one for odd slots, two for even slots).
struct EnvelopeAssignment {
  std::vector<int> basis;
  std::vector<int> parities;
  std::vector<std::vector<int>> blocks;

  int size() const { return static_cast<int>(basis.size()); }

  /// Fresh blocks allocated in slot order: slot i gets the next one or two
  /// generators according to the parity of b_{basis[i]}.
  static EnvelopeAssignment standard(const AlgebraSpec& L, std::vector<int> basis);

  /// Throws parity_mismatch when a basis parity or a block length disagrees
  /// with the declared slot parity.
  void check(const AlgebraSpec& L) const;
};

/// Sign of the product of the blocks in the leaf order of m, relative to
/// the product in slot order. Zero if two blocks share a generator.
int koszul_sign(const freealg::Monomial& m, const EnvelopeAssignment& a);

/// m(args) computed in L with the bracket; args[i] substitutes variable i.
Element evaluate_in_algebra(const AlgebraSpec& L, const freealg::Monomial& m,
                            const std::vector<Element>& args);

struct SignedElement {
  int sign = 1;
  Element value;
};

/// koszul_sign * m(b_{a_1}, ..., b_{a_n}). For typed variables the slot
/// parities must match the variable parities (parity_mismatch otherwise).
SignedElement evaluate_on_envelope(const AlgebraSpec& L, const freealg::Monomial& m,
                                   const freealg::VariableSet& vars,
                                   const EnvelopeAssignment& a);

/// Element of L (x) G: sorted generator list -> coefficient vector in L.
using EnvelopeElement = std::map<std::vector<int>, Element>;

/// Literal recursive evaluation in L (x) G with grassmann_multiply on the
/// G factor.
EnvelopeElement truncated_envelope_oracle(const AlgebraSpec& L, const freealg::Monomial& m,
                                          const freealg::VariableSet& vars,
                                          const EnvelopeAssignment& a);

/// L_0 (x) G_0 + L_1 (x) G_1 with G on `generators` generators, as a
/// finite-dimensional super-Lie algebra. Basis b_i (x) g ordered by (i, g)
/// with g running over subsets in increasing bitmask order.
AlgebraSpec truncated_envelope_algebra(const AlgebraSpec& L, int generators);

}  // namespace pilab::envelope

#endif  // PILAB_ENVELOPE_HPP
