#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "futaki/rational.hpp"

namespace futaki {

/// Default cap on brute-force exponent-vector enumeration (overridable via
/// the FUTAKI_ENUM_CAP environment variable at the CLI).
inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

/// Projective space P^d with the diagonal C*-action of exponents
/// weights[0..d] on the homogeneous coordinates, polarized by O(1).
/// linearization_shift is the additive twist lambda of the fiber weight:
/// the section x^I of O(k) has weight <weights, I> + lambda * k.
class AmbientSpec {
public:
    AmbientSpec(int d, std::vector<long> weights, long linearization_shift = 0);

    int d() const { return d_; }
    const std::vector<long>& weights() const { return weights_; }
    long linearization_shift() const { return shift_; }

    /// Same action with a different linearization twist.
    AmbientSpec with_shift(long lambda) const { return AmbientSpec(d_, weights_, lambda); }

private:
    int d_;
    std::vector<long> weights_;
    long shift_;
};

/// Invariant hypersurface {F = 0} in P^d of degree m, where the defining
/// polynomial F has weight defining_weight under the ambient action; the
/// polarization is the restricted hyperplane bundle.  Construction checks
/// that an invariant polynomial of that degree and weight can exist, i.e.
/// defining_weight = <weights, I> is solvable with |I| = degree.
class HypersurfaceSpec {
public:
    HypersurfaceSpec(AmbientSpec ambient, int degree, long defining_weight);

    const AmbientSpec& ambient() const { return ambient_; }
    int degree() const { return degree_; }
    long defining_weight() const { return defining_weight_; }

    HypersurfaceSpec with_shift(long lambda) const {
        return HypersurfaceSpec(ambient_.with_shift(lambda), degree_, defining_weight_);
    }

private:
    AmbientSpec ambient_;
    int degree_;
    long defining_weight_;
};

/// Full-dimensional lattice polytope P in Z^n with the torus-weight
/// functional m -> <weights, m>; the toric model counts the lattice points
/// of kP as the sections of L^k.  Construction checks full-dimensionality.
class PolytopeSpec {
public:
    PolytopeSpec(int n, std::vector<std::vector<long>> vertices,
                 std::vector<long> weights, long linearization_shift = 0);

    int n() const { return n_; }
    const std::vector<std::vector<long>>& vertices() const { return vertices_; }
    const std::vector<long>& weights() const { return weights_; }
    long linearization_shift() const { return shift_; }

    PolytopeSpec with_shift(long lambda) const {
        return PolytopeSpec(n_, vertices_, weights_, lambda);
    }

    /// Facet-type inequalities <normal, x> <= offset cutting out P
    /// (computed once at construction; kP uses <normal, x> <= k * offset).
    struct HalfSpace {
        std::vector<long> normal;
        long offset;
    };
    const std::vector<HalfSpace>& half_spaces() const { return half_spaces_; }

private:
    int n_;
    std::vector<std::vector<long>> vertices_;
    std::vector<long> weights_;
    long shift_;
    std::vector<HalfSpace> half_spaces_;
};

/// Exact character data of (X, L^k): the equivariant Euler characteristic
/// and the total weight of the induced action on sections.  Both values
/// are integers (held as Rational for uniformity).
struct CharacterSample {
    long k;
    Rational chi;
    Rational weight;
};

using VarietySpec = std::variant<AmbientSpec, HypersurfaceSpec, PolytopeSpec>;

/// chi = C(k+d, d); weight = (sum of weights) * C(k+d, d+1) + lambda*k*chi.
CharacterSample ambient_character(const AmbientSpec& spec, long k);

/// Via the ideal sequence  0 -> O(k-m) -F-> O(k) -> O_X(k) -> 0:
/// chi(k) = chi_ambient(k) - chi_ambient(k-m) and the weight subtracts the
/// image of multiplication by F (raw ambient weights shifted by the weight
/// of F), then adds lambda * k * chi(k) once.  Terms with negative argument
/// vanish.
CharacterSample hypersurface_character(const HypersurfaceSpec& spec, long k);

/// chi = |kP ∩ Z^n|; weight = sum of <weights, m> over those lattice
/// points, plus lambda * k * chi.  Direct enumeration over the bounding box
/// of kP with half-space membership tests.
CharacterSample polytope_character(const PolytopeSpec& spec, long k);

/// Independent oracle: the same contracts computed by explicit monomial
/// enumeration instead of closed forms.  Throws resource_limit when the
/// ambient monomial count C(k+d, d) exceeds cap.
CharacterSample brute_force_character(const AmbientSpec& spec, long k,
                                      std::uint64_t cap = kDefaultEnumCap);
CharacterSample brute_force_character(const HypersurfaceSpec& spec, long k,
                                      std::uint64_t cap = kDefaultEnumCap);

/// Dispatch over the VarietySpec kinds.
CharacterSample character(const VarietySpec& spec, long k);

/// Dimension of the polarized variety a VarietySpec describes: d for
/// ambient, d-1 for a hypersurface, n for a polytope.
int dimension(const VarietySpec& spec);

/// The same spec with its linearization shift replaced by lambda.
VarietySpec with_shift(const VarietySpec& spec, long lambda);

} // namespace futaki
